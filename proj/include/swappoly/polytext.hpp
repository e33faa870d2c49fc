#ifndef SWAPPOLY_POLYTEXT_HPP
#define SWAPPOLY_POLYTEXT_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "swappoly/matrix.hpp"
#include "swappoly/ncpoly.hpp"

namespace swappoly {

// Plain-text polynomial format, one term per line:
//   <rational-coeff> <word>             (plain polynomial)
//   <rational-coeff> <word> | <word>    (2-tensor polynomial)
// Words are dot-separated letters ("x1.y2.x1"), "1" is the empty word.
// Printing is canonical (term order), so print/parse round-trips exactly.

std::string print_poly(const NcPoly& p);
std::string print_poly(const TensorPoly2& t);

using ParsedPoly = std::variant<NcPoly, TensorPoly2>;
ParsedPoly parse_poly(const std::string& text);

Letter parse_letter(const std::string& s);
Word parse_word(const std::string& s);

// Matrix assignment file: header "d k", then k matrices of d*d
// whitespace-separated rationals, assigned to the polynomial's variables in
// canonical order (family, then index).
std::vector<Matrix> parse_matrices(std::istream& in);

} // namespace swappoly

#endif
