#ifndef SWAPPOLY_BRACKET_HPP
#define SWAPPOLY_BRACKET_HPP

#include <array>

#include "swappoly/ncpoly.hpp"
#include "swappoly/trace_algebra.hpp"

namespace swappoly {

// Normal form sum c * w [x,y] w' for the commutator ideal of the 2x2
// generic-matrix algebra: keys are the bordering word pairs (w, w') over the
// letters x1, y1.
class BracketForm {
  public:
    BracketForm() = default;
    static BracketForm single(const Word& w, const Word& wp, const Rational& c = Rational(1));

    const std::map<std::pair<Word, Word>, Rational>& terms() const { return terms_; }
    void add_term(const Word& w, const Word& wp, const Rational& c);
    bool is_zero() const { return terms_.empty(); }

    friend BracketForm operator+(const BracketForm& a, const BracketForm& b);
    friend BracketForm operator*(const Rational& c, const BracketForm& a);
    bool operator==(const BracketForm& o) const { return terms_ == o.terms_; }

    // expansion with [x,y] -> xy - yx
    NcPoly expand() const;

  private:
    std::map<std::pair<Word, Word>, Rational> terms_;
};

// Multiplication by one invariant generator, rewritten inside the bracket
// form (the absorbed expansion equals generator * expand(f) as a matrix
// function on 2x2 pairs):
//   tr(x)  w[x,y]w' = w[x,y]x w' + w x[x,y]w'
//   tr(y)  w[x,y]w' = w[x,y]y w' + w y[x,y]w'
//   det(x) w[x,y]w' = w x[x,y]x w'
//   det(y) w[x,y]w' = w y[x,y]y w'
//   tr(xy) w[x,y]w' = w xy[x,y]w' + w[x,y]yx w'
// gen is 0-based: 0 tr(x), 1 det(x), 2 tr(y), 3 det(y), 4 tr(xy).
BracketForm absorb_generator(int gen, const BracketForm& f);

// Absorbs a whole invariant monomial g1^e1..g5^e5, stripping generators in
// the fixed order g3, g5, g2, g4, g1, then expands to a noncommutative
// polynomial. The result equals monomial * expand(f) as a matrix function.
NcPoly absorb_invariant(const std::array<int, 5>& exps, const BracketForm& f);

// Same for a full invariant polynomial (absorbing monomial by monomial).
NcPoly absorb_invariant(const TPoly& t, const BracketForm& f);

// Bracket forms of the building blocks used by the swap constructions:
// z = [x,y]:            ( , )
// z^2 = z*z:            (xy, ) - (yx, )
// z^2 * u (u a word):   (xy, u) - (yx, u)
BracketForm bracket_z();
BracketForm bracket_z2_times(const Word& u);
// w * z * w' for explicit borders
inline BracketForm bracket_bordered(const Word& w, const Word& wp) { return BracketForm::single(w, wp); }

} // namespace swappoly

#endif
