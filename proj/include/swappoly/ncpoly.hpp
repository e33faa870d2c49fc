#ifndef SWAPPOLY_NCPOLY_HPP
#define SWAPPOLY_NCPOLY_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "swappoly/rational.hpp"
#include "swappoly/word.hpp"

namespace swappoly {

// Guard for symbolic expansions (alternate and friends).
inline constexpr unsigned long long kDefaultTermCap = 10'000'000ULL;

// Noncommutative polynomial in canonical form: no zero coefficients stored,
// terms ordered by the Word order (degree, then lex).
class NcPoly {
  public:
    NcPoly() = default;
    explicit NcPoly(const Word& w) { terms_[w] = Rational(1); }
    static NcPoly constant(const Rational& c);
    static NcPoly zero() { return {}; }

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int num_terms() const { return static_cast<int>(terms_.size()); }

    void add_term(const Word& w, const Rational& c);

    friend NcPoly operator+(const NcPoly& a, const NcPoly& b);
    friend NcPoly operator-(const NcPoly& a, const NcPoly& b);
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
    friend NcPoly operator*(const Rational& c, const NcPoly& a);
    NcPoly operator-() const;

    bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }

    std::set<Letter> variables() const;
    // true when every term contains each of the given letters exactly once
    bool multilinear_in(const std::vector<Letter>& vars) const;
    // substitute letters simultaneously (used by alternation)
    NcPoly rename(const std::map<Letter, Letter>& sub) const;

    std::string str() const;

  private:
    std::map<Word, Rational> terms_;
};

// 2-tensor polynomial, canonical form as above.
class TensorPoly2 {
  public:
    TensorPoly2() = default;

    const std::map<std::pair<Word, Word>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int num_terms() const { return static_cast<int>(terms_.size()); }

    void add_term(const Word& a, const Word& b, const Rational& c);
    static TensorPoly2 simple(const NcPoly& a, const NcPoly& b); // a ox b expanded

    friend TensorPoly2 operator+(const TensorPoly2& a, const TensorPoly2& b);
    friend TensorPoly2 operator-(const TensorPoly2& a, const TensorPoly2& b);
    friend TensorPoly2 operator*(const Rational& c, const TensorPoly2& a);

    bool operator==(const TensorPoly2& o) const { return terms_ == o.terms_; }

    std::set<Letter> variables() const;
    bool multilinear_in(const std::vector<Letter>& vars) const;
    TensorPoly2 rename(const std::map<Letter, Letter>& sub) const;

    // Balanced: both slots of every term have the same single total degree D
    // across the whole polynomial; returns D (0 for the zero polynomial).
    std::optional<int> balanced_degree() const;
    bool balanced() const { return balanced_degree().has_value(); }

    // sum a_i * b_i (slotwise product), the central companion of a swap polynomial
    NcPoly slotwise_product() const;
    // sum a_i * zeta * b_i with a fresh letter between the slots
    NcPoly insert_between(const Letter& zeta) const;

    std::string str() const;

  private:
    std::map<std::pair<Word, Word>, Rational> terms_;
};

// Full alternation over the given letters: sum over all permutations of the
// letters with sign. Input must be multilinear in them; term count multiplies
// by |vars|! and is guarded by the cap.
NcPoly alternate(const NcPoly& p, const std::vector<Letter>& vars,
                 unsigned long long term_cap = kDefaultTermCap);
TensorPoly2 alternate(const TensorPoly2& p, const std::vector<Letter>& vars,
                      unsigned long long term_cap = kDefaultTermCap);

// St_k(x_1..x_k), the full alternating sum of products
NcPoly standard_poly(int k, unsigned long long term_cap = kDefaultTermCap);
// C_m(x_1..x_m; y_1..y_{m-1}), alternating x's interleaved with fixed y's
NcPoly capelli_poly(int m, unsigned long long term_cap = kDefaultTermCap);

} // namespace swappoly

#endif
