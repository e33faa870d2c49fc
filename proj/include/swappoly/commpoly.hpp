#ifndef SWAPPOLY_COMMPOLY_HPP
#define SWAPPOLY_COMMPOLY_HPP

#include <map>
#include <vector>

#include "swappoly/rational.hpp"

namespace swappoly {

// Sparse multivariate commutative polynomial over Rational. Exponent vectors
// have fixed length nvars; canonical form stores no zero coefficients.
class CommPoly {
  public:
    CommPoly() : nvars_(0) {}
    explicit CommPoly(int nvars) : nvars_(nvars) {}
    static CommPoly constant(int nvars, const Rational& c);
    static CommPoly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exps, const Rational& c);

    friend CommPoly operator+(const CommPoly& a, const CommPoly& b);
    friend CommPoly operator-(const CommPoly& a, const CommPoly& b);
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    friend CommPoly operator*(const Rational& c, const CommPoly& a);
    CommPoly operator-() const;
    bool operator==(const CommPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Rational eval(const std::vector<Rational>& point) const;
    CommPoly pow(int e) const;

    // weighted degree; homogeneous test against a weight vector per variable
    long weighted_degree(const std::vector<long>& weights) const; // max over terms
    bool weighted_homogeneous(const std::vector<long>& weights, long degree) const;

    std::string str(const std::vector<std::string>& names) const;

  private:
    int nvars_;
    std::map<std::vector<int>, Rational> terms_;
};

} // namespace swappoly

#endif
