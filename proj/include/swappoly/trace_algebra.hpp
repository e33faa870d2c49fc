#ifndef SWAPPOLY_TRACE_ALGEBRA_HPP
#define SWAPPOLY_TRACE_ALGEBRA_HPP

#include <array>

#include "swappoly/commpoly.hpp"
#include "swappoly/evaluate.hpp"
#include "swappoly/ncpoly.hpp"

namespace swappoly {

// The invariant ring T of two generic 2x2 matrices: polynomials in the five
// generators g1 = tr(x), g2 = det(x), g3 = tr(y), g4 = det(y), g5 = tr(xy).
// Bidegree weights in (x, y): (1,0), (2,0), (0,1), (0,2), (1,1).
class TPoly {
  public:
    TPoly() : p_(5) {}
    explicit TPoly(CommPoly p);
    static TPoly constant(const Rational& c) { return TPoly(CommPoly::constant(5, c)); }
    static TPoly one() { return constant(Rational(1)); }
    static TPoly generator(int i) { return TPoly(CommPoly::variable(5, i)); } // 0-based g1..g5
    static TPoly monomial(const std::array<int, 5>& exps, const Rational& c);

    const CommPoly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }

    friend TPoly operator+(const TPoly& a, const TPoly& b) { return TPoly(a.p_ + b.p_); }
    friend TPoly operator-(const TPoly& a, const TPoly& b) { return TPoly(a.p_ - b.p_); }
    friend TPoly operator*(const TPoly& a, const TPoly& b) { return TPoly(a.p_ * b.p_); }
    friend TPoly operator*(const Rational& c, const TPoly& a) { return TPoly(c * a.p_); }
    bool operator==(const TPoly& o) const { return p_ == o.p_; }

    // evaluation at a 2x2 pair via the generator values
    Rational eval(const Matrix& X, const Matrix& Y) const;
    static std::vector<Rational> generator_values(const Matrix& X, const Matrix& Y);

    // bidegree in (x, y) when homogeneous
    std::pair<long, long> bidegree_bound() const;

    std::string str() const;

  private:
    CommPoly p_;
};

// Element of the trace algebra S = T + Tx + Ty + Txy, a free T-module on the
// basis 1, x, y, xy. Representation is unique.
class SElement {
  public:
    SElement() : c_{TPoly(), TPoly(), TPoly(), TPoly()} {}
    static SElement one();
    static SElement basis(int i); // 0:1, 1:x, 2:y, 3:xy
    static SElement from_tpoly(const TPoly& t);

    const TPoly& coeff(int i) const { return c_[i]; }
    TPoly& coeff(int i) { return c_[i]; }

    friend SElement operator+(const SElement& a, const SElement& b);
    friend SElement operator-(const SElement& a, const SElement& b);
    friend SElement operator*(const TPoly& t, const SElement& a);
    friend SElement operator*(const Rational& c, const SElement& a);
    bool operator==(const SElement& o) const;

    bool is_t_multiple() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

    Matrix eval(const Matrix& X, const Matrix& Y) const;
    std::string str() const;

  private:
    std::array<TPoly, 4> c_;
};

// Product in S, reduced to the module basis via Cayley-Hamilton rewriting.
SElement s_multiply(const SElement& a, const SElement& b);

// Right multiplication by a single generic matrix.
SElement s_right_mul_x(const SElement& a);
SElement s_right_mul_y(const SElement& a);

// Image of a noncommutative polynomial in x, y (letters x1, y1) in S.
SElement nc_to_s(const NcPoly& p);

// [x,y]^2 as an element of T (the scalar is central, so the image of the
// bracket square has no x, y, xy components).
TPoly bracket_square_invariant();

} // namespace swappoly

#endif
