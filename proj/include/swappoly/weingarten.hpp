#ifndef SWAPPOLY_WEINGARTEN_HPP
#define SWAPPOLY_WEINGARTEN_HPP

#include <map>

#include "swappoly/partition.hpp"
#include "swappoly/permutation.hpp"
#include "swappoly/tensor.hpp"

namespace swappoly {

// Class function on S_n: one exact value per cycle type.
class ClassFunction {
  public:
    ClassFunction() : n_(0) {}
    explicit ClassFunction(int n);

    int n() const { return n_; }
    const Rational& at(const Partition& mu) const;
    void set(const Partition& mu, Rational v);
    Rational at_permutation(const Permutation& s) const;
    const std::map<Partition, Rational>& values() const { return vals_; }

    ClassFunction scaled(const Rational& c) const;

  private:
    int n_;
    std::map<Partition, Rational> vals_;
};

// Finitely supported element of the group algebra Q[S_n].
class GroupAlgebraElement {
  public:
    GroupAlgebraElement() : n_(0) {}
    explicit GroupAlgebraElement(int n) : n_(n) {}

    int n() const { return n_; }
    void add(const Permutation& s, const Rational& c);
    const std::map<Permutation, Rational>& coeffs() const { return coeffs_; }

    friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    // convolution product, (a*b) = sum a_s b_t (s t)
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    GroupAlgebraElement scaled(const Rational& c) const;

    bool operator==(const GroupAlgebraElement& o) const;

  private:
    int n_;
    std::map<Permutation, Rational> coeffs_; // zero coefficients not stored
};

// The Weingarten class function Wg(n,d): value at class mu is
//   (1/n!^2) sum_{lambda |- n, ht(lambda) <= d} chi_lambda(1)^2 chi_lambda(mu) / s_{lambda,d}(1),
// normalized so that op(Phi(1)) op(Wg) is exactly the identity on (F^d)^{ox n}.
ClassFunction weingarten(int n, int d);

// Phi(A) = sum_sigma tr(sigma o A) sigma^{-1}
GroupAlgebraElement phi_transform(const TensorOperator& A);

// Phi(1) = sum_sigma d^{#cycles(sigma)} sigma^{-1} (a class function times classes)
GroupAlgebraElement phi_of_identity(int n, int d);

GroupAlgebraElement class_to_algebra(const ClassFunction& c);
TensorOperator algebra_to_operator(const GroupAlgebraElement& g, int d);

// Whether op(g) is the identity operator on (F^d)^{ox n}, checked by the
// action on all d^n basis vectors (no d^n x d^n matrix is materialized, so
// this stays cheap for n > d collapses like (6,5)).
bool acts_as_identity(const GroupAlgebraElement& g, int d);

} // namespace swappoly

#endif
