#ifndef SWAPPOLY_POINCARE_HPP
#define SWAPPOLY_POINCARE_HPP

#include <map>
#include <vector>

#include "swappoly/rational.hpp"

namespace swappoly {

class Rng;

// Bivariate power series in (t, s), truncated at total degree <= cap.
class Series2 {
  public:
    explicit Series2(int cap) : cap_(cap) {}
    static Series2 zero(int cap) { return Series2(cap); }
    static Series2 one(int cap);
    static Series2 monomial(int cap, int i, int j, const Rational& c = Rational(1));

    int cap() const { return cap_; }
    Rational coeff(int i, int j) const;
    void set(int i, int j, const Rational& c);

    friend Series2 operator+(const Series2& a, const Series2& b);
    friend Series2 operator-(const Series2& a, const Series2& b);
    friend Series2 operator*(const Series2& a, const Series2& b);
    // reciprocal; requires an invertible constant term
    Series2 inverse() const;

  private:
    int cap_;
    std::map<std::pair<int, int>, Rational> c_;
};

// The series of the structure theory of two generic 2x2 matrices
// (t tracks x-degree, s tracks y-degree):
//   invariants:  1/((1-t)(1-s)(1-t^2)(1-s^2)(1-ts))
//   trace ring:  (1+t+s+ts) * invariants
//   algebra R:   1/((1-t)(1-s)) + ts * trace ring
//   center:      1 + t^2 s^2 * invariants
//   identities:  t^2 s^2 (t+s-ts) (1-t)^-2 (1-s)^-2 (1-ts)^-1 (1-t-s)^-1
//   free algebra: (1-t-s)^-1
Series2 series_invariants(int cap);
Series2 series_trace_ring(int cap);
Series2 series_algebra(int cap);
Series2 series_center(int cap);
Series2 series_identities(int cap);
Series2 series_free(int cap);

// Rank-oracle dimensions of R in each bidegree, with the series comparison.
struct PoincareCell {
    int i, j;
    long words;        // dim of the free algebra component = C(i+j, i)
    long dim_r;        // measured by the rank oracle
    Rational series_r; // coefficient of the algebra series
    long id_codim;     // words - dim_r
    Rational series_id;
    bool matches; // both comparisons
};

struct PoincareReport {
    int maxdeg;
    std::vector<PoincareCell> cells;
    bool all_match = true;
};

// Evaluates all words of each bidegree (i+j <= maxdeg) at random exact 2x2
// pairs and takes exact ranks; the point count grows until the rank
// stabilizes under one extra point.
PoincareReport poincare_check(int maxdeg, Rng& rng, int base_points = 6);

} // namespace swappoly

#endif
