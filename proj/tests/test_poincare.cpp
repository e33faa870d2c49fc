#include "doctest.h"
#include "swappoly/poincare.hpp"
#include "swappoly/rng.hpp"

using namespace swappoly;

TEST_CASE("series arithmetic") {
    Series2 geo = series_free(5); // 1/(1-t-s): coeff (i,j) = C(i+j, i)
    CHECK(geo.coeff(0, 0) == Rational(1));
    CHECK(geo.coeff(2, 1) == Rational(3));
    CHECK(geo.coeff(3, 2) == Rational(10));
    Series2 prod = geo * (Series2::one(5) - Series2::monomial(5, 1, 0) - Series2::monomial(5, 0, 1));
    CHECK(prod.coeff(0, 0) == Rational(1));
    CHECK(prod.coeff(2, 1) == Rational(0));
}

TEST_CASE("free = algebra + identities, as series") {
    const int cap = 9;
    Series2 lhs = series_free(cap);
    Series2 rhs = series_algebra(cap) + series_identities(cap);
    for (int i = 0; i <= cap; ++i)
        for (int j = 0; i + j <= cap; ++j) CHECK(lhs.coeff(i, j) == rhs.coeff(i, j));
}

TEST_CASE("center and trace-ring series consistency") {
    const int cap = 8;
    // P(R) = 1/((1-t)(1-s)) + ts P(S); low coefficients sanity
    Series2 pr = series_algebra(cap);
    CHECK(pr.coeff(0, 0) == Rational(1));
    CHECK(pr.coeff(1, 0) == Rational(1));
    CHECK(pr.coeff(1, 1) == Rational(2)); // xy, yx
    CHECK(pr.coeff(0, 5) == Rational(1)); // y^5 only
    Series2 pz = series_center(cap);
    CHECK(pz.coeff(0, 0) == Rational(1));
    CHECK(pz.coeff(1, 1) == Rational(0));
    CHECK(pz.coeff(2, 2) == Rational(1)); // [x,y]^2
}

TEST_CASE("identities series starts at (2,3) and (3,2)") {
    Series2 pid = series_identities(8);
    for (int i = 0; i <= 8; ++i)
        for (int j = 0; i + j <= 8 && i + j < 5; ++j) CHECK(pid.coeff(i, j) == Rational(0));
    CHECK(pid.coeff(2, 3) == Rational(1));
    CHECK(pid.coeff(3, 2) == Rational(1));
    CHECK(pid.coeff(2, 2) == Rational(0));
    CHECK(pid.coeff(4, 1) == Rational(0));
}

TEST_CASE("rank oracle matches the series through total degree 7") {
    Rng rng(91);
    PoincareReport rep = poincare_check(7, rng);
    CHECK(rep.all_match);
    for (const auto& cell : rep.cells) {
        if (cell.i == 1 && cell.j == 1) CHECK(cell.dim_r == 2);
        if (cell.i == 0) CHECK(cell.dim_r == 1); // powers of y
        if (cell.i == 2 && cell.j == 3) CHECK(cell.id_codim == 1);
        if (cell.i == 3 && cell.j == 2) CHECK(cell.id_codim == 1);
        if (cell.i + cell.j < 5) CHECK(cell.id_codim == 0);
    }
}
