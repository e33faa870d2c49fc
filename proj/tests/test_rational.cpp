#include "doctest.h"
#include "swappoly/error.hpp"
#include "swappoly/rational.hpp"
#include "swappoly/rng.hpp"

using namespace swappoly;

TEST_CASE("rationals are always canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, -4).denominator() == Integer(2));
    CHECK(Rational(2, -4).numerator() == Integer(-1));
    CHECK(Rational(0, -7).str() == "0");
    CHECK(Rational(0, -7).denominator() == Integer(1));
}

TEST_CASE("arithmetic") {
    Rational a(1, 3), b(-1, 6);
    CHECK((a + b) == Rational(1, 6));
    CHECK((a * b) == Rational(-1, 18));
    CHECK((a - b) == Rational(1, 2));
    CHECK((a / b) == Rational(-2));
    CHECK_THROWS_AS(a / Rational(0), Error);
    CHECK(Rational(-5, 7).inverse() == Rational(-7, 5));
}

TEST_CASE("string round trip is bit identical") {
    Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
        Rational q(rng.uniform(-1000000, 1000000), rng.uniform(1, 999983));
        Rational back = Rational::from_string(q.str());
        CHECK(back == q);
        CHECK(back.str() == q.str());
        CHECK(back.numerator() == q.numerator());
        CHECK(back.denominator() == q.denominator());
    }
    CHECK(Rational::from_string("-61/5").str() == "-61/5");
    CHECK_THROWS_AS(Rational::from_string("a/b"), ParseError);
}

TEST_CASE("big integers") {
    Integer f = Integer::factorial(30);
    CHECK(f.str() == "265252859812191058636308480000000");
    CHECK(!f.fits_i64());
    CHECK(Integer::gcd(Integer(48), Integer(-36)) == Integer(12));
    CHECK(Integer::div_exact(f, Integer::factorial(29)) == Integer(30));
    CHECK(Integer::pow(Integer(-3), 5) == Integer(-243));
    Rational big(Integer::factorial(20), Integer::factorial(21));
    CHECK(big == Rational(1, 21));
}

TEST_CASE("rng determinism") {
    Rng a = Rng::for_check(7, "some.check");
    Rng b = Rng::for_check(7, "some.check");
    Rng c = Rng::for_check(7, "other.check");
    bool same = true, differs = false;
    for (int i = 0; i < 50; ++i) {
        long va = a.uniform(-9, 9);
        if (va != b.uniform(-9, 9)) same = false;
        if (va != c.uniform(-9, 9)) differs = true;
        CHECK(va >= -9);
        CHECK(va <= 9);
    }
    CHECK(same);
    CHECK(differs);
}
