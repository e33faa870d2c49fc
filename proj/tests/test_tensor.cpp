#include "doctest.h"
#include "swappoly/error.hpp"
#include "swappoly/rng.hpp"
#include "swappoly/tensor.hpp"

using namespace swappoly;

TEST_CASE("swap operator basics") {
    TensorOperator sw = swap_operator(2);
    // exchanges flat indices 1 and 2, fixes 0 and 3
    CHECK(sw.matrix().at(0, 0) == Rational(1));
    CHECK(sw.matrix().at(2, 1) == Rational(1));
    CHECK(sw.matrix().at(1, 2) == Rational(1));
    CHECK(sw.matrix().at(3, 3) == Rational(1));
    CHECK(sw.matrix().at(1, 1) == Rational(0));
    for (int d = 2; d <= 4; ++d) {
        TensorOperator s = swap_operator(d);
        CHECK(s * s == TensorOperator::identity(d, 2)); // t^2 = 1
        CHECK(s.trace() == Rational(d));
    }
}

TEST_CASE("swap conjugation: t (a ox b) t = b ox a") {
    Rng rng(21);
    for (int d = 2; d <= 3; ++d) {
        TensorOperator sw = swap_operator(d);
        for (int t = 0; t < 6; ++t) {
            Matrix a = random_int_matrix(rng, d), b = random_int_matrix(rng, d);
            TensorOperator ab = kron(TensorOperator::from_matrix(a), TensorOperator::from_matrix(b));
            TensorOperator ba = kron(TensorOperator::from_matrix(b), TensorOperator::from_matrix(a));
            CHECK(sw * ab * sw == ba);
        }
    }
}

TEST_CASE("perm operator agrees with swap at (1,2)") {
    CHECK(perm_operator(Permutation({2, 1}), 2) == swap_operator(2));
    CHECK(perm_operator(Permutation({2, 1}), 3) == swap_operator(3));
    CHECK(perm_operator(Permutation::identity(3), 2) == TensorOperator::identity(2, 3));
}

TEST_CASE("perm operator trace and homomorphism over S3") {
    for (int d = 2; d <= 3; ++d) {
        for (const auto& s : all_permutations(3)) {
            TensorOperator ps = perm_operator(s, d);
            CHECK(ps.trace() == Rational(Integer::pow(Integer(d), s.num_cycles())));
            for (const auto& t : all_permutations(3)) {
                CHECK(ps * perm_operator(t, d) == perm_operator(s * t, d));
            }
        }
    }
}

TEST_CASE("trace_with_perm matches materialized product") {
    Rng rng(22);
    for (const auto& s : all_permutations(3)) {
        TensorOperator T(2, 3);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) T.matrix().at(i, j) = Rational(rng.uniform(-9, 9));
        CHECK(trace_with_perm(s, T) == (perm_operator(s, 2) * T).trace());
    }
}

TEST_CASE("decompose_sigma2") {
    TensorOperator id2 = TensorOperator::identity(2, 2), sw = swap_operator(2);
    auto r1 = decompose_sigma2(id2);
    CHECK(r1.a == Rational(1));
    CHECK(r1.b == Rational(0));
    CHECK(r1.residual_zero);
    auto r2 = decompose_sigma2(sw);
    CHECK(r2.a == Rational(0));
    CHECK(r2.b == Rational(1));
    CHECK(r2.residual_zero);
    auto r3 = decompose_sigma2(id2 + Rational(2) * sw);
    CHECK(r3.a == Rational(1));
    CHECK(r3.b == Rational(2));
    CHECK(r3.residual_zero);
}

TEST_CASE("decompose_sigma2 on random span elements and outside") {
    Rng rng(23);
    for (int d = 2; d <= 3; ++d) {
        TensorOperator sw = swap_operator(d);
        for (int t = 0; t < 20; ++t) {
            Rational a(rng.uniform(-99, 99), rng.uniform(1, 40));
            Rational b(rng.uniform(-99, 99), rng.uniform(1, 40));
            auto r = decompose_sigma2(a * TensorOperator::identity(d, 2) + b * sw);
            CHECK(r.a == a);
            CHECK(r.b == b);
            CHECK(r.residual_zero);
        }
        // kron of two random matrices is generically outside the span
        Matrix a = random_int_matrix(rng, d), b = random_int_matrix(rng, d);
        a.at(0, 1) += Rational(1, 7); // ensure not accidentally degenerate
        auto r = decompose_sigma2(kron(TensorOperator::from_matrix(a), TensorOperator::from_matrix(b)));
        CHECK(!r.residual_zero);
    }
    auto deg = decompose_sigma2(TensorOperator::identity(1, 2));
    CHECK(deg.degenerate);
}

TEST_CASE("minus swap also satisfies the Goldman relations") {
    for (int d = 2; d <= 3; ++d) {
        TensorOperator msw = Rational(-1) * swap_operator(d);
        CHECK(msw * msw == TensorOperator::identity(d, 2));
        Rng rng(24);
        Matrix a = random_int_matrix(rng, d), b = random_int_matrix(rng, d);
        TensorOperator ab = kron(TensorOperator::from_matrix(a), TensorOperator::from_matrix(b));
        TensorOperator ba = kron(TensorOperator::from_matrix(b), TensorOperator::from_matrix(a));
        CHECK(msw * ab * msw == ba); // (-t) x (-t)^{-1} conjugation unchanged
    }
}
