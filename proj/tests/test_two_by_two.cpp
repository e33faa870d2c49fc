#include "doctest.h"
#include "swappoly/error.hpp"
#include "swappoly/evaluate.hpp"
#include "swappoly/identity_testing.hpp"
#include "swappoly/rng.hpp"
#include "swappoly/two_by_two.hpp"

using namespace swappoly;

namespace {

struct Pair {
    Matrix X, Y;
};

Pair random_pair(Rng& rng) { return {random_int_matrix(rng, 2), random_int_matrix(rng, 2)}; }

Matrix comm(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Assignment assign(const Pair& p) {
    Assignment a(2);
    a.set(lx(1), p.X);
    a.set(ly(1), p.Y);
    return a;
}

SElement rand_selement(Rng& rng) {
    SElement s;
    for (int i = 0; i < 4; ++i) {
        std::array<int, 5> e{};
        for (int g = 0; g < 5; ++g) e[g] = static_cast<int>(rng.uniform(0, 1));
        s.coeff(i) = s.coeff(i) + TPoly::monomial(e, Rational(rng.uniform(-4, 4)));
    }
    return s;
}

} // namespace

TEST_CASE("cayley-hamilton rewrite table") {
    // x*x = tr(x) x - det(x)
    SElement xx = s_multiply(SElement::basis(1), SElement::basis(1));
    SElement want;
    want.coeff(1) = TPoly::generator(0);
    want.coeff(0) = Rational(-1) * TPoly::generator(1);
    CHECK(xx == want);
    // y*x = -xy + tr(x) y + tr(y) x + (tr(xy) - tr(x)tr(y))
    SElement yx = s_multiply(SElement::basis(2), SElement::basis(1));
    SElement w2;
    w2.coeff(3) = Rational(-1) * TPoly::one();
    w2.coeff(2) = TPoly::generator(0);
    w2.coeff(1) = TPoly::generator(2);
    w2.coeff(0) = TPoly::generator(4) - TPoly::generator(0) * TPoly::generator(2);
    CHECK(yx == w2);
}

TEST_CASE("s_multiply is numerically faithful and associative") {
    Rng rng(71);
    for (int t = 0; t < 10; ++t) {
        SElement a = rand_selement(rng), b = rand_selement(rng), c = rand_selement(rng);
        Pair p = random_pair(rng);
        CHECK(s_multiply(a, b).eval(p.X, p.Y) == a.eval(p.X, p.Y) * b.eval(p.X, p.Y));
        CHECK(s_multiply(s_multiply(a, b), c) == s_multiply(a, s_multiply(b, c)));
    }
}

TEST_CASE("nc_to_s") {
    const NcPoly x(Word::of({lx(1)})), y(Word::of({ly(1)}));
    CHECK(nc_to_s(x * y) == SElement::basis(3));
    // xyxy - yxyx = tr(xy) [x,y]
    SElement lhs = nc_to_s(x * y * x * y - y * x * y * x);
    SElement bracket = nc_to_s(x * y - y * x);
    CHECK(lhs == TPoly::generator(4) * bracket);
    Rng rng(72);
    for (int t = 0; t < 10; ++t) {
        Pair p = random_pair(rng);
        NcPoly q = x * y * x - Rational(3) * y * y + NcPoly(Word());
        CHECK(nc_to_s(q).eval(p.X, p.Y) == eval(q, assign(p)));
    }
}

TEST_CASE("bracket square is a known invariant") {
    // [x,y]^2 = g5^2 - g1 g3 g5 + g1^2 g4 + g2 g3^2 - 4 g2 g4  (as scalar)
    TPoly c = bracket_square_invariant();
    TPoly want = TPoly::monomial({0, 0, 0, 0, 2}, Rational(1)) + TPoly::monomial({1, 0, 1, 0, 1}, Rational(-1)) +
                 TPoly::monomial({2, 0, 0, 1, 0}, Rational(1)) + TPoly::monomial({0, 1, 2, 0, 0}, Rational(1)) +
                 TPoly::monomial({0, 1, 0, 1, 0}, Rational(-4));
    CHECK(c == want);
    Rng rng(73);
    for (int t = 0; t < 6; ++t) {
        Pair p = random_pair(rng);
        const Matrix z = comm(p.X, p.Y);
        CHECK(z * z == (-z.det()) * Matrix::identity(2)); // scalar by Cayley-Hamilton
        CHECK(c.eval(p.X, p.Y) == -z.det());
    }
}

TEST_CASE("the five rewriting identities hold at random pairs") {
    Rng rng(74);
    for (int t = 0; t < 10; ++t) {
        Pair p = random_pair(rng);
        const Matrix z = comm(p.X, p.Y);
        CHECK(z * p.X == p.X.trace() * z - p.X * z);
        CHECK(z * p.Y == p.Y.trace() * z - p.Y * z);
        CHECK(p.X.det() * z == p.X * z * p.X);
        CHECK(p.Y.det() * z == p.Y * z * p.Y);
        CHECK((p.X * p.Y).trace() * z ==
              p.X * p.Y * p.X * p.Y - p.Y * p.X * p.Y * p.X);
    }
}

TEST_CASE("absorb_generator is numerically faithful") {
    Rng rng(75);
    const std::vector<Rational> genval_signs; // silence unused warnings pattern
    for (int gen = 0; gen < 5; ++gen) {
        for (int t = 0; t < 6; ++t) {
            // random bracket form with up to 3 bordered terms
            BracketForm f;
            for (int k = 0; k < 3; ++k) {
                auto rand_word = [&] {
                    std::vector<Letter> w;
                    const int len = static_cast<int>(rng.uniform(0, 2));
                    for (int i = 0; i < len; ++i) w.push_back(rng.uniform(0, 1) ? lx(1) : ly(1));
                    return Word(std::move(w));
                };
                f.add_term(rand_word(), rand_word(), Rational(rng.uniform(-3, 3)));
            }
            Pair p = random_pair(rng);
            Assignment a = assign(p);
            const auto gv = TPoly::generator_values(p.X, p.Y);
            CHECK(eval(absorb_generator(gen, f).expand(), a) == gv[gen] * eval(f.expand(), a));
        }
    }
}

TEST_CASE("absorb_invariant is numerically faithful and preserves degrees") {
    Rng rng(76);
    const std::array<int, 5> mono{1, 1, 2, 0, 1}; // g1 g2 g3^2 g5
    BracketForm f = BracketForm::single(Word::of({lx(1)}), Word::of({ly(1)}));
    const NcPoly out = absorb_invariant(mono, f);
    // degree: |w| + 2 + |w'| + (1 + 2 + 2 + 2) = 4 + 7
    for (const auto& [w, c] : out.terms()) CHECK(w.degree() == 11);
    for (int t = 0; t < 10; ++t) {
        Pair p = random_pair(rng);
        Assignment a = assign(p);
        const auto gv = TPoly::generator_values(p.X, p.Y);
        const Rational scalar = gv[0] * gv[1] * gv[2] * gv[2] * gv[4];
        CHECK(eval(out, a) == scalar * eval(f.expand(), a));
    }
    // identity monomial leaves the expansion unchanged
    CHECK(absorb_invariant(std::array<int, 5>{0, 0, 0, 0, 0}, f) == f.expand());
}

TEST_CASE("P evaluates to the bracket-square multiple of the swap") {
    const TensorPoly2 p = P_xy();
    Rng rng(77);
    for (int t = 0; t < 10; ++t) {
        Pair pr = random_pair(rng);
        const Rational c = -comm(pr.X, pr.Y).det();
        CHECK(eval_tensor(p, assign(pr)) == c * swap_operator(2));
    }
    // nilpotent pair: [x,y]^2 = Id there
    Pair nil{Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0)};
    CHECK(eval_tensor(p, assign(nil)) == swap_operator(2));
    // x = y kills the bracket
    Rng rng2(78);
    Matrix m = random_int_matrix(rng2, 2);
    Assignment a(2);
    a.set(lx(1), m);
    a.set(ly(1), m);
    CHECK(eval_tensor(p, a).is_zero());
}

TEST_CASE("Q: 40 balanced terms with the stated value") {
    const TensorPoly2 q = Q_xy();
    CHECK(q.num_terms() == 40);
    REQUIRE(q.balanced());
    CHECK(*q.balanced_degree() == 5);
    Rng rng(79);
    for (int t = 0; t < 10; ++t) {
        Pair pr = random_pair(rng);
        const Rational dz = comm(pr.X, pr.Y).det();
        const Rational scalar = pr.Y.trace() * pr.Y.trace() * dz * dz;
        CHECK(eval_tensor(q, assign(pr)) == scalar * swap_operator(2));
    }
    Pair nil{Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0)};
    CHECK(eval_tensor(q, assign(nil)).is_zero()); // tr(y) = 0 there
}

TEST_CASE("Q proved exactly on generic matrices") {
    const auto entries = gen2::eval_tensor(Q_xy());
    const CommPoly c = gen2::bracket_square_scalar();
    const CommPoly ty = gen2::trace(gen2::generic_y());
    const CommPoly scalar = ty * ty * c * c;
    const TensorOperator sw = swap_operator(2);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(entries[i * 4 + j] == (sw.matrix().at(i, j).is_zero() ? CommPoly(8) : scalar));
}

TEST_CASE("the displayed four-summand split does not have the target value") {
    const TensorPoly2 disp = teo_displayed_split();
    const auto entries = gen2::eval_tensor(disp);
    const CommPoly c = gen2::bracket_square_scalar();
    const CommPoly ty = gen2::trace(gen2::generic_y());
    const CommPoly scalar = ty * ty * c * c;
    const TensorOperator sw = swap_operator(2);
    bool all_match = true;
    for (int i = 0; i < 4 && all_match; ++i)
        for (int j = 0; j < 4 && all_match; ++j)
            all_match = entries[i * 4 + j] == (sw.matrix().at(i, j).is_zero() ? CommPoly(8) : scalar);
    CHECK(!all_match); // documented discrepancy in the printed split
}

TEST_CASE("balanced_Q_prime: balanced pure rewrite with Q's value") {
    const TensorPoly2& qp = balanced_Q_prime(); // construction certifies generically
    REQUIRE(qp.balanced());
    CHECK(*qp.balanced_degree() == 5);
    for (const auto& [k, c] : qp.terms()) {
        CHECK(k.first.degree_in(Family::X) + k.second.degree_in(Family::X) == 4);
        CHECK(k.first.degree_in(Family::Y) + k.second.degree_in(Family::Y) == 6);
    }
    Rng rng(80);
    for (int t = 0; t < 5; ++t) {
        Pair pr = random_pair(rng);
        const Rational dz = comm(pr.X, pr.Y).det();
        const Rational scalar = pr.Y.trace() * pr.Y.trace() * dz * dz;
        CHECK(eval_tensor(qp, assign(pr)) == scalar * swap_operator(2));
    }
    // exact verdict on Q' - Q (the source leaves the comparison open)
    const bool same = is_tpi_generic_2x2(qp - Q_xy());
    // either outcome is acceptable; randomized testing must agree with it
    auto verdict = is_tpi(qp - Q_xy(), 2, 8, 4242);
    if (same)
        CHECK(verdict.status != TpiStatus::NotIdentity);
    else
        CHECK(verdict.status == TpiStatus::NotIdentity);
    MESSAGE("Q' equals Q as a tensor polynomial identity: ", same ? "yes" : "no");
}

TEST_CASE("balanced degree-10 variants for the other trace choices") {
    for (auto [a, b] : {std::pair<int, int>{0, 0}, {0, 1}}) {
        const TensorPoly2 t = balanced_degree10(a, b); // certified internally
        CHECK(t.balanced());
        CHECK(*t.balanced_degree() == 5);
    }
}

TEST_CASE("slotwise products of swap polynomials are central (symbolically)") {
    CHECK(nc_to_s(P_xy().slotwise_product()).is_t_multiple());
    CHECK(nc_to_s(Q_xy().slotwise_product()).is_t_multiple());
    CHECK(nc_to_s(balanced_Q_prime().slotwise_product()).is_t_multiple());
}

TEST_CASE("esss family") {
    CHECK_THROWS_AS(esss_family(1, 1, EsssChoices{{0, 1}, {2}}), PreconditionError);
    CHECK_THROWS_AS(esss_family(0, 2, EsssChoices{{}, {0, 0}}), PreconditionError);

    Rng rng(81);
    struct Case {
        int h, k;
        EsssChoices ch;
    };
    const std::vector<Case> cases = {
        {1, 0, {{1, 1}, {}}},          // tr(y)^2, the Q family member
        {1, 2, {{0, 1}, {0, 2}}},      // tr(x)tr(y) det(x) tr(xy)
        {2, 1, {{0, 0, 1, 1}, {1}}},   // tr(x)^2 tr(y)^2 det(y)
        {2, 0, {{1, 1, 1, 1}, {}}},    // tr(y)^4
    };
    for (const auto& cs : cases) {
        const TensorPoly2 t = esss_family(cs.h, cs.k, cs.ch);
        REQUIRE(t.balanced());
        CHECK(*t.balanced_degree() == 4 + cs.h + cs.k);
        const TPoly A = esss_invariant(cs.ch);
        for (int trial = 0; trial < 5; ++trial) {
            Pair pr = random_pair(rng);
            const Rational c = -comm(pr.X, pr.Y).det();
            const Rational scalar = A.eval(pr.X, pr.Y) * c * c;
            CHECK(eval_tensor(t, assign(pr)) == scalar * swap_operator(2));
        }
    }
}

TEST_CASE("trace gram at the nilpotent pair") {
    auto rep = trace_gram(Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0));
    CHECK(rep.gram == Matrix{{2, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 1}});
    CHECK(rep.det == Rational(-1));
    CHECK(rep.bracket_square == Rational(1));
    CHECK(rep.det_matches);
    CHECK(!rep.singular);
    CHECK(rep.dual_basis_is_swap);
    CHECK(rep.scaled_matches_P);
    CHECK(!rep.lambda_as_printed); // printed cofactor table adjudicated incorrect
}

TEST_CASE("trace gram at random pairs") {
    Rng rng(82);
    int checked = 0;
    while (checked < 10) {
        Pair pr = random_pair(rng);
        auto rep = trace_gram(pr.X, pr.Y);
        CHECK(rep.det_matches);
        if (rep.singular) continue;
        CHECK(rep.dual_basis_is_swap);
        CHECK(rep.scaled_matches_P);
        ++checked;
    }
}
