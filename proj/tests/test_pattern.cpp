#include "doctest.h"
#include "swappoly/error.hpp"
#include "swappoly/pattern.hpp"
#include "swappoly/rng.hpp"
#include "swappoly/weingarten.hpp"

using namespace swappoly;

namespace {

// Oracle: symbolic alternation + eval_tensor (completely independent of the
// streaming path).
TensorOperator alt_eval_symbolic(const MonomialPattern& pat, const Assignment& a) {
    TensorPoly2 t;
    if (pat.slots.size() == 1) {
        t.add_term(Word(pat.slots[0]), Word(), Rational(1));
    } else if (pat.slots.size() == 2) {
        t.add_term(Word(pat.slots[0]), Word(pat.slots[1]), Rational(1));
    } else {
        REQUIRE(false);
    }
    TensorPoly2 cur = t;
    for (const auto& set : pat.alt_sets) cur = alternate(cur, set);
    if (pat.slots.size() == 1) {
        // strip the dummy empty second slot
        Matrix acc(a.d(), a.d());
        for (const auto& [k, c] : cur.terms()) acc += c * eval(k.first, a);
        return TensorOperator::from_matrix(acc);
    }
    return eval_tensor(cur, a);
}

std::vector<Letter> letters_x(int lo, int hi) {
    std::vector<Letter> v;
    for (int i = lo; i <= hi; ++i) v.push_back(lx(i));
    return v;
}

} // namespace

TEST_CASE("streaming equals symbolic alternation, one set, d=2") {
    Rng rng(51);
    // slot shapes over 4 variables: (1,3), (3,1), (2,2), (4), (1,1,2)
    std::vector<std::vector<std::vector<Letter>>> shapes = {
        {{lx(1)}, {lx(2), lx(3), lx(4)}},
        {{lx(2), lx(3), lx(4)}, {lx(1)}},
        {{lx(1), lx(3)}, {lx(2), lx(4)}},
        {{lx(4), lx(3), lx(2), lx(1)}},
    };
    for (const auto& slots : shapes) {
        MonomialPattern pat = MonomialPattern::single(slots);
        for (int trial = 0; trial < 3; ++trial) {
            Assignment a = Assignment::random(rng, 2, letters_x(1, 4));
            CHECK(alt_eval_stream(pat, a) == alt_eval_symbolic(pat, a));
        }
    }
}

TEST_CASE("streaming equals symbolic alternation, two sets, d=2") {
    Rng rng(52);
    // Regev-type interleaved product m1(X) m1(Y) m2(X) m2(Y) as a single slot
    MonomialPattern pat;
    pat.slots = {{lx(1), ly(1), lx(2), lx(3), lx(4), ly(2), ly(3), ly(4)}};
    pat.alt_sets = {letters_x(1, 4), {ly(1), ly(2), ly(3), ly(4)}};
    std::vector<Letter> all = letters_x(1, 4);
    for (int i = 1; i <= 4; ++i) all.push_back(ly(i));
    for (int trial = 0; trial < 2; ++trial) {
        Assignment a = Assignment::random(rng, 2, all);
        CHECK(alt_eval_stream(pat, a) == alt_eval_symbolic(pat, a));
    }
    // and a two-slot variant: A ox B with A = x1 y2 y3 y4, B = x2 x3 x4 y1
    MonomialPattern pat2;
    pat2.slots = {{lx(1), ly(2), ly(3), ly(4)}, {lx(2), lx(3), lx(4), ly(1)}};
    pat2.alt_sets = pat.alt_sets;
    for (int trial = 0; trial < 2; ++trial) {
        Assignment a = Assignment::random(rng, 2, all);
        CHECK(alt_eval_stream(pat2, a) == alt_eval_symbolic(pat2, a));
    }
}

TEST_CASE("rational fallback path agrees with the int64 path") {
    Rng rng(53);
    MonomialPattern pat = MonomialPattern::single({{lx(1)}, {lx(2), lx(3), lx(4)}});
    Assignment a = Assignment::random(rng, 2, letters_x(1, 4));
    TensorOperator fast = alt_eval_stream(pat, a);
    // force the rational path with a fractional entry scale, then rescale
    Assignment b(2);
    const Rational half(1, 2);
    for (int i = 1; i <= 4; ++i) b.set(lx(i), half * a.at(lx(i)));
    TensorOperator slow = alt_eval_stream(pat, b);
    CHECK(Rational(16) * slow == fast); // degree 4 total
}

TEST_CASE("threaded run is identical") {
    Rng rng(54);
    MonomialPattern pat = MonomialPattern::single({{lx(1), lx(3)}, {lx(2), lx(4)}});
    Assignment a = Assignment::random(rng, 2, letters_x(1, 4));
    CHECK(alt_eval_stream(pat, a, {}, 1) == alt_eval_stream(pat, a, {}, 8));
}

TEST_CASE("degenerate: repeated matrix kills the alternation") {
    Rng rng(55);
    MonomialPattern pat = MonomialPattern::single({{lx(1)}, {lx(2), lx(3), lx(4)}});
    Assignment a = Assignment::random(rng, 2, letters_x(1, 4));
    a.set(lx(2), a.at(lx(1)));
    CHECK(alt_eval_stream(pat, a).is_zero());
}

TEST_CASE("budget refusal carries the estimate") {
    MonomialPattern pat = MonomialPattern::single({{lx(1)}, {lx(2), lx(3), lx(4)}});
    StreamBudget tiny{10};
    Rng rng(56);
    Assignment a = Assignment::random(rng, 2, letters_x(1, 4));
    try {
        alt_eval_stream(pat, a, tiny);
        FAIL("expected budget refusal");
    } catch (const BudgetError& e) {
        CHECK(e.estimate == 24);
        CHECK(e.budget == 10);
    }
}

TEST_CASE("split route equals naive double alternation, d=2") {
    Rng rng(57);
    std::vector<Letter> all = letters_x(1, 4);
    for (int i = 1; i <= 4; ++i) all.push_back(ly(i));

    // G1 = Alt_X Alt_Y (x1 y2y3y4) ox (x2x3x4 y1)
    MonomialPattern naive;
    naive.slots = {{lx(1), ly(2), ly(3), ly(4)}, {lx(2), lx(3), lx(4), ly(1)}};
    naive.alt_sets = {letters_x(1, 4), {ly(1), ly(2), ly(3), ly(4)}};

    MonomialPattern xpat = MonomialPattern::single({{lx(1)}, {lx(2), lx(3), lx(4)}});
    MonomialPattern ypat = MonomialPattern::single({{ly(1)}, {ly(2), ly(3), ly(4)}});
    InterleaveDescriptor inter;
    inter.chains = {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}}; // chain A: X.m1 Y.m2 ; chain B: X.m2 Y.m1

    for (int trial = 0; trial < 5; ++trial) {
        Assignment a = Assignment::random(rng, 2, all);
        CHECK(split_alt_eval(xpat, ypat, inter, a) == alt_eval_stream(naive, a));
    }

    // single-chain product (Regev F): X.m1 Y.m1 X.m2 Y.m2
    MonomialPattern naiveF;
    naiveF.slots = {{lx(1), ly(1), lx(2), lx(3), lx(4), ly(2), ly(3), ly(4)}};
    naiveF.alt_sets = naive.alt_sets;
    InterleaveDescriptor interF;
    interF.chains = {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
    for (int trial = 0; trial < 5; ++trial) {
        Assignment a = Assignment::random(rng, 2, all);
        CHECK(split_alt_eval(xpat, ypat, interF, a) == alt_eval_stream(naiveF, a));
    }
}

TEST_CASE("degree profiles off the refinement lattice vanish, d=2") {
    Rng rng(58);
    // valid profiles of 4 are permutations of refinements of (1,3); (2,2) and (4) are not
    for (const auto& slots : std::vector<std::vector<std::vector<Letter>>>{
             {{lx(1), lx(2)}, {lx(3), lx(4)}},
             {{lx(1), lx(2), lx(3), lx(4)}},
         }) {
        MonomialPattern pat = MonomialPattern::single(slots);
        for (int trial = 0; trial < 3; ++trial) {
            Assignment a = Assignment::random(rng, 2, letters_x(1, 4));
            CHECK(alt_eval_stream(pat, a).is_zero());
        }
    }
    // while the valid (1,1,2) profile generically does not vanish
    MonomialPattern ok = MonomialPattern::single({{lx(1)}, {lx(2)}, {lx(3), lx(4)}});
    Assignment a = Assignment::random(rng, 2, letters_x(1, 4));
    CHECK(!alt_eval_stream(ok, a).is_zero());
}

TEST_CASE("Alt_Y(n1 ox n2) = T_2(Y) Wg(2,2) operator, d=2") {
    Rng rng(59);
    MonomialPattern gd = MonomialPattern::single({{ly(1)}, {ly(2), ly(3), ly(4)}});
    TensorOperator wgop = algebra_to_operator(class_to_algebra(weingarten(2, 2)), 2);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Letter> ys = {ly(1), ly(2), ly(3), ly(4)};
        Assignment a = Assignment::random(rng, 2, ys);
        TensorOperator lhs = alt_eval_stream(gd, a);
        const Rational t2 = lhs.trace(); // T_d(Y) = tr of the alternated tensor
        CHECK(lhs == t2 * wgop);
    }
}
