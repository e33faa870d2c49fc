#include "swappoly/constructions.hpp"

#include <mutex>

#include "swappoly/error.hpp"
#include "swappoly/rng.hpp"

namespace swappoly {

namespace {

Letter fam_letter(Family f, int i) { return Letter{f, i}; }

Assignment make_assignment(int d, Family fam, const std::vector<Matrix>& mats) {
    Assignment a(d);
    for (size_t i = 0; i < mats.size(); ++i) a.set(fam_letter(fam, static_cast<int>(i) + 1), mats[i]);
    return a;
}

Assignment make_xy_assignment(int d, const std::vector<Matrix>& xs, const std::vector<Matrix>& ys) {
    Assignment a(d);
    for (size_t i = 0; i < xs.size(); ++i) a.set(lx(static_cast<int>(i) + 1), xs[i]);
    for (size_t i = 0; i < ys.size(); ++i) a.set(ly(static_cast<int>(i) + 1), ys[i]);
    return a;
}

int isqrt_exact(size_t n) {
    int d = 0;
    while (static_cast<size_t>(d) * d < n) ++d;
    if (static_cast<size_t>(d) * d != n) throw Error("argument count is not a perfect square");
    return d;
}

} // namespace

std::vector<int> regev_profile(int d) {
    std::vector<int> p;
    for (int i = 1; i <= d; ++i) p.push_back(2 * i - 1);
    return p;
}

MonomialPattern regev_slot_pattern(Family fam, int d) {
    std::vector<std::vector<Letter>> slots;
    for (int i = 1; i <= d; ++i) {
        std::vector<Letter> slot;
        for (int v = (i - 1) * (i - 1) + 1; v <= i * i; ++v) slot.push_back(fam_letter(fam, v));
        slots.push_back(std::move(slot));
    }
    return MonomialPattern::single(std::move(slots));
}

Rational T_d(const std::vector<Matrix>& mats, const StreamBudget& budget, int threads) {
    const int d = isqrt_exact(mats.size());
    if (mats[0].rows() != d) throw DimensionError("T_d needs d^2 matrices of size d");
    const MonomialPattern pat = regev_slot_pattern(Family::X, d);
    const Assignment a = make_assignment(d, Family::X, mats);
    return alt_eval_stream(pat, a, budget, threads).trace();
}

Rational odd_trace_factor(const std::vector<Matrix>& mats) {
    const int k = static_cast<int>(mats.size());
    const NcPoly st = standard_poly(k);
    Assignment a = make_assignment(mats[0].rows(), Family::X, mats);
    return eval(st, a).trace();
}

Integer C_d(int d) {
    Integer num(1), den(1);
    for (int i = 1; i <= d; ++i) num *= Integer::factorial(2 * i - 1);
    for (int i = 1; i < d; ++i) den *= Integer::factorial(i);
    return Integer::div_exact(num, den);
}

Rational vectorized_det(const std::vector<Matrix>& mats) {
    const int d = isqrt_exact(mats.size());
    Matrix v(d * d, d * d);
    for (int r = 0; r < d * d; ++r)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) v.at(r, i * d + j) = mats[r].at(i, j);
    return v.det();
}

RegevResult regev_F_value(int d, const std::vector<Matrix>& xs, const std::vector<Matrix>& ys,
                          const StreamBudget& budget, int threads) {
    const MonomialPattern xpat = regev_slot_pattern(Family::X, d);
    const MonomialPattern ypat = regev_slot_pattern(Family::Y, d);
    const Assignment a = make_xy_assignment(d, xs, ys);
    const TensorOperator tx = alt_eval_stream(xpat, a, budget, threads);
    const TensorOperator ty = alt_eval_stream(ypat, a, budget, threads);
    InterleaveDescriptor inter;
    inter.chains.resize(1);
    for (int i = 0; i < d; ++i) {
        inter.chains[0].push_back({0, i});
        inter.chains[0].push_back({1, i});
    }
    const TensorOperator f = contract_interleave(tx, ty, inter);

    RegevResult res{f.matrix(), tx.trace(), ty.trace(), Rational(0), false};
    const Integer df = Integer::factorial(d);
    res.multiplier = Rational(Integer(1), df * df * Integer(2 * d - 1));
    if (d % 2 == 0) res.multiplier = -res.multiplier;
    res.matches_predicted = res.value == (res.multiplier * res.tx * res.ty) * Matrix::identity(d);
    return res;
}

bool regev_conductor_identity(const Matrix& z, const std::vector<Matrix>& xs,
                              const std::vector<Matrix>& ys, const StreamBudget& budget, int threads) {
    const int d = isqrt_exact(xs.size());
    std::vector<Matrix> zxs, zys;
    for (const auto& m : xs) zxs.push_back(z * m);
    for (const auto& m : ys) zys.push_back(z * m);
    const Matrix f = regev_F_value(d, xs, ys, budget, threads).value;
    const Matrix fzx = regev_F_value(d, zxs, ys, budget, threads).value;
    const Matrix fzy = regev_F_value(d, xs, zys, budget, threads).value;
    Rational zd(1);
    for (int i = 0; i < d; ++i) zd *= z.det();
    return fzx == zd * f && fzy == zd * f;
}

InterleaveDescriptor even_chain_AB(int d) {
    if (d % 2 != 0) throw PreconditionError("even-d construction needs even d");
    InterleaveDescriptor inter;
    std::vector<ChainItem> A, B;
    for (int j = 1; j <= d; ++j) A.push_back({j % 2 == 1 ? 0 : 1, j - 1});
    for (int j = d; j >= 1; --j) B.push_back({j % 2 == 0 ? 0 : 1, j - 1});
    inter.chains = {A, B};
    return inter;
}

InterleaveDescriptor even_chain_AC(int d) {
    if (d % 2 != 0) throw PreconditionError("even-d construction needs even d");
    InterleaveDescriptor inter;
    std::vector<ChainItem> A, C;
    for (int j = 1; j <= d; ++j) A.push_back({j % 2 == 1 ? 0 : 1, j - 1});
    C.push_back({1, 0});
    for (int j = d; j >= 2; --j) C.push_back({j % 2 == 0 ? 0 : 1, j - 1});
    inter.chains = {A, C};
    return inter;
}

EvenSwapAnalytic even_swap_analytic(int d) {
    if (d % 2 != 0 || d < 2) throw PreconditionError("even_swap_analytic needs even d >= 2");
    const ClassFunction wg = weingarten(d, d);
    EvenSwapAnalytic r;
    r.d = d;
    r.a_hh = wg.at(Partition({d / 2, d / 2}));
    r.a_d = wg.at(Partition({d}));
    const Rational dd(d);
    const Rational denom = dd * (Rational(1) - dd * dd); // d (1 - d^2)
    r.a1 = (r.a_d - dd * r.a_hh) / denom;
    r.b1 = -(dd * r.a_d - r.a_hh) / denom;
    r.a2 = -r.a_hh / (Rational(1) - dd * dd);
    r.b2 = r.a_hh / denom;
    r.combo_g1 = -r.a2;
    r.combo_g2 = r.a1;
    r.value_coeff = r.a_hh * r.a_d / (dd * dd * (Rational(1) - dd * dd));
    return r;
}

EvenSwapCertificate even_swap_certificate(int d, Rng& rng, int points, const StreamBudget& budget,
                                          int threads) {
    EvenSwapCertificate cert;
    cert.analytic = even_swap_analytic(d);
    const auto& an = cert.analytic;
    const MonomialPattern xpat = regev_slot_pattern(Family::X, d);
    const MonomialPattern ypat = regev_slot_pattern(Family::Y, d);
    const InterleaveDescriptor ab = even_chain_AB(d), ac = even_chain_AC(d);

    bool traces_ok = true, comps_ok = true, comb_ok = true, ratio_ok = true;
    bool have_ratio = false;
    for (int p = 0; p < points; ++p) {
        std::vector<Matrix> xs, ys;
        Rational tx, ty;
        TensorOperator txop, tyop;
        for (;;) { // resample degenerate points (T = 0)
            xs.clear();
            ys.clear();
            for (int i = 0; i < d * d; ++i) xs.push_back(random_int_matrix(rng, d));
            for (int i = 0; i < d * d; ++i) ys.push_back(random_int_matrix(rng, d));
            const Assignment a = make_xy_assignment(d, xs, ys);
            txop = alt_eval_stream(xpat, a, budget, threads);
            tyop = alt_eval_stream(ypat, a, budget, threads);
            tx = txop.trace();
            ty = tyop.trace();
            if (!tx.is_zero() && !ty.is_zero()) break;
        }
        const Rational tt = tx * ty;
        const TensorOperator g1 = contract_interleave(txop, tyop, ab);
        const TensorOperator g2 = contract_interleave(txop, tyop, ac);
        const TensorOperator sw = swap_operator(d);

        traces_ok = traces_ok && g1.trace() == tt * an.a_hh && g2.trace() == tt * an.a_hh &&
                    (sw * g1).trace() == tt * an.a_d && (sw * g2).trace().is_zero();

        const auto d1 = decompose_sigma2(g1);
        const auto d2 = decompose_sigma2(g2);
        comps_ok = comps_ok && d1.residual_zero && d2.residual_zero && d1.a == tt * an.a1 &&
                   d1.b == tt * an.b1 && d2.a == tt * an.a2 && d2.b == tt * an.b2;

        const TensorOperator comb = an.combo_g1 * g1 + an.combo_g2 * g2;
        const auto dc = decompose_sigma2(comb);
        comb_ok = comb_ok && dc.a.is_zero() && dc.residual_zero && !dc.b.is_zero() &&
                  dc.b == tt * an.value_coeff;

        const Rational dd_ratio = dc.b / (vectorized_det(xs) * vectorized_det(ys));
        if (!have_ratio) {
            cert.det_ratio = dd_ratio;
            have_ratio = true;
        } else if (dd_ratio != cert.det_ratio) {
            ratio_ok = false;
        }
        ++cert.points;
    }
    cert.trace_constraints_ok = traces_ok;
    cert.components_ok = comps_ok;
    cert.combination_is_swap = comb_ok;
    cert.ratio_constant = ratio_ok;
    return cert;
}

OddSwapD3Result odd_swap_d3(Rng& rng, int points, const StreamBudget& budget, int threads) {
    OddSwapD3Result r;
    const int d = 3;
    const ClassFunction wg33 = weingarten(3, 3);
    const ClassFunction wg43 = weingarten(4, 3);
    r.a3 = wg33.at(Partition({3}));
    // G1: tr G1 = 0 and tr((1,2)G1) = TT a_3 give
    r.a1 = r.a3 / (Rational(d) * (Rational(1) - Rational(d * d)));
    r.b1 = -r.a3 / (Rational(1) - Rational(d * d));
    // G2: tr G2 = TT t2 and tr((1,2)G2) = 0 give
    r.t2 = -wg43.at(Partition({1, 1, 1, 1})) + wg43.at(Partition({3, 1}));
    r.a2 = r.t2 / Rational(d * d - 1);
    r.b2 = -r.t2 / Rational(d * (d * d - 1));
    r.combo_value_coeff = -r.a2 * r.b1 + r.a1 * r.b2;

    // patterns
    const MonomialPattern xpat = regev_slot_pattern(Family::X, d);
    const MonomialPattern ypat = regev_slot_pattern(Family::Y, d);
    // M1 = x1 ox x3x4 ox m3(X) ox x2 ; M2 = y1 ox m3(Y) ox y2 ox y3y4
    const MonomialPattern m1pat = MonomialPattern::single(
        {{lx(1)}, {lx(3), lx(4)}, {lx(5), lx(6), lx(7), lx(8), lx(9)}, {lx(2)}});
    const MonomialPattern m2pat = MonomialPattern::single(
        {{ly(1)}, {ly(5), ly(6), ly(7), ly(8), ly(9)}, {ly(2)}, {ly(3), ly(4)}});
    // G1 = Alt(A ox B), A = m1(X) m2(Y) m3(X), B = m3(Y) m2(X) m1(Y)
    InterleaveDescriptor g1_chains;
    g1_chains.chains = {{{0, 0}, {1, 1}, {0, 2}}, {{1, 2}, {0, 1}, {1, 0}}};
    // G2 = Alt(A ox B), A = x1 y1 x3x4 m3(Y), B = y2 x2 y3y4 m3(X), via the
    // M1/M2 slots
    InterleaveDescriptor g2_chains;
    g2_chains.chains = {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {{1, 2}, {0, 3}, {1, 3}, {0, 2}}};

    const TensorOperator sw = swap_operator(d);
    const Permutation p12 = Permutation::from_cycles(4, {{1, 2}});
    const Permutation p24 = Permutation::from_cycles(4, {{2, 4}});
    const Permutation p14 = Permutation::from_cycles(4, {{1, 4}});
    const Permutation p34 = Permutation::from_cycles(4, {{3, 4}});
    const Permutation p12_34 = Permutation::from_cycles(4, {{1, 2}, {3, 4}});

    bool g1_zero = true, g1_swap = true, g1_comp = true;
    bool sem_ok = true, altz_ok = true, almu_ok = true;
    bool g2_tr = true, g2_swap_zero = true, g2_comp = true, comb_ok = true;

    for (int p = 0; p < points; ++p) {
        std::vector<Matrix> xs, ys;
        TensorOperator txop, tyop;
        Rational tx, ty;
        for (;;) {
            xs.clear();
            ys.clear();
            for (int i = 0; i < d * d; ++i) xs.push_back(random_int_matrix(rng, d));
            for (int i = 0; i < d * d; ++i) ys.push_back(random_int_matrix(rng, d));
            const Assignment a = make_xy_assignment(d, xs, ys);
            txop = alt_eval_stream(xpat, a, budget, threads);
            tyop = alt_eval_stream(ypat, a, budget, threads);
            tx = txop.trace();
            ty = tyop.trace();
            if (!tx.is_zero() && !ty.is_zero()) break;
        }
        const Assignment a = make_xy_assignment(d, xs, ys);
        const Rational tt = tx * ty;

        const TensorOperator g1 = contract_interleave(txop, tyop, g1_chains);
        g1_zero = g1_zero && g1.trace().is_zero();
        g1_swap = g1_swap && (sw * g1).trace() == tt * r.a3;
        const auto d1 = decompose_sigma2(g1);
        g1_comp = g1_comp && d1.residual_zero && d1.a == tt * r.a1 && d1.b == tt * r.b1;

        const TensorOperator tm1 = alt_eval_stream(m1pat, a, budget, threads);
        const TensorOperator tm2 = alt_eval_stream(m2pat, a, budget, threads);

        if (p == 0) {
            // Alt_X tr(sigma M1) vanishes off {(1,2),(2,4)}; signs -,+ there
            for (const auto& s : all_permutations(4)) {
                const Rational v = trace_with_perm(s, tm1);
                if (s == p12)
                    altz_ok = altz_ok && v == -tx;
                else if (s == p24)
                    altz_ok = altz_ok && v == tx;
                else
                    sem_ok = sem_ok && v.is_zero();
            }
            // Alt_Y tr(sigma M2) vanishes off {(3,4),(1,4)}; signs +,- there
            for (const auto& s : all_permutations(4)) {
                const Rational v = trace_with_perm(s, tm2);
                if (s == p34)
                    altz_ok = altz_ok && v == ty;
                else if (s == p14)
                    altz_ok = altz_ok && v == -ty;
                else
                    sem_ok = sem_ok && v.is_zero();
            }
            // order-4 operator identities Alt M = T * [diff] Wg(4,3)
            GroupAlgebraElement diff1(4), diff2(4);
            diff1.add(p24, Rational(1));
            diff1.add(p12, Rational(-1));
            diff2.add(p34, Rational(1));
            diff2.add(p14, Rational(-1));
            const GroupAlgebraElement wg_el = class_to_algebra(wg43);
            almu_ok = almu_ok && tm1 == tx * algebra_to_operator(diff1 * wg_el, d);
            almu_ok = almu_ok && tm2 == ty * algebra_to_operator(diff2 * wg_el, d);
        }

        // tr G2 = tr((1,2)(3,4) M1 M2) = TT t2 ; tr((1,2) G2) = 0
        g2_tr = g2_tr && trace_with_perm(p12_34, tm1 * tm2) == tt * r.t2;
        const TensorOperator g2 = contract_interleave(tm1, tm2, g2_chains);
        g2_tr = g2_tr && g2.trace() == tt * r.t2;
        g2_swap_zero = g2_swap_zero && (sw * g2).trace().is_zero();
        const auto d2c = decompose_sigma2(g2);
        g2_comp = g2_comp && d2c.residual_zero && d2c.a == tt * r.a2 && d2c.b == tt * r.b2;

        const TensorOperator comb = (-r.a2) * g1 + r.a1 * g2;
        const auto dc = decompose_sigma2(comb);
        comb_ok = comb_ok && dc.a.is_zero() && dc.residual_zero && !dc.b.is_zero() &&
                  dc.b == tt * r.combo_value_coeff;
        ++r.points;
    }
    r.tr_g1_zero = g1_zero;
    r.tr_swap_g1_matches = g1_swap;
    r.g1_components_ok = g1_comp;
    r.lemma_sem_ok = sem_ok;
    r.altz_signs_ok = altz_ok;
    r.almu_identities_ok = almu_ok;
    r.tr_g2_matches = g2_tr;
    r.tr_swap_g2_zero = g2_swap_zero;
    r.g2_components_ok = g2_comp;
    r.combination_is_swap = comb_ok;
    return r;
}

OddCoefficientResult odd_coefficient(int h) {
    if (h < 2) throw PreconditionError("odd_coefficient needs h >= 2");
    OddCoefficientResult r;
    r.h = h;
    r.d = 2 * h - 1;
    r.n = 2 * h;
    const ClassFunction wg = weingarten(r.n, r.d);

    std::vector<int> c1, c2;
    for (int i = 1; i <= h; ++i) c1.push_back(i);
    for (int i = h + 1; i <= 2 * h; ++i) c2.push_back(i);
    const Permutation tau = Permutation::from_cycles(r.n, {c1, c2});
    const Permutation p12 = Permutation::from_cycles(r.n, {{1, 2}});
    const Permutation p24 = Permutation::from_cycles(r.n, {{2, 4}});
    const Permutation p14 = Permutation::from_cycles(r.n, {{1, 4}});
    const Permutation p34 = Permutation::from_cycles(r.n, {{3, 4}});

    // the four sigmas solved from the gluing conditions, with signs -,+,+,-
    const Permutation s1 = p34 * p12 * tau;
    const Permutation s2 = p34 * p24 * tau;
    const Permutation s3 = p14 * p12 * tau;
    const Permutation s4 = p14 * p24 * tau;
    r.sigma_route = -wg.at_permutation(s1) + wg.at_permutation(s2) + wg.at_permutation(s3) -
                    wg.at_permutation(s4);
    for (const auto& s : {s1, s2, s3, s4}) r.sigma_cycle_types.push_back(Partition(s.cycle_type()).str());
    const Integer nf = Integer::factorial(r.n), df = Integer::factorial(r.d);
    r.sigma_scaled_n = Rational(nf * nf) * r.sigma_route;
    r.sigma_scaled_d = Rational(df * df) * r.sigma_route;
    r.nonzero = !r.sigma_route.is_zero();

    r.label_defined = h >= 3;
    if (r.label_defined) {
        auto part = [&](std::vector<int> parts) {
            std::erase(parts, 0);
            std::sort(parts.rbegin(), parts.rend());
            return Partition(parts);
        };
        r.label_route = -wg.at(part({1, 1, h - 2, h})) + Rational(2) * wg.at(part({h, h})) -
                        wg.at(part({1, 2, h - 3, h}));
        r.label_scaled_n = Rational(nf * nf) * r.label_route;
        r.routes_agree = r.label_route == r.sigma_route;
    } else {
        r.routes_agree = false;
    }
    return r;
}

const CapelliRoute& capelli_route_d2() {
    static std::mutex mtx;
    static CapelliRoute cached;
    static bool have = false;
    std::scoped_lock lock(mtx);
    if (have) return cached;
    cached.f = capelli_poly(4);
    for (int i = 1; i <= 4; ++i) {
        NcPoly fi;
        for (const auto& [w, c] : cached.f.terms()) {
            const auto& ls = w.letters();
            int pos = -1;
            for (size_t k = 0; k < ls.size(); ++k)
                if (ls[k] == lx(i)) {
                    pos = static_cast<int>(k);
                    break;
                }
            if (pos < 0) throw Error("capelli term misses an alternation variable");
            const Word before(std::vector<Letter>(ls.begin(), ls.begin() + pos));
            const Word after(std::vector<Letter>(ls.begin() + pos + 1, ls.end()));
            fi.add_term(after * before, c);
        }
        cached.companions[i - 1] = std::move(fi);
    }
    const Word zeta = Word::of({lzeta(1)});
    for (int i = 1; i <= 4; ++i) {
        const NcPoly xi(Word::of({lx(i)}));
        cached.h_central = cached.h_central + xi * NcPoly(zeta) * cached.companions[i - 1];
        cached.H = cached.H + TensorPoly2::simple(xi, cached.companions[i - 1]);
    }
    have = true;
    return cached;
}

DualBasisCertificate dual_basis_swap(const std::vector<Word>& monomials, const Assignment& a) {
    const int d = a.d();
    if (static_cast<int>(monomials.size()) != d * d)
        throw PreconditionError("dual_basis_swap needs d^2 monomials");
    DualBasisCertificate cert;
    std::vector<Matrix> vals;
    for (const auto& w : monomials) vals.push_back(eval(w, a));
    Matrix gram(d * d, d * d);
    for (int i = 0; i < d * d; ++i)
        for (int j = 0; j < d * d; ++j) gram.at(i, j) = (vals[i] * vals[j]).trace();
    cert.delta = gram.det();
    if (cert.delta.is_zero()) {
        cert.gram_singular = true;
        return cert;
    }
    // B_i = Delta * (dual of A_i): solve G C = Delta I, B_i = sum_k C[k][i] A_k
    const auto C = gram.solve(cert.delta * Matrix::identity(d * d));
    if (!C) {
        cert.gram_singular = true;
        return cert;
    }
    TensorOperator acc(d, 2);
    for (int i = 0; i < d * d; ++i) {
        Matrix bi(d, d);
        for (int k = 0; k < d * d; ++k) bi += C->at(k, i) * vals[k];
        acc = acc + kron(TensorOperator::from_matrix(vals[i]), TensorOperator::from_matrix(bi));
    }
    cert.identity_ok = acc == cert.delta * swap_operator(d);
    return cert;
}

} // namespace swappoly
