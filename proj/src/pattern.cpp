#include "swappoly/pattern.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>

#include "swappoly/error.hpp"
#include "swappoly/permutation.hpp"

namespace swappoly {

MonomialPattern MonomialPattern::single(std::vector<std::vector<Letter>> slots) {
    MonomialPattern p;
    p.slots = std::move(slots);
    std::vector<Letter> all;
    for (const auto& s : p.slots) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    p.alt_sets = {std::move(all)};
    return p;
}

namespace {

unsigned long long factorial_u64(size_t n) {
    unsigned long long r = 1;
    for (size_t i = 2; i <= n; ++i) r *= i;
    return r;
}

// One multiplicand of a slot: the v-th element of the alternation set
// (v >= 0) or the fixed matrix at index f of the constant pool.
struct Item {
    int v = -1;
    int f = -1;
};

struct StreamSpec {
    int d = 0;
    int m = 0; // alternation set size
    std::vector<std::vector<Item>> slots;
    int layout_sign = 1; // parity of the written variable layout vs sorted order
};

struct RatNum {
    using T = Rational;
    static T from_rational(const Rational& q) { return q; }
    static Rational to_rational(const T& v) { return v; }
};

struct IntNum {
    using T = std::int64_t;
    static T from_rational(const Rational& q) { return q.numerator().to_i64(); }
    static Rational to_rational(const T& v) { return Rational(static_cast<long>(v)); }
};

template <class NumTraits>
void stream_sum(const StreamSpec& spec, const std::vector<std::vector<typename NumTraits::T>>& setmats,
                const std::vector<std::vector<typename NumTraits::T>>& fixedmats, int threads,
                std::vector<typename NumTraits::T>& out) {
    using Num = typename NumTraits::T;
    const int d = spec.d;
    const int nslots = static_cast<int>(spec.slots.size());
    const int m = spec.m;

    long full_dim = 1;
    for (int s = 0; s < nslots; ++s) full_dim *= d;
    const size_t full_entries = static_cast<size_t>(full_dim) * full_dim;

    const int ntasks = std::max(m, 1);
    std::vector<std::vector<Num>> partials(ntasks);

    auto worker = [&](int first_choice) {
        std::vector<Num> acc(full_entries, Num{});
        std::vector<std::vector<Num>> kron_by_count(nslots + 1);
        {
            long dim = 1;
            for (int c = 0; c <= nslots; ++c) {
                kron_by_count[c].assign(static_cast<size_t>(dim) * dim, Num{});
                dim *= d;
            }
            kron_by_count[0][0] = Num{1};
        }
        std::vector<std::vector<Num>> cur(m + 1, std::vector<Num>(d * d));
        std::vector<std::vector<Num>> tmp(m + 1, std::vector<Num>(d * d));
        std::uint32_t used = 0;

        auto matmul = [&](std::vector<Num>& dst, const std::vector<Num>& a, const std::vector<Num>& b) {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    Num s{};
                    for (int k = 0; k < d; ++k) s += a[i * d + k] * b[k * d + j];
                    dst[i * d + j] = s;
                }
        };

        auto rec = [&](auto&& self, int slot, int item, int depth, int sign) -> void {
            const auto& items = spec.slots[slot];
            if (item == static_cast<int>(items.size())) {
                const int done = slot; // completed slots so far
                long kd = 1;
                for (int i = 0; i < done; ++i) kd *= d;
                const auto& K = kron_by_count[done];
                const auto& M = cur[depth];
                const long nd = kd * d;
                if (slot == nslots - 1) {
                    for (long I = 0; I < kd; ++I)
                        for (long J = 0; J < kd; ++J) {
                            const Num& kv = K[I * kd + J];
                            if (kv == Num{}) continue;
                            for (int a2 = 0; a2 < d; ++a2) {
                                const size_t row = static_cast<size_t>(I * d + a2) * nd + J * d;
                                for (int b2 = 0; b2 < d; ++b2) {
                                    const Num t = kv * M[a2 * d + b2];
                                    if (sign > 0)
                                        acc[row + b2] += t;
                                    else
                                        acc[row + b2] -= t;
                                }
                            }
                        }
                    return;
                }
                auto& KN = kron_by_count[done + 1];
                for (long I = 0; I < kd; ++I)
                    for (long J = 0; J < kd; ++J) {
                        const Num& kv = K[I * kd + J];
                        for (int a2 = 0; a2 < d; ++a2)
                            for (int b2 = 0; b2 < d; ++b2)
                                KN[static_cast<size_t>(I * d + a2) * nd + J * d + b2] = kv * M[a2 * d + b2];
                    }
                self(self, slot + 1, 0, depth, sign);
                return;
            }
            if (item == 0) {
                std::fill(cur[depth].begin(), cur[depth].end(), Num{});
                for (int i = 0; i < d; ++i) cur[depth][i * d + i] = Num{1};
            }
            const Item& it = items[item];
            if (it.v < 0) {
                matmul(tmp[depth], cur[depth], fixedmats[it.f]);
                cur[depth].swap(tmp[depth]);
                self(self, slot, item + 1, depth, sign);
                return;
            }
            for (int v = 0; v < m; ++v) {
                if (used & (1u << v)) continue;
                if (depth == 0 && v != first_choice) continue;
                int smaller = 0;
                for (int w = 0; w < v; ++w)
                    if (!(used & (1u << w))) ++smaller;
                const int nsign = (smaller % 2 == 0) ? sign : -sign;
                used |= 1u << v;
                matmul(tmp[depth], cur[depth], setmats[v]);
                cur[depth + 1].swap(tmp[depth]);
                self(self, slot, item + 1, depth + 1, nsign);
                used &= ~(1u << v);
            }
        };
        rec(rec, 0, 0, 0, 1);
        return acc;
    };

    if (m == 0) {
        // no alternation variables: a single product of constants
        partials[0] = worker(-1);
    } else if (threads <= 1 || m == 1) {
        for (int v = 0; v < m; ++v) partials[v] = worker(v);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        const int nt = std::min(threads, m);
        for (int t = 0; t < nt; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const int v = next.fetch_add(1);
                    if (v >= m) return;
                    partials[v] = worker(v);
                }
            });
        for (auto& th : pool) th.join();
    }

    out.assign(full_entries, Num{});
    for (const auto& p : partials)
        for (size_t i = 0; i < full_entries; ++i) out[i] += p[i];
    if (spec.layout_sign < 0)
        for (auto& v : out) v = Num{} - v;
}

// Builds the internal spec for alternating over `alt` (sorted), all other
// letters bound through `fixed_bind` (letter -> matrix).
struct BuildResult {
    StreamSpec spec;
    std::vector<const Matrix*> setmats;
    std::vector<const Matrix*> fixedmats;
};

BuildResult build_spec(const MonomialPattern& pat, const std::vector<Letter>& alt_sorted,
                       const std::map<Letter, const Matrix*>& fixed_bind, const Assignment& a) {
    BuildResult br;
    br.spec.d = a.d();
    br.spec.m = static_cast<int>(alt_sorted.size());
    if (br.spec.m > 20) throw BudgetError("alternation set too large", ~0ULL, 0);

    for (const auto& v : alt_sorted) br.setmats.push_back(&a.at(v));

    std::vector<int> layout; // rank of each variable position's letter
    for (const auto& slot : pat.slots) {
        std::vector<Item> items;
        for (const auto& l : slot) {
            auto it = std::lower_bound(alt_sorted.begin(), alt_sorted.end(), l);
            if (it != alt_sorted.end() && *it == l) {
                Item im;
                im.v = 0; // marks a variable position; identity recorded via layout
                items.push_back(im);
                layout.push_back(static_cast<int>(it - alt_sorted.begin()));
            } else {
                auto fit = fixed_bind.find(l);
                if (fit == fixed_bind.end()) throw Error("pattern letter not bound: " + l.str());
                Item im;
                im.f = static_cast<int>(br.fixedmats.size());
                im.v = -1;
                br.fixedmats.push_back(fit->second);
                items.push_back(im);
            }
        }
        br.spec.slots.push_back(std::move(items));
    }
    if (static_cast<int>(layout.size()) != br.spec.m)
        throw Error("alternation set does not match the pattern's variable positions");
    // duplicate letters in the set already caught by size mismatch; compute parity
    int inv = 0;
    for (size_t i = 0; i < layout.size(); ++i)
        for (size_t j = i + 1; j < layout.size(); ++j)
            if (layout[i] > layout[j]) ++inv;
    br.spec.layout_sign = inv % 2 == 0 ? 1 : -1;
    return br;
}

// int64 feasibility: every bound matrix integral and the worst-case
// accumulated magnitude below 2^62.
bool int64_feasible(const BuildResult& br, unsigned long long leaves) {
    auto max_abs = [](const Matrix& m) {
        Integer best(0);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                if (!m.at(i, j).is_integer()) return std::optional<Integer>();
                Integer v = m.at(i, j).numerator();
                if (v.sign() < 0) v = -v;
                if (best < v) best = v;
            }
        return std::optional<Integer>(best);
    };
    Integer set_best(0);
    for (const Matrix* m : br.setmats) {
        auto b = max_abs(*m);
        if (!b) return false;
        if (set_best < *b) set_best = *b;
    }
    std::vector<Integer> fixed_bounds;
    for (const Matrix* m : br.fixedmats) {
        auto b = max_abs(*m);
        if (!b) return false;
        fixed_bounds.push_back(*b);
    }
    const Integer dd(br.spec.d);
    Integer leaf(1);
    for (const auto& slot : br.spec.slots) {
        Integer bound(1);
        bool first = true;
        for (const auto& it : slot) {
            Integer factor = it.v >= 0 ? set_best : fixed_bounds[it.f];
            if (factor.is_zero()) factor = Integer(1);
            bound *= factor;
            if (!first) bound *= dd;
            first = false;
        }
        leaf *= bound;
    }
    Integer total = leaf;
    Integer nl(static_cast<long>(std::min<unsigned long long>(leaves, 1ULL << 62)));
    total *= nl;
    const Integer limit = Integer::pow(Integer(2), 62);
    return total < limit;
}

TensorOperator run_single_set(const MonomialPattern& pat, const std::vector<Letter>& alt_sorted,
                              const std::map<Letter, const Matrix*>& fixed_bind, const Assignment& a,
                              int threads, unsigned long long leaves) {
    BuildResult br = build_spec(pat, alt_sorted, fixed_bind, a);
    const int d = a.d();
    const int nslots = static_cast<int>(pat.slots.size());
    long full_dim = 1;
    for (int s = 0; s < nslots; ++s) full_dim *= d;
    Matrix result(full_dim, full_dim);

    if (int64_feasible(br, leaves)) {
        std::vector<std::vector<std::int64_t>> setm, fixm;
        for (const Matrix* m : br.setmats) {
            std::vector<std::int64_t> v;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) v.push_back(m->at(i, j).numerator().to_i64());
            setm.push_back(std::move(v));
        }
        for (const Matrix* m : br.fixedmats) {
            std::vector<std::int64_t> v;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) v.push_back(m->at(i, j).numerator().to_i64());
            fixm.push_back(std::move(v));
        }
        std::vector<std::int64_t> out;
        stream_sum<IntNum>(br.spec, setm, fixm, threads, out);
        for (long i = 0; i < full_dim; ++i)
            for (long j = 0; j < full_dim; ++j)
                result.at(i, j) = Rational(static_cast<long>(out[static_cast<size_t>(i) * full_dim + j]));
    } else {
        std::vector<std::vector<Rational>> setm, fixm;
        for (const Matrix* m : br.setmats) {
            std::vector<Rational> v;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) v.push_back(m->at(i, j));
            setm.push_back(std::move(v));
        }
        for (const Matrix* m : br.fixedmats) {
            std::vector<Rational> v;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) v.push_back(m->at(i, j));
            fixm.push_back(std::move(v));
        }
        std::vector<Rational> out;
        stream_sum<RatNum>(br.spec, setm, fixm, threads, out);
        for (long i = 0; i < full_dim; ++i)
            for (long j = 0; j < full_dim; ++j) result.at(i, j) = out[static_cast<size_t>(i) * full_dim + j];
    }
    return TensorOperator(d, nslots, std::move(result));
}

void validate_pattern(const MonomialPattern& pat) {
    if (pat.slots.empty()) throw Error("pattern needs at least one slot");
    if (pat.alt_sets.empty() || pat.alt_sets.size() > 2)
        throw Error("pattern needs one or two alternation sets");
    std::map<Letter, int> seen;
    for (const auto& slot : pat.slots)
        for (const auto& l : slot) ++seen[l];
    std::map<Letter, int> in_sets;
    for (const auto& set : pat.alt_sets)
        for (const auto& l : set) ++in_sets[l];
    for (const auto& [l, c] : seen) {
        if (c != 1) throw Error("pattern is not multilinear: " + l.str() + " occurs " + std::to_string(c) + " times");
        auto it = in_sets.find(l);
        if (it == in_sets.end() || it->second != 1)
            throw Error("pattern letter " + l.str() + " must belong to exactly one alternation set");
    }
    for (const auto& [l, c] : in_sets)
        if (!seen.count(l)) throw Error("alternation letter " + l.str() + " does not occur in the pattern");
}

} // namespace

TensorOperator alt_eval_stream(const MonomialPattern& pat, const Assignment& a,
                               const StreamBudget& budget, int threads) {
    validate_pattern(pat);
    unsigned long long leaves = 1;
    for (const auto& set : pat.alt_sets) {
        if (set.size() > 20) throw BudgetError("alternation set too large", ~0ULL, budget.max_monomial_evals);
        leaves *= factorial_u64(set.size());
        if (leaves > budget.max_monomial_evals)
            throw BudgetError("streaming alternation over budget", leaves, budget.max_monomial_evals);
    }

    if (pat.alt_sets.size() == 1) {
        std::vector<Letter> alt = pat.alt_sets[0];
        std::sort(alt.begin(), alt.end());
        std::map<Letter, const Matrix*> fixed; // none
        return run_single_set(pat, alt, fixed, a, threads, leaves);
    }

    // two sets: enumerate the first literally, stream the second
    std::vector<Letter> outer = pat.alt_sets[0];
    std::sort(outer.begin(), outer.end());
    std::vector<Letter> inner = pat.alt_sets[1];
    std::sort(inner.begin(), inner.end());
    MonomialPattern inner_pat;
    inner_pat.slots = pat.slots;
    inner_pat.alt_sets = {inner};

    const int m0 = static_cast<int>(outer.size());
    TensorOperator acc(a.d(), static_cast<int>(pat.slots.size()));
    const unsigned long long inner_leaves = factorial_u64(inner.size());
    for (const auto& sigma : all_permutations(m0)) {
        std::map<Letter, const Matrix*> fixed;
        for (int i = 1; i <= m0; ++i) fixed[outer[i - 1]] = &a.at(outer[sigma(i) - 1]);
        TensorOperator term = run_single_set(inner_pat, inner, fixed, a, threads, inner_leaves);
        acc = acc + Rational(sigma.sign()) * term;
    }
    return acc;
}

TensorOperator contract_interleave(const TensorOperator& tx, const TensorOperator& ty,
                                   const InterleaveDescriptor& inter) {
    if (tx.local_dim() != ty.local_dim()) throw DimensionError("contract: local dims differ");
    const int d = tx.local_dim();
    const int kx = tx.order(), ky = ty.order();
    std::vector<int> seen_x(kx, 0), seen_y(ky, 0);
    // edge layout: per chain c with L items, edges e(c,0..L); in-edge of item t
    // is e(c,t), out-edge e(c,t+1); e(c,0) and e(c,L) are free.
    struct SlotRef {
        int chain, item;
    };
    std::vector<SlotRef> xref(kx), yref(ky);
    int nedges = 0;
    std::vector<int> chain_edge0;
    for (size_t c = 0; c < inter.chains.size(); ++c) {
        chain_edge0.push_back(nedges);
        for (size_t t = 0; t < inter.chains[c].size(); ++t) {
            const ChainItem& it = inter.chains[c][t];
            if (it.side == 0) {
                if (it.slot < 0 || it.slot >= kx) throw Error("contract: bad x slot index");
                ++seen_x[it.slot];
                xref[it.slot] = {static_cast<int>(c), static_cast<int>(t)};
            } else {
                if (it.slot < 0 || it.slot >= ky) throw Error("contract: bad y slot index");
                ++seen_y[it.slot];
                yref[it.slot] = {static_cast<int>(c), static_cast<int>(t)};
            }
        }
        nedges += static_cast<int>(inter.chains[c].size()) + 1;
    }
    for (int s = 0; s < kx; ++s)
        if (seen_x[s] != 1) throw Error("contract: x slot " + std::to_string(s) + " used " + std::to_string(seen_x[s]) + " times");
    for (int s = 0; s < ky; ++s)
        if (seen_y[s] != 1) throw Error("contract: y slot used wrong number of times");

    const int nchains = static_cast<int>(inter.chains.size());
    TensorOperator res(d, nchains);
    const long rdim = res.dim();

    auto edge_of = [&](int chain, int idx) { return chain_edge0[chain] + idx; };

    std::vector<int> edge(nedges, 0);
    for (;;) {
        // gather multi-indices
        long xr = 0, xc = 0;
        for (int s = 0; s < kx; ++s) {
            xr = xr * d + edge[edge_of(xref[s].chain, xref[s].item)];
            xc = xc * d + edge[edge_of(xref[s].chain, xref[s].item + 1)];
        }
        const Rational& xv = tx.matrix().at(static_cast<int>(xr), static_cast<int>(xc));
        if (!xv.is_zero()) {
            long yr = 0, yc = 0;
            for (int s = 0; s < ky; ++s) {
                yr = yr * d + edge[edge_of(yref[s].chain, yref[s].item)];
                yc = yc * d + edge[edge_of(yref[s].chain, yref[s].item + 1)];
            }
            const Rational& yv = ty.matrix().at(static_cast<int>(yr), static_cast<int>(yc));
            if (!yv.is_zero()) {
                long rr = 0, rc = 0;
                for (int c = 0; c < nchains; ++c) {
                    rr = rr * d + edge[edge_of(c, 0)];
                    rc = rc * d + edge[edge_of(c, static_cast<int>(inter.chains[c].size()))];
                }
                (void)rdim;
                res.matrix().at(static_cast<int>(rr), static_cast<int>(rc)) += xv * yv;
            }
        }
        // odometer
        int p = nedges - 1;
        while (p >= 0 && edge[p] == d - 1) {
            edge[p] = 0;
            --p;
        }
        if (p < 0) break;
        ++edge[p];
    }
    return res;
}

TensorOperator split_alt_eval(const MonomialPattern& xpat, const MonomialPattern& ypat,
                              const InterleaveDescriptor& inter, const Assignment& a,
                              const StreamBudget& budget, int threads) {
    if (xpat.alt_sets.size() != 1 || ypat.alt_sets.size() != 1)
        throw Error("split_alt_eval expects single-set slot patterns");
    TensorOperator tx = alt_eval_stream(xpat, a, budget, threads);
    TensorOperator ty = alt_eval_stream(ypat, a, budget, threads);
    return contract_interleave(tx, ty, inter);
}

} // namespace swappoly
