#include "swappoly/identity_testing.hpp"

#include "swappoly/error.hpp"
#include "swappoly/rng.hpp"

namespace swappoly {

std::string to_string(TpiStatus s) {
    switch (s) {
        case TpiStatus::ProvedIdentity: return "proved identity";
        case TpiStatus::PlausiblyIdentity: return "plausibly identity";
        case TpiStatus::NotIdentity: return "not identity";
    }
    return "?";
}

TpiVerdict is_tpi(const TensorPoly2& t, int d, int trials, std::uint64_t seed,
                  unsigned long long exhaustion_cap) {
    if (trials < 1) throw Error("is_tpi needs trials >= 1");
    TpiVerdict v{TpiStatus::PlausiblyIdentity, 0, std::nullopt, ""};
    if (t.is_zero()) {
        v.status = TpiStatus::ProvedIdentity;
        v.note = "zero polynomial";
        return v;
    }
    const auto varset = t.variables();
    const std::vector<Letter> vars(varset.begin(), varset.end());

    Rng rng(seed);
    for (int i = 0; i < trials; ++i) {
        Assignment a = Assignment::random(rng, d, vars);
        ++v.trials_run;
        if (!eval_tensor(t, a).is_zero()) {
            v.status = TpiStatus::NotIdentity;
            v.witness = a;
            return v;
        }
    }

    if (t.multilinear_in(vars)) {
        // matrix units span M_d, so vanishing on all unit tuples proves the identity
        unsigned long long tuples = 1;
        bool feasible = true;
        for (size_t i = 0; i < vars.size() && feasible; ++i) {
            tuples *= static_cast<unsigned long long>(d) * d;
            if (tuples > exhaustion_cap) feasible = false;
        }
        if (feasible) {
            std::vector<int> idx(vars.size(), 0);
            const int units = d * d;
            for (;;) {
                Assignment a(d);
                for (size_t i = 0; i < vars.size(); ++i)
                    a.set(vars[i], Matrix::unit(d, idx[i] / d, idx[i] % d));
                if (!eval_tensor(t, a).is_zero()) {
                    v.status = TpiStatus::NotIdentity;
                    v.witness = a;
                    v.note = "matrix-unit counterexample";
                    return v;
                }
                size_t p = 0;
                while (p < idx.size() && idx[p] == units - 1) idx[p++] = 0;
                if (p == idx.size()) break;
                ++idx[p];
            }
            v.status = TpiStatus::ProvedIdentity;
            v.note = "multilinear matrix-unit exhaustion";
            return v;
        }
        v.note = "multilinear but matrix-unit exhaustion over cap";
    }
    return v;
}

} // namespace swappoly
