#ifndef SWAPPOLY_IDENTITY_TESTING_HPP
#define SWAPPOLY_IDENTITY_TESTING_HPP

#include <optional>
#include <string>

#include "swappoly/evaluate.hpp"

namespace swappoly {

enum class TpiStatus { ProvedIdentity, PlausiblyIdentity, NotIdentity };

struct TpiVerdict {
    TpiStatus status;
    int trials_run = 0;
    // witness evaluation for NotIdentity
    std::optional<Assignment> witness;
    std::string note;
};

std::string to_string(TpiStatus s);

// Randomized tensor-polynomial-identity test: evaluates at `trials` seeded
// integer points (entries in [-9,9]); exact arithmetic makes any nonzero a
// disproof. When every trial vanishes and the polynomial is multilinear, an
// exhaustive matrix-unit sweep upgrades the verdict to a proof.
TpiVerdict is_tpi(const TensorPoly2& t, int d, int trials, std::uint64_t seed,
                  unsigned long long exhaustion_cap = 1u << 22);

} // namespace swappoly

#endif
