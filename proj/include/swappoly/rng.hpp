#ifndef SWAPPOLY_RNG_HPP
#define SWAPPOLY_RNG_HPP

#include <cstdint>
#include <string_view>

namespace swappoly {

// Deterministic cross-platform generator (splitmix64). std::mt19937 with
// uniform_int_distribution is not bit-reproducible across standard libraries,
// and reports must be byte-identical for a given seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi], rejection sampled
    long uniform(long lo, long hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<long>(v % range);
    }

    // Independent stream for a named check under a global seed.
    static Rng for_check(std::uint64_t seed, std::string_view check_id) {
        std::uint64_t h = 1469598103934665603ULL; // FNV-1a
        for (char c : check_id) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ULL;
        }
        return Rng(seed * 0x9e3779b97f4a7c15ULL ^ h);
    }

  private:
    std::uint64_t state_;
};

} // namespace swappoly

#endif
