#pragma once

#include <cstdint>

namespace polyfree {

/// SplitMix64: the reference 64-bit mixing generator. All randomized suites in
/// this library draw from it so that verdicts are reproducible across runs and
/// platforms from a single seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound). bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) {
        // Rejection sampling keeps the distribution exactly uniform.
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t state_;
};

/// Derives an independent per-trial seed from a master seed, so that trial i
/// produces the same stream no matter how trials are partitioned across
/// workers.
inline std::uint64_t fork_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0x1f123bb5159a55e5ULL * (index + 1)));
    return g.next();
}

} // namespace polyfree
