#pragma once

#include <cstdint>

namespace nwd {

/// splitmix64: pinned, splittable 64-bit generator. Deterministic across
/// platforms; seeded scenes must reproduce bit-exactly, so the standard
/// library distributions (implementation-defined) are deliberately avoided.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        return next_u64() % n;
    }

    /// Independent substream (split).
    SplitMix64 fork() { return SplitMix64(next_u64()); }

private:
    std::uint64_t state_;
};

} // namespace nwd
