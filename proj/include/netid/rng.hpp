#pragma once

#include <cstdint>
#include <random>

namespace netid {

// Sampling helpers on top of std::mt19937_64. The standard fully specifies the
// engine but not the distributions, so we draw variates ourselves to keep
// seeded runs bit-identical across platforms and standard libraries.

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_real(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(gen);
}

/// Uniform integer in [0, n), n >= 1, by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t n) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    return x % n;
}

}  // namespace netid
