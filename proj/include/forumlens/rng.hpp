#pragma once

#include <cstdint>
#include <random>

// Deterministic random helpers. std::uniform_*_distribution output is
// implementation-defined, so everything that feeds a golden file draws
// through these instead.

namespace forumlens {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent generator for (seed, stream); stream tags keep restarts
/// and sub-tasks order-independent.
inline std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ stream));
}

/// Unbiased draw from [0, n). n must be > 0.
inline std::uint64_t rng_below(std::mt19937_64& g, std::uint64_t n) {
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t v = g();
    while (v >= limit) v = g();
    return v % n;
}

/// Uniform double in [0, 1).
inline double rng_unit(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

}  // namespace forumlens
