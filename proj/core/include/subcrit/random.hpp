#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace subcrit {

// All sampling in the library goes through mt19937_64 plus the helpers below,
// so results are bit-identical across platforms for a given seed.
using Rng = std::mt19937_64;

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Seed for the rng stream of replicate r at size n under a master seed.
/// Recorded in experiment outputs so any single replicate can be rerun alone.
inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t n,
                                        std::uint64_t replicate) noexcept {
    std::uint64_t s = mix64(master);
    s = mix64(s ^ n);
    s = mix64(s ^ replicate);
    return s;
}

/// Unbiased uniform draw from [0, bound), bound >= 1. Rejection on the top
/// sliver keeps the modulo exact.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t excess =
        (std::numeric_limits<std::uint64_t>::max() % bound + 1u) % bound;
    const std::uint64_t limit = std::uint64_t{0} - excess;  // 2^64 - excess (mod 2^64)
    for (;;) {
        const std::uint64_t x = rng();
        if (excess == 0 || x < limit) return x % bound;
    }
}

/// Uniform double in [0, 1), 53-bit resolution.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in (0, 1].
inline double uniform01_pos(Rng& rng) {
    return static_cast<double>((rng() >> 11) + 1u) * 0x1.0p-53;
}

}  // namespace subcrit
