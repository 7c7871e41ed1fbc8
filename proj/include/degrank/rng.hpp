#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace degrank {

// All randomness in the project flows through mt19937_64 so that a seed
// pins the exact output stream on every platform and build.
using Rng = std::mt19937_64;

inline constexpr const char* kRngAlgorithm = "mt19937_64";

// Unbiased draw in [0, bound). std::uniform_int_distribution is not
// portable across standard libraries, so the mapping is done by hand.
inline std::uint64_t bounded_uniform(Rng& rng, std::uint64_t bound) {
    std::uint64_t x = rng();
    std::uint64_t r = x % bound;
    // reject draws from the final incomplete block of size 2^64 mod bound
    while (x - r > std::uint64_t(0) - bound) {
        x = rng();
        r = x % bound;
    }
    return r;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Decorrelated seed for a numbered substream (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace degrank
