#pragma once

#include <cstdint>
#include <random>

namespace trec {

/// SplitMix64 step; used to derive independent seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Uniform-ish integer in [0, bound). Modulo bias is irrelevant at our scales
/// and, unlike std::uniform_int_distribution, the result is identical across
/// standard libraries.
inline std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
    return bound == 0 ? 0 : rng() % bound;
}

/// Uniform double in [0, 1).
inline double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace trec
