#pragma once

#include <cstdint>

namespace planeq {

/// Maps 64 random bits to a double in [0, 1) using the top 53 bits.
/// Keeping this mapping explicit makes sampled counts bit-stable across
/// platforms and standard-library versions.
inline double uniform01(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// splitmix64 step; the standard seed-sequencing mix.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from a master seed, for splitting
/// sampling work across workers while keeping results reproducible.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t s = master;
    std::uint64_t out = 0;
    for (std::uint64_t i = 0; i <= stream; ++i) out = splitmix64(s);
    return out;
}

}  // namespace planeq
