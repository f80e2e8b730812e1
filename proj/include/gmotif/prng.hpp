#pragma once

#include <cstdint>
#include <random>

namespace gmotif {

// All randomness in the library flows through std::mt19937_64 so that runs
// are reproducible bit-for-bit across platforms from a single seed.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Stream for trial t of a run seeded with `seed`. Trials draw from disjoint,
// individually seeded generators so they can be reordered or skipped without
// perturbing each other.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return Rng{splitmix64(splitmix64(seed) ^ (trial + 1))};
}

} // namespace gmotif
