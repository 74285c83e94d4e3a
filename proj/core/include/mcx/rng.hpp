#pragma once

#include <cstdint>
#include <random>

namespace mcx {

// Reproducible stream derivation. One master seed; each replica (and each
// independent sub-stream inside a replica) gets its own engine derived by a
// counter-based SplitMix64 hash, so replica r can be re-run in isolation and
// results do not depend on thread scheduling.
//
// Scheme: seed(master, k1, k2, ...) = mix(...mix(mix(master + g*1 ^ k1) + g*2 ^ k2)...)
// where g is the SplitMix64 golden gamma and mix is its output permutation.

constexpr std::uint64_t kSplitMix64Gamma = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master) {
    return splitmix64_mix(master + kSplitMix64Gamma);
}

template <typename... Rest>
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, Rest... rest) {
    return derive_seed(splitmix64_mix(master + kSplitMix64Gamma) ^ stream, rest...);
}

template <typename... Streams>
std::mt19937_64 make_engine(std::uint64_t master, Streams... streams) {
    return std::mt19937_64(derive_seed(master, static_cast<std::uint64_t>(streams)...));
}

} // namespace mcx
