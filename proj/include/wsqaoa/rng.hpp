#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace wsqaoa {

/// Engine used for every stochastic component. Each task owns its own instance.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Keyed hash of (master seed, coordinates). Streams derived from distinct
/// coordinate tuples are independent of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> coords) noexcept {
    std::uint64_t h = mix64(master ^ 0x5851f42d4c957f2dULL);
    for (auto c : coords) {
        h = mix64(h ^ mix64(c + 0x2545f4914f6cdd1dULL));
    }
    return h;
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Uniform real in [lo, hi).
inline double uniform(Rng &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace wsqaoa
