#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace windopt {

/// Purpose-tagged deterministic RNG streams. Each (purpose, seed) pair maps
/// to an independent mt19937_64 so adding draws for one purpose never
/// perturbs another.
enum class RngStream : std::uint64_t {
    WindRose = 0x57524f5345ull, // "WROSE"
    Layout = 0x4c41594f5554ull, // "LAYOUT"
    Test = 0x54455354ull,       // "TEST"
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
} // namespace detail

inline std::mt19937_64 make_rng(RngStream stream, std::uint64_t seed) {
    const std::uint64_t s0 = detail::splitmix64(static_cast<std::uint64_t>(stream));
    return std::mt19937_64(detail::splitmix64(s0 ^ detail::splitmix64(seed)));
}

/// Uniform double in [0, 1) from the top 53 bits. Used instead of
/// std::uniform_real_distribution, whose output is implementation-defined.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

/// Dirichlet(1,...,1) draw: normalized unit exponentials (uniform simplex).
inline std::vector<double> dirichlet_uniform(std::mt19937_64& rng, std::size_t n) {
    std::vector<double> v(n);
    double total = 0.0;
    for (auto& e : v) {
        e = -std::log1p(-uniform01(rng));
        total += e;
    }
    for (auto& e : v) e /= total;
    return v;
}

} // namespace windopt
