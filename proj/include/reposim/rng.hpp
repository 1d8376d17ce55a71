#pragma once

#include <cstdint>
#include <random>
#include <vector>

// Deterministic random helpers. std::mt19937_64 output is fixed by the
// standard; the distributions below are hand-rolled so that sequences are
// identical across standard library implementations.

namespace reposim::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return splitmix64(seed ^ splitmix64(a ^ splitmix64(b)));
}

// Uniform in [0, 1) with 53 bits of precision.
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller (polar form avoided to keep draw count fixed).
inline double gaussian(std::mt19937_64& gen) {
    double u1 = uniform01(gen);
    double u2 = uniform01(gen);
    while (u1 == 0.0) u1 = uniform01(gen);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

// Index in [0, n).
inline std::size_t uniform_index(std::mt19937_64& gen, std::size_t n) {
    return static_cast<std::size_t>(uniform01(gen) * static_cast<double>(n)) % n;
}

inline std::vector<double> gaussian_vector(std::mt19937_64& gen, std::size_t dim) {
    std::vector<double> v(dim);
    for (auto& x : v) x = gaussian(gen);
    return v;
}

}  // namespace reposim::rng
