#pragma once

#include <cstdint>

namespace lcsim {

// Counter-based randomness: every draw is a pure function of
// (seed, trial, round, unit). Trials get disjoint streams for free, replay is
// exact, and adding or disabling a unit never perturbs anyone else's draws.

namespace rng_detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace rng_detail

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    return rng_detail::splitmix64(a ^ rng_detail::splitmix64(b));
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix64(mix64(a, b), c);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    return mix64(mix64(a, b, c), d);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double u01(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double draw_u01(std::uint64_t seed, std::uint64_t trial, std::uint64_t round, std::uint64_t unit) {
    return u01(mix64(seed, trial, round, unit));
}

// Uniform index in [0, n), used for the recovery oracle's node selection.
inline std::size_t draw_index(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::size_t n) {
    return static_cast<std::size_t>(u01(mix64(seed, a, b)) * static_cast<double>(n)) % n;
}

}  // namespace lcsim
