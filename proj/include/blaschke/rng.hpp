#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "blaschke/poly.hpp"

namespace blaschke::detail {

/// Seeded generator with fixed bit-to-double mappings, so identical seeds
/// reproduce identical streams on any platform.
struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    double uniform01() { return double(eng() >> 11) * 0x1.0p-53; }  // [0, 1)
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // Box-Muller pair of standard normals.
    void gauss(double& g1, double& g2) {
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        const double rad = std::sqrt(-2.0 * std::log(u1));
        g1 = rad * std::cos(2.0 * std::numbers::pi * u2);
        g2 = rad * std::sin(2.0 * std::numbers::pi * u2);
    }

    std::mt19937_64 eng;
};

}  // namespace blaschke::detail
