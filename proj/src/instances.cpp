#include "blaschke/instances.hpp"

#include <cmath>
#include <stdexcept>

#include "blaschke/rng.hpp"

namespace blaschke {

namespace {

bool admissible(const std::vector<Complex>& accepted, Complex z) {
    if (std::abs(z) < 1e-10 || std::abs(z) >= 1.0 - 1e-12) return false;
    for (const Complex& w : accepted)
        if (std::abs(z - w) < 1e-10) return false;
    return true;
}

}  // namespace

std::vector<Complex> gen_disk(int n, double r, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("radius must be in (0, 1]");

    detail::Rng rng(seed);
    std::vector<Complex> points;
    points.reserve(n);
    while (static_cast<int>(points.size()) < n) {
        const double rad = r * std::sqrt(rng.uniform01());
        const double ang = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const Complex z = std::polar(rad, ang);
        if (admissible(points, z)) points.push_back(z);
    }
    return points;
}

std::vector<Complex> gen_cluster(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");

    detail::Rng rng(seed);
    std::vector<Complex> points;
    points.reserve(n);
    while (static_cast<int>(points.size()) < n) {
        double g1 = 0.0, g2 = 0.0;
        rng.gauss(g1, g2);
        const Complex z = Complex(1.0 / 3.0, 1.0 / 3.0) + 0.25 * Complex(g1, g2);
        if (std::abs(z) >= 1.0) continue;  // discard and redraw
        if (admissible(points, z)) points.push_back(z);
    }
    return points;
}

std::vector<Complex> gen_circle(int n, double r, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("radius must be in (0, 1)");

    detail::Rng rng(seed);
    std::vector<Complex> points;
    points.reserve(n);
    const double jitter = std::numbers::pi / (4.0 * n);
    for (int k = 0; k < n; ++k) {
        const double ang = 2.0 * std::numbers::pi * k / n + rng.uniform(-jitter, jitter);
        points.push_back(std::polar(r, ang));
    }
    return points;
}

std::vector<Complex> generate(const InstanceSpec& spec) {
    switch (spec.family) {
        case Family::disk: return gen_disk(spec.n, spec.r, spec.seed);
        case Family::cluster: return gen_cluster(spec.n, spec.seed);
        case Family::circle: return gen_circle(spec.n, spec.r, spec.seed);
    }
    throw std::invalid_argument("unknown instance family");
}

std::string family_name(Family family) {
    switch (family) {
        case Family::disk: return "disk";
        case Family::cluster: return "cluster";
        case Family::circle: return "circle";
    }
    return "unknown";
}

Family family_from_name(const std::string& name) {
    if (name == "disk") return Family::disk;
    if (name == "cluster") return Family::cluster;
    if (name == "circle") return Family::circle;
    throw std::invalid_argument("unknown instance family: " + name);
}

}  // namespace blaschke
