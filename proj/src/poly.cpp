#include "blaschke/poly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blaschke {

Polynomial::Polynomial(std::vector<Complex> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
}

Complex eval(const Polynomial& poly, Complex z) {
    Complex acc = 0.0;
    for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial derivative(const Polynomial& poly) {
    const int n = static_cast<int>(poly.coeffs.size());
    if (n == 1) return Polynomial{};
    std::vector<Complex> out(n - 1);
    for (int j = 1; j < n; ++j) out[j - 1] = double(j) * poly.coeffs[j];
    return Polynomial(std::move(out));
}

Polynomial mul(const Polynomial& a, const Polynomial& b) {
    std::vector<Complex> out(a.coeffs.size() + b.coeffs.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
    return Polynomial(std::move(out));
}

Polynomial add(const Polynomial& a, const Polynomial& b) {
    std::vector<Complex> out(std::max(a.coeffs.size(), b.coeffs.size()), Complex(0.0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out[i] += b.coeffs[i];
    return Polynomial(std::move(out));
}

Polynomial scale(const Polynomial& a, Complex s) {
    std::vector<Complex> out(a.coeffs);
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out));
}

void fft(std::vector<Complex>& data) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / double(len);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex w = std::polar(1.0, ang * double(k));
                const Complex u = data[i + k];
                const Complex v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
            }
        }
    }
}

Polynomial coeffs_from_roots(const std::vector<Complex>& roots, int l) {
    if (l < 0 || l > 26) throw std::invalid_argument("fft exponent out of range");
    const std::size_t N = std::size_t{1} << l;
    if (N <= roots.size()) throw std::invalid_argument("2^l must exceed the polynomial degree");

    std::vector<Complex> samples(N);
    for (std::size_t k = 0; k < N; ++k) {
        const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * double(k) / double(N));
        Complex prod = 1.0;
        for (const Complex& r : roots) prod *= z - r;
        samples[k] = prod;
    }
    fft(samples);
    std::vector<Complex> coeffs(roots.size() + 1);
    for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] = samples[j] / double(N);
    return Polynomial(std::move(coeffs));
}

std::vector<Complex> roots(const Polynomial& poly, double tol) {
    double maxmag = 0.0;
    for (const Complex& c : poly.coeffs) maxmag = std::max(maxmag, std::abs(c));
    if (maxmag == 0.0) throw std::invalid_argument("zero polynomial has no well-defined roots");

    int deg = static_cast<int>(poly.coeffs.size()) - 1;
    while (deg > 0 && std::abs(poly.coeffs[deg]) <= tol * maxmag) --deg;
    if (deg == 0) return {};

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -poly.coeffs[i] / poly.coeffs[deg];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw std::runtime_error("companion eigenvalue iteration failed");

    Polynomial trimmed(std::vector<Complex>(poly.coeffs.begin(), poly.coeffs.begin() + deg + 1));
    const Polynomial dtrim = derivative(trimmed);

    std::vector<Complex> out(deg);
    for (int i = 0; i < deg; ++i) {
        Complex z = es.eigenvalues()(i);
        // A couple of guarded Newton corrections sharpen the eigenvalue estimates.
        for (int it = 0; it < 2; ++it) {
            const Complex f = eval(trimmed, z);
            const Complex df = eval(dtrim, z);
            if (std::abs(df) < 1e-300) break;
            const Complex z2 = z - f / df;
            if (std::abs(eval(trimmed, z2)) < std::abs(f)) z = z2; else break;
        }
        out[i] = z;
    }
    return out;
}

bool is_self_inversive(const Polynomial& poly, double tol) {
    const int N = poly.degree();
    double scale = 0.0;
    int jmax = 0;
    for (int j = 0; j <= N; ++j) {
        const double m = std::abs(poly.coeffs[j]);
        if (m > scale) { scale = m; jmax = j; }
    }
    if (scale == 0.0) return true;

    const Complex u = std::conj(poly.coeffs[N - jmax]) / poly.coeffs[jmax];
    if (std::abs(std::abs(u) - 1.0) > tol) return false;
    for (int j = 0; j <= N; ++j) {
        if (std::abs(u * poly.coeffs[j] - std::conj(poly.coeffs[N - j])) > tol * scale) return false;
    }
    return true;
}

}  // namespace blaschke
