#include "blaschke/mobius.hpp"

#include <cmath>
#include <stdexcept>

#include "blaschke/rng.hpp"

namespace blaschke {

Polynomial numerator(const BlaschkeProduct& B) {
    const int n = static_cast<int>(B.a.size());
    std::vector<Complex> pc(n + 2, Complex(0.0));
    for (int i = 1; i <= n; ++i) pc[i] = B.a[i - 1];
    pc[n + 1] = 1.0;
    return Polynomial(std::move(pc));
}

Polynomial denominator(const BlaschkeProduct& B) {
    const int n = static_cast<int>(B.a.size());
    std::vector<Complex> qc(n + 1, Complex(0.0));
    qc[0] = 1.0;
    for (int j = 1; j <= n; ++j) qc[j] = std::conj(B.a[n - j]);
    return Polynomial(std::move(qc));
}

Polynomial wronskian(const BlaschkeProduct& B) { return wronskian_from_coeffs(B.a); }

Complex eval(const BlaschkeProduct& B, Complex z) { return eval(numerator(B), z) / eval(denominator(B), z); }

DiskAutomorphism centering(const std::vector<Complex>& points, std::uint64_t seed) {
    if (points.empty()) throw std::invalid_argument("no points to center");
    for (const Complex& z : points)
        if (std::abs(z) >= 1.0) throw std::invalid_argument("point outside the open unit disk");

    Complex mean = 0.0;
    for (const Complex& z : points) mean += z;
    mean /= double(points.size());

    const auto valid = [&](Complex c) {
        if (std::abs(c) >= 1.0) return false;
        for (const Complex& z : points)
            if (std::abs(c - z) <= 1e-12) return false;  // b(z) would vanish
        return true;
    };

    Complex z_star = mean;
    detail::Rng rng(seed);
    for (int attempt = 0; attempt < 100 && !valid(z_star); ++attempt) {
        const double mag = 1e-3 * std::sqrt(rng.uniform01());
        const double ang = rng.uniform(0.0, 2.0 * std::numbers::pi);
        z_star = mean + std::polar(mag, ang);
    }
    if (!valid(z_star)) throw std::runtime_error("could not find a collision-free center in 100 attempts");
    return DiskAutomorphism{z_star};
}

Complex forward(const DiskAutomorphism& aut, Complex z) {
    const Complex den = 1.0 - std::conj(aut.z_star) * z;
    if (std::abs(den) < 1e-300) throw std::invalid_argument("evaluation at the pole of the automorphism");
    return (z - aut.z_star) / den;
}

Complex inverse(const DiskAutomorphism& aut, Complex w) {
    const Complex den = 1.0 + std::conj(aut.z_star) * w;
    if (std::abs(den) < 1e-300) throw std::invalid_argument("evaluation at the pole of the automorphism");
    return (w + aut.z_star) / den;
}

std::pair<Polynomial, Polynomial> compose_numerator_denominator(const BlaschkeProduct& B_tilde,
                                                                const DiskAutomorphism& aut) {
    const int n = static_cast<int>(B_tilde.a.size());
    const Complex zs = aut.z_star;

    // (z - z_star)^j and (1 - conj(z_star) z)^j for j = 0..n+1.
    const Polynomial lin_num(std::vector<Complex>{-zs, 1.0});
    const Polynomial lin_den(std::vector<Complex>{1.0, -std::conj(zs)});
    std::vector<Polynomial> pw_num(n + 2), pw_den(n + 2);
    pw_num[0] = Polynomial(std::vector<Complex>{1.0});
    pw_den[0] = Polynomial(std::vector<Complex>{1.0});
    for (int j = 1; j <= n + 1; ++j) {
        pw_num[j] = mul(pw_num[j - 1], lin_num);
        pw_den[j] = mul(pw_den[j - 1], lin_den);
    }

    const Polynomial pt = numerator(B_tilde);
    const Polynomial qt = denominator(B_tilde);
    Polynomial P(std::vector<Complex>(n + 2, Complex(0.0)));
    Polynomial Q(std::vector<Complex>(n + 2, Complex(0.0)));
    for (int j = 0; j <= n + 1; ++j) {
        const Polynomial s = mul(pw_num[j], pw_den[n + 1 - j]);
        P = add(P, scale(s, pt.coeffs[j]));
        if (j <= n) Q = add(Q, scale(s, qt.coeffs[j]));
    }
    return {P, Q};
}

BlaschkeProduct postcompose_and_pullback(const BlaschkeProduct& B_tilde, const DiskAutomorphism& aut) {
    const int n = static_cast<int>(B_tilde.a.size());
    const auto [P1, Q1] = compose_numerator_denominator(B_tilde, aut);

    double qscale = 0.0;
    for (const Complex& c : Q1.coeffs) qscale = std::max(qscale, std::abs(c));
    const Complex q0 = eval(Q1, Complex(0.0));
    if (std::abs(q0) < 1e-13 * qscale) throw std::runtime_error("degenerate composition: pole at the origin");
    const Complex w0 = eval(P1, Complex(0.0)) / q0;

    const Polynomial P2 = add(P1, scale(Q1, -w0));
    double pscale = 0.0;
    for (const Complex& c : P2.coeffs) pscale = std::max(pscale, std::abs(c));
    const Complex pivot = P2.coeffs[n + 1];
    if (std::abs(pivot) < 1e-13 * pscale) throw std::runtime_error("degenerate composition: leading coefficient vanishes");

    BlaschkeProduct out;
    out.a.resize(n);
    for (int i = 1; i <= n; ++i) out.a[i - 1] = P2.coeffs[i] / pivot;
    return out;
}

}  // namespace blaschke
