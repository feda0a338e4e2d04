#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "blaschke/poly.hpp"
#include "blaschke/structure.hpp"

namespace blaschke {

/// b(z) = (z - z_star) / (1 - conj(z_star) z), a disk automorphism with
/// b(z_star) = 0.
struct DiskAutomorphism {
    Complex z_star{0.0, 0.0};
};

/// Degree n+1 product in the normalized form
/// B = (a_1 z + ... + a_n z^n + z^{n+1}) / (1 + conj(a_n) z + ... + conj(a_1) z^n).
struct BlaschkeProduct {
    std::vector<Complex> a;
    int degree() const { return static_cast<int>(a.size()) + 1; }
};

Polynomial numerator(const BlaschkeProduct& B);
Polynomial denominator(const BlaschkeProduct& B);
Polynomial wronskian(const BlaschkeProduct& B);
Complex eval(const BlaschkeProduct& B, Complex z);

/// Mean-centering automorphism for the given points. If the mean collides
/// with a point (within 1e-12) it is nudged by a seeded offset of magnitude
/// at most 1e-3, at most 100 times.
DiskAutomorphism centering(const std::vector<Complex>& points, std::uint64_t seed = 0);

Complex forward(const DiskAutomorphism& aut, Complex z);
Complex inverse(const DiskAutomorphism& aut, Complex w);

/// Numerator and denominator of B_tilde(b(z)) with denominators cleared by
/// (1 - conj(z_star) z)^{n+1}; both polynomials have degree at most n+1.
std::pair<Polynomial, Polynomial> compose_numerator_denominator(const BlaschkeProduct& B_tilde,
                                                                const DiskAutomorphism& aut);

/// b_p o B_tilde o b brought back to the normalized form: the composed pair
/// is combined linearly through b_p(w) = (w - w0)/(1 - conj(w0) w) with
/// w0 = B_tilde(b(0)), then the numerator is rescaled to monic with zero
/// constant term (the denominator follows by conjugate reversal).
BlaschkeProduct postcompose_and_pullback(const BlaschkeProduct& B_tilde, const DiskAutomorphism& aut);

}  // namespace blaschke
