#pragma once

#include <complex>
#include <vector>

namespace blaschke {

using Complex = std::complex<double>;

/// Complex polynomial in coefficient form; coeffs[j] multiplies z^j.
/// The vector is never empty and is not silently truncated by arithmetic.
struct Polynomial {
    std::vector<Complex> coeffs;

    Polynomial() : coeffs{Complex(0.0)} {}
    explicit Polynomial(std::vector<Complex> c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

Complex eval(const Polynomial& poly, Complex z);
Polynomial derivative(const Polynomial& poly);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& a, Complex s);

/// Monic product of (z - r_j), recovered by sampling the product at the
/// 2^l-th roots of unity and transforming back (scaled by 2^-l).
/// Throws if 2^l <= roots.size() (the sample grid would alias).
Polynomial coeffs_from_roots(const std::vector<Complex>& roots, int l);

/// All complex roots with multiplicity, computed as eigenvalues of the
/// companion matrix of the trimmed polynomial. Leading coefficients with
/// magnitude <= tol * max|c_j| are trimmed first; a zero polynomial is an
/// error, a nonzero constant has no roots.
std::vector<Complex> roots(const Polynomial& poly, double tol = 1e-13);

/// True iff some unimodular rotation e^{i phi} makes every pair satisfy
/// e^{i phi} c_j = conj(e^{i phi} c_{N-j}) within tol * max|c_j|.
bool is_self_inversive(const Polynomial& poly, double tol);

/// In-place radix-2 transform with kernel exp(-2 pi i j k / N).
/// N = data.size() must be a power of two.
void fft(std::vector<Complex>& data);

}  // namespace blaschke
