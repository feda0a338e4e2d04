#include "blaschke/affine.hpp"

#include <cmath>
#include <stdexcept>

namespace blaschke {

Eigen::MatrixXi null_block(int n, int d) {
    if (n < 2 || d < 2 || d > n) throw std::invalid_argument("null_block needs 2 <= d <= n");

    Eigen::MatrixXi M;
    if (d == n) {
        if (n % 2 == 0) {
            M = Eigen::MatrixXi::Zero(n, n - 1);
            for (int k = 2; k <= n; ++k) {
                M(k - 2, k - 2) = -n + 2 * k - 1;
                M(k - 1, k - 2) = n - 2 * k + 3;
            }
        } else {
            M = Eigen::MatrixXi::Zero(n - 1, n - 2);
            for (int k = 2; k <= n - 1; ++k) {
                const int col = k - 2;
                if (k <= (n - 1) / 2) {
                    M(k - 2, col) = -n + 2 * k - 1;
                    M(k - 1, col) = n - 2 * k + 3;
                } else if (k == (n + 1) / 2) {
                    M((n - 3) / 2, col) = 1;
                    M((n - 1) / 2, col) = 1;
                } else {
                    M(k - 2, col) = -n + 2 * k + 1;
                    M(k - 1, col) = n - 2 * k + 1;
                }
            }
        }
    } else if (d % 2 == 0) {
        M = Eigen::MatrixXi::Zero(d + 1, d);
        M(0, 0) = d - 1;
        M(1, 0) = d + 1;
        for (int k = 2; k <= d; ++k) {
            M(k - 1, k - 1) = -d + 2 * k - 1;
            M(k, k - 1) = d - 2 * k + 3;
        }
    } else {
        M = Eigen::MatrixXi::Zero(d, d - 1);
        M(0, 0) = d - 1;
        M(1, 0) = d + 1;
        for (int k = 2; k <= d - 1; ++k) {
            const int col = k - 1;
            if (k <= (d - 1) / 2) {
                M(k - 1, col) = -d + 2 * k - 1;
                M(k, col) = d - 2 * k + 3;
            } else if (k == (d + 1) / 2) {
                M((d - 1) / 2, col) = 1;
                M((d + 1) / 2, col) = 1;
            } else {
                M(k - 1, col) = -d + 2 * k + 1;
                M(k, col) = d - 2 * k + 1;
            }
        }
    }
    return M;
}

Eigen::MatrixXd assemble_reduced_C(int n) {
    if (n < 2) throw std::invalid_argument("assemble_reduced_C needs n >= 2");
    const DegreeLayout layout = degree_layout(n);
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(layout.p, layout.m - 1);
    int col = 0;
    for (int d = 2; d <= n; ++d) {
        const Eigen::MatrixXi block = null_block(n, d);
        const int row0 = (d * d + 1) / 2;            // ceil(d^2/2), 0-based row
        const int col0 = ((d - 1) * (d - 1)) / 2;    // floor((d-1)^2/2), 0-based col
        if (row0 != layout.offsets[d] - 1) throw std::logic_error("null block row placement mismatch");
        if (col0 != col) throw std::logic_error("null block column placement mismatch");
        C.block(row0, col0, block.rows(), block.cols()) = block.cast<double>();
        col += static_cast<int>(block.cols());
    }
    if (col != layout.m - 1) throw std::logic_error("null block columns do not sum to m-1");
    return C;
}

int fft_exponent(int n) {
    int l = 0;
    while ((1 << l) < 4 * (2 * n + 1)) ++l;
    return l;
}

std::vector<Complex> seed_coefficients(int n, const std::vector<Complex>& points) {
    if (static_cast<int>(points.size()) != n) throw std::invalid_argument("expected n critical points");
    std::vector<Complex> ext(points);
    ext.reserve(2 * n);
    for (const Complex& z : points) ext.push_back(1.0 / std::conj(z));

    const Polynomial w0 = coeffs_from_roots(ext, fft_exponent(n));
    const Complex bn = w0.coeffs[n];
    if (std::abs(bn) < 1e-250) throw std::runtime_error("degenerate point polynomial: middle coefficient vanishes");

    // Rescale so the middle coefficient equals n+1, then a_i = c_{i-1} / i.
    std::vector<Complex> a(n);
    for (int i = 1; i <= n; ++i) a[i - 1] = double(n + 1) * w0.coeffs[i - 1] / bn / double(i);
    return a;
}

Eigen::VectorXcd particular_solution(int n, const std::vector<Complex>& points) {
    const DegreeLayout layout = degree_layout(n);
    const std::vector<int> J = coeff_positions(n);
    const std::vector<Complex> a = seed_coefficients(n, points);

    Eigen::VectorXcd alpha = Eigen::VectorXcd::Zero(layout.p);
    for (int i = 1; i <= n; ++i) alpha(J[i] - 1) = a[i - 1];
    return alpha;
}

Eigen::VectorXcd data_null_vector(int n, const std::vector<Complex>& points) {
    if (n < 2) throw std::invalid_argument("data_null_vector needs n >= 2");
    const DegreeLayout layout = degree_layout(n);
    const std::vector<int> J = coeff_positions(n);
    const std::vector<Complex> a = seed_coefficients(n, points);

    Eigen::VectorXcd beta = Eigen::VectorXcd::Zero(layout.p);
    for (int i = 1; i <= n; ++i) beta(J[i] - 1) = a[i - 1];

    // Degree-n slots carry the fixed |a_i|^2 pattern that turns the quadratic
    // sum into the constant n+1.
    int slot = layout.offsets[n] - 1;
    for (int i = 1; i <= n; ++i) {
        if (n % 2 == 1 && i == (n + 1) / 2) continue;
        const double value = (i <= n / 2) ? -3.0 * double(n + 1 - 2 * i) / double(n * (n - 1))
                                          : 3.0 * double(2 * i - n - 1) / double(n * (n - 1));
        beta(slot++) = value;
    }
    return beta;
}

ReducedAffine reduced_affine(int n, const std::vector<Complex>& points) {
    ReducedAffine aff;
    aff.layout = degree_layout(n);
    aff.alpha_hat = particular_solution(n, points);
    if (n >= 2) {
        aff.beta_hat = data_null_vector(n, points);
        aff.C_hat = assemble_reduced_C(n);
    } else {
        aff.beta_hat = Eigen::VectorXcd::Zero(aff.layout.p);
        aff.C_hat = Eigen::MatrixXd::Zero(aff.layout.p, 0);
    }
    return aff;
}

Eigen::VectorXcd expand_full(const Eigen::VectorXcd& x_hat, const DegreeLayout& layout) {
    if (x_hat.size() != layout.p) throw std::invalid_argument("reduced vector has wrong length");
    Eigen::VectorXcd x(layout.total());
    x.head(layout.p) = x_hat;
    for (int d = layout.n + 1; d <= 2 * layout.n; ++d) {
        const int sd = layout.sizes[d];
        const int dst = layout.offsets[d] - 1;
        const int src = layout.offsets[2 * layout.n - d] - 1;
        for (int s = 0; s < sd; ++s) x(dst + s) = std::conj(x_hat(src + sd - 1 - s));
    }
    return x;
}

}  // namespace blaschke
