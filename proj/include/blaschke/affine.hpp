#pragma once

#include <Eigen/Dense>
#include <vector>

#include "blaschke/structure.hpp"

namespace blaschke {

/// Integer null-space block C^d of the weight vector w^d, 2 <= d <= n.
Eigen::MatrixXi null_block(int n, int d);

/// Block-diagonal p x (m-1) matrix with C^d placed at row ceil(d^2/2)+1,
/// column floor((d-1)^2/2)+1 (1-based). Requires n >= 2.
Eigen::MatrixXd assemble_reduced_C(int n);

/// Affine description x_hat = alpha_hat + C_hat t + beta_hat t_beta of the
/// reduced relaxed system; the only data-dependent pieces are the two seeds.
struct ReducedAffine {
    Eigen::VectorXcd alpha_hat;
    Eigen::VectorXcd beta_hat;
    Eigen::MatrixXd C_hat;
    DegreeLayout layout;
};

/// Smallest l with 2^l >= 4 (2n+1); oversampling headroom for the circle grid.
int fft_exponent(int n);

/// Coefficients a_i = c_{i-1} / i of the rescaled point polynomial W_1,
/// recovered from unit-circle samples of W_0 = prod (z - z_j)(z - 1/conj(z_j)).
std::vector<Complex> seed_coefficients(int n, const std::vector<Complex>& points);

Eigen::VectorXcd particular_solution(int n, const std::vector<Complex>& points);
Eigen::VectorXcd data_null_vector(int n, const std::vector<Complex>& points);
ReducedAffine reduced_affine(int n, const std::vector<Complex>& points);

/// Extend a reduced length-p vector to the full length n^2+n by appending
/// conjugated reversals: block d := flip conj(block 2n-d) for d > n.
Eigen::VectorXcd expand_full(const Eigen::VectorXcd& x_hat, const DegreeLayout& layout);

}  // namespace blaschke
