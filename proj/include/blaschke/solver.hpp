#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "blaschke/affine.hpp"
#include "blaschke/structure.hpp"

namespace blaschke {

/// One conjugate-quadratic coupling x_i = x_j * conj(x_k) between reduced
/// positions (1-based); index 0 stands for the constant factor 1.
struct QuadraticConstraint {
    int i = 0;
    int j = 0;
    int k = 0;
};

enum class SolveStatus { converged, max_iterations, singular };
enum class Classification { blaschke_product, blaschke_form };

struct SolveOptions {
    double residual_tol = 1e-12;
    int max_iterations = 5000;
    bool transform_enabled = true;  // consumed by the pipeline, not the raw solve
    std::uint64_t rng_seed = 0;
};

struct SolveResult {
    std::vector<Complex> a;
    SolveStatus status = SolveStatus::max_iterations;
    int iterations = 0;
    double final_residual_norm = 0.0;
    Classification classification = Classification::blaschke_form;
    bool boundary_root_warning = false;  // numerator root within 1e-10 of the circle
};

/// The m = floor(n^2/2) couplings at the non-linear positions, increasing i.
std::vector<QuadraticConstraint> build_constraints(const IndexTables& tables, const DegreeLayout& layout);

/// Real residual of length 2m at x_hat = alpha_hat + C_hat t + beta_hat t_beta;
/// entries are (Re, Im) pairs of x_i - x_j conj(x_k) per constraint.
Eigen::VectorXd residual(const Eigen::VectorXcd& t, double t_beta, const ReducedAffine& aff,
                         const std::vector<QuadraticConstraint>& cons);

/// Analytic Jacobian of the residual with respect to the 2m-1 real unknowns
/// (Re t_1, Im t_1, ..., Re t_{m-1}, Im t_{m-1}, t_beta).
Eigen::MatrixXd jacobian(const Eigen::VectorXcd& t, double t_beta, const ReducedAffine& aff,
                         const std::vector<QuadraticConstraint>& cons);

/// Blaschke product iff every root of a_1 z + ... + a_n z^n + z^{n+1} lies in
/// the open disk; roots within 1e-10 of the circle raise the warning flag.
Classification classify_numerator(const std::vector<Complex>& a, bool* boundary_warning = nullptr);

/// Levenberg-Marquardt solve of the sparse quadratic system, started from
/// (t, t_beta) = 0 so that x_hat begins at the particular solution alpha_hat.
SolveResult solve(const std::vector<Complex>& points, const SolveOptions& opts = {});

}  // namespace blaschke
