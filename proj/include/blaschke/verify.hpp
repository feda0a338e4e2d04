#pragma once

#include <Eigen/Dense>
#include <vector>

#include "blaschke/mobius.hpp"
#include "blaschke/solver.hpp"

namespace blaschke {

/// Bijection between prescribed and computed points minimizing the largest
/// matched distance.
struct AssignmentResult {
    std::vector<int> pairing;  // row i is matched to column pairing[i]
    double max_distance = 0.0;
    Eigen::MatrixXd distance_matrix;
};

struct VerificationReport {
    std::vector<Complex> computed_points;
    double max_error = 0.0;
    double max_abs_derivative = 0.0;
    bool accurately_solved = false;
    Classification classification = Classification::blaschke_form;
};

/// The n in-disk roots of the Wronskian of B. Errors out when the in-disk
/// count differs from n or a root sits within 1e-12 of the unit circle.
std::vector<Complex> computed_critical_points(const BlaschkeProduct& B);

/// Optimal bottleneck pairing via threshold search over the distinct entries
/// of D with an augmenting-path matching feasibility test.
AssignmentResult bottleneck_assign(const Eigen::MatrixXd& D);

/// Accuracy classification: converged, at tolerance, and bottleneck error
/// between prescribed and computed points below 0.5e-4.
VerificationReport report(const std::vector<Complex>& prescribed, const BlaschkeProduct& B,
                          const SolveResult& result);

}  // namespace blaschke
