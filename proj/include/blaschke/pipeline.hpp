#pragma once

#include <vector>

#include "blaschke/mobius.hpp"
#include "blaschke/solver.hpp"
#include "blaschke/verify.hpp"

namespace blaschke {

struct PipelineResult {
    BlaschkeProduct product;
    SolveResult solve;
    VerificationReport verification;
    bool transformed = false;
    Complex z_star{0.0, 0.0};
};

/// Transform the points through the mean-centering automorphism (when
/// enabled), solve, pull the product back, and verify against the original
/// prescription. A zero critical point is only admissible with the
/// transformation switched on.
PipelineResult run_pipeline(const std::vector<Complex>& points, const SolveOptions& opts = {});

}  // namespace blaschke
