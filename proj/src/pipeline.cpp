#include "blaschke/pipeline.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace blaschke {

PipelineResult run_pipeline(const std::vector<Complex>& points, const SolveOptions& opts) {
    if (points.empty()) throw std::invalid_argument("no critical points given");
    for (const Complex& z : points) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("critical point is not finite");
        if (std::abs(z) >= 1.0) throw std::invalid_argument("critical point outside the open unit disk");
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (std::abs(points[i] - points[j]) < 1e-13)
                throw std::invalid_argument("duplicate critical points");

    PipelineResult out;
    out.transformed = opts.transform_enabled;

    if (opts.transform_enabled) {
        const DiskAutomorphism aut = centering(points, opts.rng_seed);
        out.z_star = aut.z_star;
        std::vector<Complex> mapped(points.size());
        for (std::size_t k = 0; k < points.size(); ++k) mapped[k] = forward(aut, points[k]);
        out.solve = solve(mapped, opts);
        try {
            out.product = postcompose_and_pullback(BlaschkeProduct{out.solve.a}, aut);
        } catch (const std::exception&) {
            // Composition can degenerate when the solve itself broke down;
            // report the untransformed candidate so verification stays honest.
            out.product = BlaschkeProduct{out.solve.a};
            out.verification.max_error = std::numeric_limits<double>::infinity();
            out.verification.max_abs_derivative = std::numeric_limits<double>::infinity();
            out.verification.accurately_solved = false;
            out.verification.classification = out.solve.classification;
            return out;
        }
    } else {
        out.solve = solve(points, opts);
        out.product = BlaschkeProduct{out.solve.a};
    }

    out.verification = report(points, out.product, out.solve);
    return out;
}

}  // namespace blaschke
