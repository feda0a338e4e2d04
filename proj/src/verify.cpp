#include "blaschke/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace blaschke {

namespace {

bool try_augment(int row, const Eigen::MatrixXd& D, double threshold, std::vector<int>& match_col,
                 std::vector<bool>& visited) {
    const int n = static_cast<int>(D.rows());
    for (int j = 0; j < n; ++j) {
        if (visited[j] || D(row, j) > threshold) continue;
        visited[j] = true;
        if (match_col[j] < 0 || try_augment(match_col[j], D, threshold, match_col, visited)) {
            match_col[j] = row;
            return true;
        }
    }
    return false;
}

int matching_size(const Eigen::MatrixXd& D, double threshold, std::vector<int>& match_col) {
    const int n = static_cast<int>(D.rows());
    match_col.assign(n, -1);
    int matched = 0;
    for (int i = 0; i < n; ++i) {
        std::vector<bool> visited(n, false);
        if (try_augment(i, D, threshold, match_col, visited)) ++matched;
    }
    return matched;
}

}  // namespace

std::vector<Complex> computed_critical_points(const BlaschkeProduct& B) {
    const int n = static_cast<int>(B.a.size());
    const Polynomial W = wronskian(B);

    // roots() trims a degree-deficient Wronskian; the trimmed leading
    // coefficients correspond to reflections at infinity of critical points
    // at the origin, so the in-disk count below stays meaningful.
    const std::vector<Complex> all = roots(W);

    std::vector<Complex> inside;
    for (const Complex& z : all) {
        const double mag = std::abs(z);
        if (std::abs(mag - 1.0) <= 1e-12)
            throw std::runtime_error("critical point within 1e-12 of the unit circle");
        if (mag < 1.0) inside.push_back(z);
    }
    if (static_cast<int>(inside.size()) != n)
        throw std::runtime_error("expected " + std::to_string(n) + " in-disk critical points, found " +
                                 std::to_string(inside.size()));
    for (std::size_t i = 0; i < inside.size(); ++i)
        for (std::size_t j = i + 1; j < inside.size(); ++j)
            if (std::abs(inside[i] - inside[j]) <= 1e-11)
                throw std::runtime_error("repeated in-disk critical points");
    return inside;
}

AssignmentResult bottleneck_assign(const Eigen::MatrixXd& D) {
    const int n = static_cast<int>(D.rows());
    if (n == 0 || D.cols() != n) throw std::invalid_argument("distance matrix must be square and nonempty");
    if (!D.allFinite() || D.minCoeff() < 0.0) throw std::invalid_argument("distances must be finite and nonnegative");

    std::vector<double> values(D.data(), D.data() + n * n);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::vector<int> match_col;
    int lo = 0, hi = static_cast<int>(values.size()) - 1;
    while (lo < hi) {
        const int mid = (lo + hi) / 2;
        if (matching_size(D, values[mid], match_col) == n) hi = mid;
        else lo = mid + 1;
    }

    AssignmentResult res;
    res.distance_matrix = D;
    matching_size(D, values[lo], match_col);
    res.pairing.assign(n, -1);
    for (int j = 0; j < n; ++j) res.pairing[match_col[j]] = j;
    res.max_distance = 0.0;
    for (int i = 0; i < n; ++i) res.max_distance = std::max(res.max_distance, D(i, res.pairing[i]));
    return res;
}

VerificationReport report(const std::vector<Complex>& prescribed, const BlaschkeProduct& B,
                          const SolveResult& result) {
    VerificationReport rep;
    rep.classification = classify_numerator(B.a);

    std::vector<Complex> computed;
    try {
        computed = computed_critical_points(B);
    } catch (const std::exception&) {
        rep.max_error = std::numeric_limits<double>::infinity();
        rep.max_abs_derivative = std::numeric_limits<double>::infinity();
        rep.accurately_solved = false;
        return rep;
    }

    const int n = static_cast<int>(prescribed.size());
    Eigen::MatrixXd D(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) D(i, j) = std::abs(prescribed[i] - computed[j]);
    const AssignmentResult asg = bottleneck_assign(D);

    const Polynomial W = wronskian(B);
    const Polynomial q = denominator(B);
    double dmax = 0.0;
    for (const Complex& z : computed) {
        const Complex qz = eval(q, z);
        dmax = std::max(dmax, std::abs(eval(W, z)) / std::norm(qz));
    }

    rep.computed_points = std::move(computed);
    rep.max_error = asg.max_distance;
    rep.max_abs_derivative = dmax;
    rep.accurately_solved = (result.status == SolveStatus::converged) && rep.max_error < 0.5e-4;
    return rep;
}

}  // namespace blaschke
