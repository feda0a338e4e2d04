#include "blaschke/solver.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blaschke {

namespace {

void check_solver_points(const std::vector<Complex>& points) {
    if (points.empty()) throw std::invalid_argument("no critical points given");
    for (const Complex& z : points) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("critical point is not finite");
        if (std::abs(z) >= 1.0) throw std::invalid_argument("critical point outside the open unit disk");
        if (std::abs(z) < 1e-13) throw std::invalid_argument("zero critical point");
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (std::abs(points[i] - points[j]) < 1e-13)
                throw std::invalid_argument("duplicate critical points");
}

// Nonzero (column, value) pairs per row of C_hat.
std::vector<std::vector<std::pair<int, double>>> row_support(const Eigen::MatrixXd& C) {
    std::vector<std::vector<std::pair<int, double>>> rows(C.rows());
    for (int r = 0; r < C.rows(); ++r)
        for (int c = 0; c < C.cols(); ++c)
            if (C(r, c) != 0.0) rows[r].emplace_back(c, C(r, c));
    return rows;
}

Eigen::VectorXcd compute_xhat(const Eigen::VectorXd& u, const ReducedAffine& aff) {
    const int m = aff.layout.m;
    Eigen::VectorXd tr(m - 1), ti(m - 1);
    for (int q = 0; q < m - 1; ++q) {
        tr(q) = u(2 * q);
        ti(q) = u(2 * q + 1);
    }
    const double t_beta = u(2 * m - 2);
    Eigen::VectorXcd x = aff.alpha_hat + aff.beta_hat * t_beta;
    x.real() += aff.C_hat * tr;
    x.imag() += aff.C_hat * ti;
    return x;
}

Eigen::VectorXd residual_at(const Eigen::VectorXcd& x, const std::vector<QuadraticConstraint>& cons) {
    const auto get = [&](int pos) -> Complex { return pos == 0 ? Complex(1.0) : x(pos - 1); };
    Eigen::VectorXd r(2 * static_cast<int>(cons.size()));
    for (std::size_t c = 0; c < cons.size(); ++c) {
        const Complex v = get(cons[c].i) - get(cons[c].j) * std::conj(get(cons[c].k));
        r(2 * c) = v.real();
        r(2 * c + 1) = v.imag();
    }
    return r;
}

std::vector<Eigen::Triplet<double>> jacobian_triplets(
    const Eigen::VectorXcd& x, const ReducedAffine& aff, const std::vector<QuadraticConstraint>& cons,
    const std::vector<std::vector<std::pair<int, double>>>& rows) {
    const int m = aff.layout.m;
    const int tb_col = 2 * m - 2;
    const auto get = [&](int pos) -> Complex { return pos == 0 ? Complex(1.0) : x(pos - 1); };
    const auto beta = [&](int pos) -> Complex { return pos == 0 ? Complex(0.0) : aff.beta_hat(pos - 1); };

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(cons.size() * 16);
    std::vector<Complex> dre(m - 1), dim(m - 1);
    std::vector<int> touched;
    touched.reserve(3 * aff.layout.n + 3);

    for (std::size_t c = 0; c < cons.size(); ++c) {
        const int i = cons[c].i, j = cons[c].j, k = cons[c].k;
        const Complex xj = get(j);
        const Complex xk_conj = std::conj(get(k));

        touched.clear();
        const auto accumulate = [&](int pos, int role) {
            if (pos == 0) return;
            for (const auto& [col, val] : rows[pos - 1]) {
                if (dre[col] == Complex(0.0) && dim[col] == Complex(0.0)) touched.push_back(col);
                // role 0: the x_i term; 1: the left factor x_j; 2: the conjugated factor x_k
                if (role == 0) {
                    dre[col] += val;
                    dim[col] += Complex(0.0, val);
                } else if (role == 1) {
                    dre[col] -= val * xk_conj;
                    dim[col] -= Complex(0.0, val) * xk_conj;
                } else {
                    dre[col] -= xj * val;
                    dim[col] += Complex(0.0, val) * xj;  // conj(i val) = -i val
                }
            }
        };
        accumulate(i, 0);
        accumulate(j, 1);
        accumulate(k, 2);

        for (const int col : touched) {
            trip.emplace_back(2 * c, 2 * col, dre[col].real());
            trip.emplace_back(2 * c + 1, 2 * col, dre[col].imag());
            trip.emplace_back(2 * c, 2 * col + 1, dim[col].real());
            trip.emplace_back(2 * c + 1, 2 * col + 1, dim[col].imag());
            dre[col] = dim[col] = Complex(0.0);
        }

        const Complex db = beta(i) - beta(j) * xk_conj - xj * std::conj(beta(k));
        trip.emplace_back(2 * c, tb_col, db.real());
        trip.emplace_back(2 * c + 1, tb_col, db.imag());
    }
    return trip;
}

}  // namespace

std::vector<QuadraticConstraint> build_constraints(const IndexTables& tables, const DegreeLayout& layout) {
    if (layout.n < 2) throw std::invalid_argument("build_constraints needs n >= 2");
    std::vector<bool> is_linear(layout.p + 1, false);
    for (int i = 1; i <= layout.n; ++i) is_linear[tables.J[i]] = true;

    std::vector<QuadraticConstraint> cons;
    cons.reserve(layout.m);
    for (int pos = 1; pos <= layout.p; ++pos) {
        if (is_linear[pos]) continue;
        cons.push_back({pos, tables.J[tables.I[pos - 1]], tables.J[tables.Ibar[pos - 1]]});
    }
    if (static_cast<int>(cons.size()) != layout.m) throw std::logic_error("constraint count differs from m");
    return cons;
}

Eigen::VectorXd residual(const Eigen::VectorXcd& t, double t_beta, const ReducedAffine& aff,
                         const std::vector<QuadraticConstraint>& cons) {
    const int m = aff.layout.m;
    if (t.size() != m - 1) throw std::invalid_argument("t must have length m-1");
    Eigen::VectorXd u(2 * m - 1);
    for (int q = 0; q < m - 1; ++q) {
        u(2 * q) = t(q).real();
        u(2 * q + 1) = t(q).imag();
    }
    u(2 * m - 2) = t_beta;
    return residual_at(compute_xhat(u, aff), cons);
}

Eigen::MatrixXd jacobian(const Eigen::VectorXcd& t, double t_beta, const ReducedAffine& aff,
                         const std::vector<QuadraticConstraint>& cons) {
    const int m = aff.layout.m;
    if (t.size() != m - 1) throw std::invalid_argument("t must have length m-1");
    Eigen::VectorXd u(2 * m - 1);
    for (int q = 0; q < m - 1; ++q) {
        u(2 * q) = t(q).real();
        u(2 * q + 1) = t(q).imag();
    }
    u(2 * m - 2) = t_beta;

    const Eigen::VectorXcd x = compute_xhat(u, aff);
    const auto rows = row_support(aff.C_hat);
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * cons.size(), 2 * m - 1);
    for (const auto& tr : jacobian_triplets(x, aff, cons, rows)) J(tr.row(), tr.col()) += tr.value();
    return J;
}

Classification classify_numerator(const std::vector<Complex>& a, bool* boundary_warning) {
    std::vector<Complex> pc(a.size() + 2, Complex(0.0));
    for (std::size_t i = 0; i < a.size(); ++i) pc[i + 1] = a[i];
    pc[a.size() + 1] = 1.0;

    bool warn = false;
    bool inside = true;
    for (const Complex& root : roots(Polynomial(std::move(pc)))) {
        const double mag = std::abs(root);
        if (std::abs(mag - 1.0) <= 1e-10) warn = true;
        if (mag >= 1.0 - 1e-10) inside = false;
    }
    if (boundary_warning) *boundary_warning = warn;
    return inside ? Classification::blaschke_product : Classification::blaschke_form;
}

SolveResult solve(const std::vector<Complex>& points, const SolveOptions& opts) {
    check_solver_points(points);
    if (opts.residual_tol <= 0.0) throw std::invalid_argument("residual_tol must be positive");
    if (opts.max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");

    const int n = static_cast<int>(points.size());
    SolveResult result;

    if (n == 1) {
        // The n=1 model has no quadratic block; the particular solution is exact.
        result.a = seed_coefficients(1, points);
        result.status = SolveStatus::converged;
        result.iterations = 0;
        result.final_residual_norm = 0.0;
        result.classification = classify_numerator(result.a, &result.boundary_root_warning);
        return result;
    }

    const ReducedAffine aff = reduced_affine(n, points);
    const IndexTables tables = index_vectors(n);
    const std::vector<QuadraticConstraint> cons = build_constraints(tables, aff.layout);
    const auto rows = row_support(aff.C_hat);

    const int m = aff.layout.m;
    const int nu = 2 * m - 1;  // real unknowns
    const int nr = 2 * m;      // real residuals

    Eigen::VectorXd u = Eigen::VectorXd::Zero(nu);
    Eigen::VectorXcd x = compute_xhat(u, aff);
    Eigen::VectorXd r = residual_at(x, cons);
    double F = 0.5 * r.squaredNorm();

    const double res_tol = opts.residual_tol * (1.0 + aff.alpha_hat.norm());
    const double step_tol_factor = 1e-12;

    SolveStatus status = SolveStatus::max_iterations;
    int iterations = 0;
    double lambda = -1.0;
    double growth = 2.0;
    bool refresh = true;

    Eigen::SparseMatrix<double> J(nr, nu), JtJ(nu, nu);
    Eigen::VectorXd g(nu), diag(nu);

    if (!r.allFinite()) status = SolveStatus::singular;
    else while (iterations < opts.max_iterations) {
        if (refresh) {
            const auto trip = jacobian_triplets(x, aff, cons, rows);
            J.setFromTriplets(trip.begin(), trip.end());
            JtJ = (Eigen::SparseMatrix<double>(J.transpose()) * J).pruned();
            g = J.transpose() * r;
            diag = JtJ.diagonal();
            const double dmax = diag.maxCoeff();
            diag = diag.cwiseMax(std::max(1e-12 * dmax, 1e-300));
            if (lambda < 0.0) lambda = 1e-9 * dmax;
            refresh = false;
        }

        // Solve (JtJ + lambda D) delta = -g in Jacobi-scaled form: the scaled
        // matrix has unit diagonal at lambda = 0, which keeps the factorization
        // usable when the Jacobian is nearly rank-deficient.
        const Eigen::VectorXd scale_inv = diag.cwiseSqrt().cwiseInverse();
        Eigen::SparseMatrix<double> M = scale_inv.asDiagonal() * JtJ * scale_inv.asDiagonal();
        for (int q = 0; q < nu; ++q) M.coeffRef(q, q) += lambda;
        Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> chol(M);
        Eigen::VectorXd delta;
        bool ok = (chol.info() == Eigen::Success);
        if (ok) {
            const Eigen::VectorXd g_scaled = -(scale_inv.asDiagonal() * g);
            delta = scale_inv.asDiagonal() * chol.solve(g_scaled);
            ok = delta.allFinite();
        }
        if (!ok) {
            lambda *= growth;
            growth *= 2.0;
            if (lambda > 1e40) { status = SolveStatus::singular; break; }
            continue;
        }

        const Eigen::VectorXd u_new = u + delta;
        const Eigen::VectorXcd x_new = compute_xhat(u_new, aff);
        const Eigen::VectorXd r_new = residual_at(x_new, cons);
        if (!r_new.allFinite()) {
            lambda *= growth;
            growth *= 2.0;
            if (lambda > 1e40) { status = SolveStatus::singular; break; }
            continue;
        }

        const double F_new = 0.5 * r_new.squaredNorm();
        const double predicted = 0.5 * delta.dot(lambda * diag.cwiseProduct(delta) - g);
        // (r - r_new) . (r + r_new) / 2 equals F - F_new without the
        // catastrophic cancellation of subtracting two nearly equal sums.
        const double actual = 0.5 * (r - r_new).dot(r + r_new);
        const double rho = actual / std::max(predicted, 1e-300);

        if (rho > 0.0) {
            u = u_new;
            x = x_new;
            r = r_new;
            F = F_new;
            ++iterations;
            lambda *= std::max(0.1, 1.0 - std::pow(2.0 * rho - 1.0, 3));
            growth = 2.0;
            refresh = true;
            if (r.norm() <= res_tol && delta.norm() <= step_tol_factor * (1.0 + u.norm())) {
                status = SolveStatus::converged;
                break;
            }
        } else {
            lambda *= growth;
            growth *= 2.0;
            if (lambda > 1e40) {
                // Damping saturated: no further progress is possible in double
                // precision. The iterate is a solution iff the residual test holds.
                status = (r.norm() <= res_tol) ? SolveStatus::converged : SolveStatus::max_iterations;
                break;
            }
        }
    }

    result.a.resize(n);
    for (int i = 1; i <= n; ++i) result.a[i - 1] = x(tables.J[i] - 1);
    result.status = status;
    result.iterations = iterations;
    result.final_residual_norm = r.norm();
    result.classification = classify_numerator(result.a, &result.boundary_root_warning);
    return result;
}

}  // namespace blaschke
