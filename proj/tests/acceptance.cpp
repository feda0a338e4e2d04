// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "blaschke/affine.hpp"
#include "blaschke/instances.hpp"
#include "blaschke/mobius.hpp"
#include "blaschke/pipeline.hpp"
#include "blaschke/rng.hpp"
#include "blaschke/solver.hpp"
#include "blaschke/structure.hpp"
#include "blaschke/verify.hpp"

using namespace blaschke;

namespace {

int failures = 0;

void criterion(int id, const std::string& what, const std::function<bool()>& run) {
    bool ok = false;
    std::string note;
    try {
        ok = run();
    } catch (const std::exception& e) {
        note = std::string(" [exception: ") + e.what() + "]";
    }
    std::printf("%s  C%-2d %s%s\n", ok ? "PASS" : "FAIL", id, what.c_str(), note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::vector<Complex> random_coeffs(detail::Rng& rng, int n, double radius) {
    std::vector<Complex> a(n);
    for (auto& c : a)
        c = std::polar(radius * std::sqrt(rng.uniform01()), rng.uniform(0.0, 2.0 * std::numbers::pi));
    return a;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return (v[(n - 1) / 2] + v[n / 2]) / 2.0;
}

Eigen::MatrixXd full_null_matrix(int n) {
    const DegreeLayout layout = degree_layout(n);
    std::vector<Eigen::MatrixXd> blocks(2 * n + 1);
    int cols = 0;
    for (int d = 2; d <= 2 * n - 2; ++d) {
        blocks[d] = (d <= n) ? null_block(n, d).cast<double>() : Eigen::MatrixXd(blocks[2 * n - d].reverse());
        cols += static_cast<int>(blocks[d].cols());
    }
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(layout.total(), cols);
    int col = 0;
    for (int d = 2; d <= 2 * n - 2; ++d) {
        C.block(layout.offsets[d] - 1, col, blocks[d].rows(), blocks[d].cols()) = blocks[d];
        col += static_cast<int>(blocks[d].cols());
    }
    return C;
}

struct SolvedInstance {
    std::vector<Complex> points;
    PipelineResult result;
};

std::vector<SolvedInstance> solved_instances;  // collected by criteria 6-8 for criterion 10

bool run_family(Family family, int n, double r, int count, std::uint64_t seed0, int min_solved,
                double max_median_iters) {
    int solved = 0;
    std::vector<double> iters;
    bool errors_ok = true;
    for (int i = 0; i < count; ++i) {
        InstanceSpec spec{family, n, r, seed0 + std::uint64_t(i)};
        const std::vector<Complex> pts = generate(spec);
        SolveOptions opts;
        opts.rng_seed = spec.seed;
        const PipelineResult pr = run_pipeline(pts, opts);
        iters.push_back(double(pr.solve.iterations));
        if (pr.verification.accurately_solved) {
            ++solved;
            if (!(pr.verification.max_error < 0.5e-4)) errors_ok = false;
        }
        solved_instances.push_back({pts, pr});
    }
    return errors_ok && solved >= min_solved && median(iters) <= max_median_iters;
}

}  // namespace

int main() {
    criterion(1, "closed-form n=1 coefficient for 100 random points", [] {
        for (int k = 0; k < 100; ++k) {
            const Complex z1 = gen_disk(1, 0.99, 1000 + k)[0];
            const SolveResult res = solve({z1});
            const Complex expect = -2.0 * z1 / (1.0 + std::norm(z1));
            if (res.status != SolveStatus::converged) return false;
            if (std::abs(res.a[0] - expect) > 1e-10) return false;
        }
        return true;
    });

    criterion(2, "wronskian expansion equals the degree-ordered assembly, n = 2..8", [] {
        detail::Rng rng(2);
        for (int n = 2; n <= 8; ++n) {
            const std::vector<Complex> a = random_coeffs(rng, n, 0.9);
            const Polynomial W = wronskian_from_coeffs(a);
            const DegreeLayout layout = degree_layout(n);
            const WeightVector wv = weight_vectors(n);
            const Eigen::VectorXcd x = build_x(a, index_vectors(n));
            std::vector<Complex> assembled(2 * n + 1, Complex(0.0));
            for (int pos = 0; pos < layout.total(); ++pos)
                assembled[layout.degree_of(pos + 1)] += wv.w[pos] * x(pos);
            assembled[n] += double(n + 1);
            double scale = 0.0;
            for (const Complex& c : W.coeffs) scale = std::max(scale, std::abs(c));
            for (std::size_t j = 0; j < assembled.size(); ++j)
                if (std::abs(W.coeffs[j] - assembled[j]) > 1e-12 * scale) return false;
        }
        return true;
    });

    criterion(3, "null-space identities and full null rank against the dense oracle", [] {
        for (int n = 2; n <= 8; ++n) {
            for (int inst = 0; inst < 5; ++inst) {
                const std::vector<Complex> pts = gen_disk(n, 0.9, 300 + 10 * n + inst);
                const DenseSystem sys = dense_system(n, pts);
                const DegreeLayout layout = degree_layout(n);
                const double anorm = sys.A.norm();

                const Eigen::VectorXcd alpha = expand_full(particular_solution(n, pts), layout);
                if ((sys.A * alpha - sys.b).norm() > 1e-8 * sys.b.norm()) return false;

                const Eigen::VectorXcd beta_hat = data_null_vector(n, pts);
                const Eigen::VectorXcd beta = expand_full(beta_hat, layout);
                if ((sys.A * beta).norm() > 1e-8 * anorm * beta.norm()) return false;

                const Eigen::MatrixXd Chat = assemble_reduced_C(n);
                for (int c = 0; c < Chat.cols(); ++c) {
                    const Eigen::VectorXcd v = expand_full(Chat.col(c).cast<Complex>(), layout);
                    if ((sys.A * v).norm() > 1e-8 * anorm * v.norm()) return false;
                }

                const Eigen::MatrixXd C = full_null_matrix(n);
                Eigen::MatrixXcd basis(C.rows(), C.cols() + 1);
                basis.leftCols(C.cols()) = C.cast<Complex>();
                basis.col(C.cols()) = beta;
                if (basis.cols() != n * n - n) return false;
                const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(basis);
                const auto& sv = svd.singularValues();
                int rank = 0;
                for (int i = 0; i < sv.size(); ++i)
                    if (sv(i) > 1e-10 * sv(0)) ++rank;
                if (rank != n * n - n) return false;
            }
        }
        return true;
    });

    criterion(4, "index tables reproduce the n = 3 worked example and the J formula", [] {
        const IndexTables t = index_vectors(3);
        if (t.I != std::vector<int>{1, 2, 3, 1, 2, 1, 3, 3, 2, 0, 0, 0}) return false;
        if (t.Ibar != std::vector<int>{0, 0, 0, 2, 3, 1, 3, 2, 1, 3, 2, 1}) return false;
        if (t.J != std::vector<int>{0, 1, 2, 3}) return false;
        for (int n = 1; n <= 30; ++n) {
            const DegreeLayout layout = degree_layout(n);
            const std::vector<int> J = coeff_positions(n);
            for (int i = 1; i <= n; ++i)
                if (J[i] != layout.offsets[i - 1]) return false;
        }
        return true;
    });

    criterion(5, "n = 3 constraint set and reduced C match the displayed system", [] {
        const auto cons = build_constraints(index_vectors(3), degree_layout(3));
        if (cons.size() != 4) return false;
        const int expect[4][3] = {{4, 1, 2}, {5, 2, 3}, {6, 1, 1}, {7, 3, 3}};
        for (int c = 0; c < 4; ++c)
            if (cons[c].i != expect[c][0] || cons[c].j != expect[c][1] || cons[c].k != expect[c][2]) return false;

        const Eigen::MatrixXd C = assemble_reduced_C(3);
        if (C.rows() != 7 || C.cols() != 3) return false;
        Eigen::MatrixXd ref(7, 3);
        ref << 0, 0, 0, 0, 0, 0, 1, 0, 0, 3, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1;
        return (C - ref).norm() == 0.0;
    });

    criterion(6, "disk n=10 r=0.999: >=95% solved, median iterations <= 30 (20 instances)",
              [] { return run_family(Family::disk, 10, 0.999, 20, 600, 19, 30.0); });

    criterion(7, "disk n=20 r=0.99: >=90% solved (10 instances)",
              [] { return run_family(Family::disk, 20, 0.99, 10, 700, 9, 1e9); });

    criterion(8, "cluster n=10: 100% solved, median iterations <= 15 (10 instances)",
              [] { return run_family(Family::cluster, 10, 0.0, 10, 800, 10, 15.0); });

    criterion(9, "bottleneck assignment equals brute force on 100 random 7x7 matrices", [] {
        detail::Rng rng(9);
        for (int rep = 0; rep < 100; ++rep) {
            Eigen::MatrixXd D(7, 7);
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j) D(i, j) = rng.uniform01();
            const double got = bottleneck_assign(D).max_distance;

            std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
            double best = std::numeric_limits<double>::infinity();
            do {
                double worst = 0.0;
                for (int i = 0; i < 7; ++i) worst = std::max(worst, D(i, perm[i]));
                best = std::min(best, worst);
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (got != best) return false;
        }
        return true;
    });

    criterion(10, "every solved instance has a self-inversive wronskian pairing the inputs", [] {
        if (solved_instances.empty()) return false;
        for (const SolvedInstance& inst : solved_instances) {
            if (!inst.result.verification.accurately_solved) continue;
            const Polynomial W = wronskian(inst.result.product);
            if (!is_self_inversive(W, 1e-9)) return false;
            const VerificationReport rep =
                report(inst.points, inst.result.product, inst.result.solve);
            if (!(rep.max_error < 0.5e-4)) return false;
        }
        return true;
    });

    criterion(11, "transform/solve/pullback restores the prescription in normalized form", [] {
        for (int k = 0; k < 20; ++k) {
            const int n = 2 + k % 5;
            const std::vector<Complex> pts = gen_disk(n, 0.85, 1100 + k);
            SolveOptions opts;
            opts.rng_seed = 1100 + k;

            const DiskAutomorphism aut = centering(pts, opts.rng_seed);
            std::vector<Complex> mapped(pts.size());
            for (std::size_t i = 0; i < pts.size(); ++i) mapped[i] = forward(aut, pts[i]);
            const SolveResult res = solve(mapped, opts);
            if (res.status != SolveStatus::converged) return false;
            const BlaschkeProduct Bt{res.a};
            const BlaschkeProduct B = postcompose_and_pullback(Bt, aut);

            const VerificationReport rep = report(pts, B, res);
            if (!(rep.max_error < 0.5e-4)) return false;

            // Form invariants of the composed function: zero constant term after
            // the monic scaling, and the denominator is the conjugate reversal.
            const auto [P1, Q1] = compose_numerator_denominator(Bt, aut);
            const Complex w0 = eval(P1, Complex(0.0)) / eval(Q1, Complex(0.0));
            const Polynomial P2 = add(P1, scale(Q1, -w0));
            const Polynomial Q2 = add(Q1, scale(P1, -std::conj(w0)));
            const Complex pivot = P2.coeffs[n + 1];
            if (std::abs(P2.coeffs[0] / pivot) > 1e-12) return false;
            const Polynomial q_out = denominator(B);
            for (int j = 0; j <= n; ++j)
                if (std::abs(Q2.coeffs[j] / Q2.coeffs[0] - q_out.coeffs[j]) > 1e-12) return false;
        }
        return true;
    });

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    else std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
