#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <random>
#include <vector>

#include "blaschke/structure.hpp"

using namespace blaschke;

namespace {

std::mt19937_64 rng(7);

Complex random_in_disk(double radius) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(radius * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

std::vector<Complex> random_coeffs(int n, double radius = 0.9) {
    std::vector<Complex> a(n);
    for (auto& c : a) c = random_in_disk(radius);
    return a;
}

std::vector<Complex> random_points(int n, double radius = 0.8) {
    std::vector<Complex> pts;
    while (static_cast<int>(pts.size()) < n) {
        const Complex z = random_in_disk(radius);
        if (std::abs(z) < 0.05) continue;
        bool ok = true;
        for (const Complex& w : pts) ok = ok && std::abs(w - z) > 0.05;
        if (ok) pts.push_back(z);
    }
    return pts;
}

// Independent oracle: decode the (a_j, conj(a_k)) factor pairs straight from
// the per-degree definition of x^d(a), including the direct d > n cases.
void oracle_pairs(int n, int d, std::vector<int>& I, std::vector<int>& Ibar) {
    I.clear();
    Ibar.clear();
    const auto push = [&](int j, int k) { I.push_back(j); Ibar.push_back(k); };
    if (d == n) {
        for (int i = 1; i <= n; ++i) {
            if (n % 2 == 1 && i == (n + 1) / 2) continue;
            push(i, i);
        }
    } else if (d == 0) {
        push(1, 0);
    } else if (d == 1) {
        push(2, 0);
    } else if (d == 2 * n - 1) {
        push(0, 2);
    } else if (d == 2 * n) {
        push(0, 1);
    } else if (d < n) {
        push(d + 1, 0);
        for (int i = 1; i <= d; ++i) {
            if (d % 2 == 1 && i == (d + 1) / 2) continue;
            push(i, n - d + i);
        }
    } else {
        const int kd = (2 * n - d + 1) / 2;
        for (int i = 1; i <= 2 * n - d; ++i) {
            if (d % 2 == 1 && i == kd) continue;
            push(n + 1 - i, 2 * n - d + 1 - i);
        }
        push(0, 2 * n - d + 1);
    }
}

}  // namespace

TEST_CASE("degree layout block sizes and totals up to n = 50") {
    for (int n = 1; n <= 50; ++n) {
        const DegreeLayout layout = degree_layout(n);
        REQUIRE(layout.m == (n * n) / 2);
        REQUIRE(layout.p == layout.m + n);
        int total = 0, reduced = 0;
        for (int d = 0; d <= 2 * n; ++d) {
            const int expect = (d == n) ? 2 * (n / 2) : 2 * (std::min(d, 2 * n - d) / 2) + 1;
            CHECK(layout.sizes[d] == expect);
            if (d != n) CHECK(layout.sizes[d] == layout.sizes[2 * n - d]);
            total += layout.sizes[d];
            if (d <= n) reduced += layout.sizes[d];
        }
        CHECK(total == n * n + n);
        CHECK(reduced == layout.p);
    }
}

TEST_CASE("weight blocks for n = 3 match the worked example") {
    CHECK(weight_block(3, 0) == std::vector<double>{1.0});
    CHECK(weight_block(3, 1) == std::vector<double>{2.0});
    CHECK(weight_block(3, 2) == std::vector<double>{3.0, -1.0, 1.0});
    CHECK(weight_block(3, 3) == std::vector<double>{-2.0, 2.0});
    CHECK(weight_block(3, 4) == std::vector<double>{1.0, -1.0, 3.0});
    CHECK(weight_block(3, 5) == std::vector<double>{2.0});
    CHECK(weight_block(3, 6) == std::vector<double>{1.0});
}

TEST_CASE("weights flip: w^d equals reversed w^{2n-d} away from degree n") {
    for (int n = 1; n <= 12; ++n) {
        for (int d = 0; d <= 2 * n; ++d) {
            if (d == n) continue;
            std::vector<double> mirrored = weight_block(n, 2 * n - d);
            std::reverse(mirrored.begin(), mirrored.end());
            CHECK(weight_block(n, d) == mirrored);
        }
    }
}

TEST_CASE("index vectors for n = 3, per degree and concatenated") {
    CHECK(index_block(3, 0) == std::vector<int>{1});
    CHECK(index_block(3, 1) == std::vector<int>{2});
    CHECK(index_block(3, 2) == std::vector<int>{3, 1, 2});
    CHECK(index_block(3, 3) == std::vector<int>{1, 3});
    CHECK(index_block(3, 4) == std::vector<int>{3, 2, 0});
    CHECK(index_block(3, 5) == std::vector<int>{0});
    CHECK(index_block(3, 6) == std::vector<int>{0});

    CHECK(conj_index_block(3, 0) == std::vector<int>{0});
    CHECK(conj_index_block(3, 1) == std::vector<int>{0});
    CHECK(conj_index_block(3, 2) == std::vector<int>{0, 2, 3});
    CHECK(conj_index_block(3, 3) == std::vector<int>{1, 3});
    CHECK(conj_index_block(3, 4) == std::vector<int>{2, 1, 3});
    CHECK(conj_index_block(3, 5) == std::vector<int>{2});
    CHECK(conj_index_block(3, 6) == std::vector<int>{1});

    const IndexTables t = index_vectors(3);
    CHECK(t.I == std::vector<int>{1, 2, 3, 1, 2, 1, 3, 3, 2, 0, 0, 0});
    CHECK(t.Ibar == std::vector<int>{0, 0, 0, 2, 3, 1, 3, 2, 1, 3, 2, 1});
    CHECK(t.J == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("index vectors agree with the variable-vector oracle up to n = 8") {
    std::vector<int> oi, oc;
    for (int n = 1; n <= 8; ++n) {
        for (int d = 0; d <= 2 * n; ++d) {
            oracle_pairs(n, d, oi, oc);
            CHECK(index_block(n, d) == oi);
            CHECK(conj_index_block(n, d) == oc);
        }
    }
}

TEST_CASE("coefficient positions J") {
    CHECK(coeff_positions(3) == std::vector<int>{0, 1, 2, 3});
    CHECK(coeff_positions(4)[4] == 6);
    CHECK(coeff_positions(1)[1] == 1);

    // Block-scan oracle: a_i is the first slot of block i-1.
    for (int n = 1; n <= 30; ++n) {
        const DegreeLayout layout = degree_layout(n);
        const std::vector<int> J = coeff_positions(n);
        for (int i = 1; i <= n; ++i) CHECK(J[i] == layout.offsets[i - 1]);
    }
}

TEST_CASE("linear positions decode to exactly one live factor") {
    for (int n = 2; n <= 12; ++n) {
        const DegreeLayout layout = degree_layout(n);
        const IndexTables t = index_vectors(n);
        std::vector<bool> is_linear(layout.p + 1, false);
        for (int i = 1; i <= n; ++i) {
            is_linear[t.J[i]] = true;
            CHECK(t.I[t.J[i] - 1] == i);
            CHECK(t.Ibar[t.J[i] - 1] == 0);
        }
        for (int pos = 1; pos <= layout.p; ++pos) {
            if (is_linear[pos]) continue;
            CHECK(t.I[pos - 1] != 0);
            CHECK(t.Ibar[pos - 1] != 0);
        }
    }
}

TEST_CASE("build_x reproduces the n = 3 variable vector") {
    const std::vector<Complex> a{Complex(2.0, 0.0), Complex(3.0, 1.0), Complex(-1.0, 0.5)};
    const Eigen::VectorXcd x = build_x(a, index_vectors(3));
    REQUIRE(x.size() == 12);
    CHECK(x(0) == a[0]);
    CHECK(x(1) == a[1]);
    CHECK(x(2) == a[2]);
    CHECK(x(3) == a[0] * std::conj(a[1]));
    CHECK(x(4) == a[1] * std::conj(a[2]));
    CHECK(x(5) == a[0] * std::conj(a[0]));
    CHECK(x(6) == a[2] * std::conj(a[2]));
    CHECK(x(7) == std::conj(a[1]) * a[2]);
    CHECK(x(8) == std::conj(a[0]) * a[1]);
    CHECK(x(9) == std::conj(a[2]));
    CHECK(x(10) == std::conj(a[1]));
    CHECK(x(11) == std::conj(a[0]));

    const Eigen::VectorXcd zero = build_x({Complex(0.0), Complex(0.0), Complex(0.0)}, index_vectors(3));
    CHECK(zero.norm() == 0.0);
}

TEST_CASE("x(a) is self-reversive away from its degree-n block, which is real") {
    for (int n = 2; n <= 8; ++n) {
        const DegreeLayout layout = degree_layout(n);
        const Eigen::VectorXcd x = build_x(random_coeffs(n), index_vectors(n));
        const int total = layout.total();
        const int lo = layout.offsets[n] - 1;
        const int hi = lo + layout.sizes[n] - 1;
        for (int i = 0; i < total; ++i) {
            if (i >= lo && i <= hi) {
                CHECK(std::abs(x(i).imag()) < 1e-15);
            } else {
                const int mirror = total - 1 - i;
                CHECK(std::abs(x(i) - std::conj(x(mirror))) < 1e-14);
            }
        }
    }
}

TEST_CASE("dense system row follows the n = 3 monomial pattern") {
    const std::vector<Complex> pts{Complex(0.7, -0.2), Complex(0.1, 0.3), Complex(-0.4, 0.1)};
    const DenseSystem sys = dense_system(3, pts);
    REQUIRE(sys.A.rows() == 6);
    REQUIRE(sys.A.cols() == 12);

    const Complex z = pts[0];
    const std::vector<Complex> row{
        1.0,       2.0 * z,              3.0 * z * z,          -z * z,
        z * z,     -2.0 * std::pow(z, 3), 2.0 * std::pow(z, 3), std::pow(z, 4),
        -std::pow(z, 4), 3.0 * std::pow(z, 4), 2.0 * std::pow(z, 5), std::pow(z, 6)};
    for (int c = 0; c < 12; ++c) CHECK(std::abs(sys.A(0, c) - row[c]) < 1e-14);
    CHECK(std::abs(sys.b(0) - (-4.0 * std::pow(z, 3))) < 1e-14);
    CHECK(std::abs(sys.b(3) - (-4.0 * std::pow(1.0 / std::conj(pts[0]), 3))) < 1e-12);
}

TEST_CASE("dense system has rank 2n for distinct points") {
    for (int n = 1; n <= 5; ++n) {
        const DenseSystem sys = dense_system(n, random_points(n));
        const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys.A);
        const auto& sv = svd.singularValues();
        int rank = 0;
        for (int i = 0; i < sv.size(); ++i)
            if (sv(i) > 1e-10 * sv(0)) ++rank;
        CHECK(rank == 2 * n);
    }
}

TEST_CASE("dense system rejects bad points") {
    CHECK_THROWS_AS(dense_system(2, {Complex(0.5), Complex(0.5)}), std::invalid_argument);
    CHECK_THROWS_AS(dense_system(2, {Complex(0.0), Complex(0.5)}), std::invalid_argument);
    CHECK_THROWS_AS(dense_system(2, {Complex(1.5), Complex(0.5)}), std::invalid_argument);
}

TEST_CASE("wronskian_from_coeffs basics") {
    const Complex a1(0.3, -0.4);
    const Polynomial W = wronskian_from_coeffs({a1});
    REQUIRE(W.coeffs.size() == 3);
    CHECK(std::abs(W.coeffs[0] - a1) < 1e-15);
    CHECK(std::abs(W.coeffs[1] - Complex(2.0)) < 1e-15);
    CHECK(std::abs(W.coeffs[2] - std::conj(a1)) < 1e-15);

    const Polynomial W0 = wronskian_from_coeffs(std::vector<Complex>(4, Complex(0.0)));
    REQUIRE(W0.coeffs.size() == 9);
    for (int j = 0; j <= 8; ++j) CHECK(std::abs(W0.coeffs[j] - (j == 4 ? Complex(5.0) : Complex(0.0))) == 0.0);
}

TEST_CASE("wronskian equals the degree-ordered table assembly") {
    for (int n = 2; n <= 8; ++n) {
        const std::vector<Complex> a = random_coeffs(n);
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
        REQUIRE(W.coeffs.size() == assembled.size());
        for (std::size_t j = 0; j < assembled.size(); ++j)
            CHECK(std::abs(W.coeffs[j] - assembled[j]) <= 1e-12 * scale);
    }
}

TEST_CASE("dense rows contract to Wronskian values") {
    const int n = 4;
    const std::vector<Complex> pts = random_points(n);
    const std::vector<Complex> a = random_coeffs(n);
    const DenseSystem sys = dense_system(n, pts);
    const Eigen::VectorXcd x = build_x(a, index_vectors(n));
    const Polynomial W = wronskian_from_coeffs(a);

    const Eigen::VectorXcd lhs = sys.A * x - sys.b;  // A x(a) + (n+1) z^n per row
    for (int k = 0; k < n; ++k) {
        const Complex expect = eval(W, pts[k]);
        CHECK(std::abs(lhs(k) - expect) <= 1e-10 * (1.0 + std::abs(expect)));
    }
}
