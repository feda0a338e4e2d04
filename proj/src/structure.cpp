#include "blaschke/structure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blaschke {

namespace {

void check_n(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
}

void check_points(int n, const std::vector<Complex>& points) {
    if (static_cast<int>(points.size()) != n) throw std::invalid_argument("expected n critical points");
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

}  // namespace

int DegreeLayout::degree_of(int pos) const {
    if (pos < 1 || pos > total()) throw std::out_of_range("position outside variable vector");
    for (int d = 0; d <= 2 * n; ++d)
        if (pos < offsets[d] + sizes[d]) return d;
    throw std::logic_error("degree layout scan failed");
}

DegreeLayout degree_layout(int n) {
    check_n(n);
    DegreeLayout layout;
    layout.n = n;
    layout.m = (n * n) / 2;
    layout.p = layout.m + n;
    layout.sizes.resize(2 * n + 1);
    layout.offsets.resize(2 * n + 1);
    int off = 1;
    for (int d = 0; d <= 2 * n; ++d) {
        const int dd = std::min(d, 2 * n - d);
        layout.sizes[d] = (d == n) ? 2 * (n / 2) : 2 * (dd / 2) + 1;
        layout.offsets[d] = off;
        off += layout.sizes[d];
    }
    if (off - 1 != layout.total()) throw std::logic_error("degree layout does not sum to n^2+n");
    return layout;
}

std::vector<double> weight_block(int n, int d) {
    check_n(n);
    if (d < 0 || d > 2 * n) throw std::invalid_argument("degree out of range");

    std::vector<double> w;
    if (d == n) {
        for (int i = 1; i <= n; ++i) {
            if (n % 2 == 1 && i == (n + 1) / 2) continue;
            w.push_back(double(2 * i - n - 1));
        }
    } else if (d == 0 || d == 2 * n) {
        w.push_back(1.0);
    } else if (d == 1 || d == 2 * n - 1) {
        w.push_back(2.0);
    } else if (d < n) {
        w.push_back(double(d + 1));
        for (int i = 1; i <= d; ++i) {
            if (d % 2 == 1 && i == (d + 1) / 2) continue;
            w.push_back(double(2 * i - d - 1));
        }
    } else {
        const int kd = (2 * n - d + 1) / 2;
        for (int i = 1; i <= 2 * n - d; ++i) {
            if (d % 2 == 1 && i == kd) continue;
            w.push_back(double(2 * (n - i) - d + 1));
        }
        w.push_back(double(2 * n - d + 1));
    }
    return w;
}

std::vector<int> index_block(int n, int d) {
    check_n(n);
    if (d < 0 || d > 2 * n) throw std::invalid_argument("degree out of range");
    if (d > n) {
        std::vector<int> v = conj_index_block(n, 2 * n - d);
        std::reverse(v.begin(), v.end());
        return v;
    }
    std::vector<int> v;
    if (d == n) {
        for (int i = 1; i <= n; ++i) {
            if (n % 2 == 1 && i == (n + 1) / 2) continue;
            v.push_back(i);
        }
    } else if (d == 0) {
        v.push_back(1);
    } else {
        v.push_back(d + 1);
        for (int i = 1; i <= d; ++i) {
            if (d % 2 == 1 && i == (d + 1) / 2) continue;
            v.push_back(i);
        }
    }
    return v;
}

std::vector<int> conj_index_block(int n, int d) {
    check_n(n);
    if (d < 0 || d > 2 * n) throw std::invalid_argument("degree out of range");
    if (d > n) {
        std::vector<int> v = index_block(n, 2 * n - d);
        std::reverse(v.begin(), v.end());
        return v;
    }
    std::vector<int> v;
    if (d == n) {
        return index_block(n, n);
    } else if (d == 0) {
        v.push_back(0);
    } else {
        v.push_back(0);
        for (int i = 1; i <= d; ++i) {
            if (d % 2 == 1 && i == (d + 1) / 2) continue;
            v.push_back(n - d + i);
        }
    }
    return v;
}

WeightVector weight_vectors(int n) {
    check_n(n);
    WeightVector wv;
    wv.w.reserve(n * n + n);
    for (int d = 0; d <= 2 * n; ++d) {
        const std::vector<double> block = weight_block(n, d);
        wv.w.insert(wv.w.end(), block.begin(), block.end());
    }
    if (static_cast<int>(wv.w.size()) != n * n + n) throw std::logic_error("weight vector length mismatch");
    return wv;
}

IndexTables index_vectors(int n) {
    check_n(n);
    IndexTables t;
    t.I.reserve(n * n + n);
    t.Ibar.reserve(n * n + n);
    for (int d = 0; d <= 2 * n; ++d) {
        const std::vector<int> bi = index_block(n, d);
        const std::vector<int> bc = conj_index_block(n, d);
        t.I.insert(t.I.end(), bi.begin(), bi.end());
        t.Ibar.insert(t.Ibar.end(), bc.begin(), bc.end());
    }
    t.J = coeff_positions(n);
    if (static_cast<int>(t.I.size()) != n * n + n || t.I.size() != t.Ibar.size())
        throw std::logic_error("index vector length mismatch");
    return t;
}

std::vector<int> coeff_positions(int n) {
    check_n(n);
    std::vector<int> J(n + 1);
    J[0] = 0;
    for (int i = 1; i <= n; ++i) {
        const int k = (i - 1) * (i - 1);
        J[i] = (k + 1) / 2 + 1;
    }
    return J;
}

DenseSystem dense_system(int n, const std::vector<Complex>& points) {
    check_points(n, points);
    const DegreeLayout layout = degree_layout(n);
    const WeightVector wv = weight_vectors(n);

    std::vector<Complex> zs(2 * n);
    for (int k = 0; k < n; ++k) {
        zs[k] = points[k];
        zs[n + k] = 1.0 / std::conj(points[k]);
    }

    DenseSystem sys;
    sys.A.resize(2 * n, layout.total());
    sys.b.resize(2 * n);
    for (int k = 0; k < 2 * n; ++k) {
        Complex zd = 1.0;
        int pos = 0;
        for (int d = 0; d <= 2 * n; ++d) {
            for (int s = 0; s < layout.sizes[d]; ++s, ++pos) sys.A(k, pos) = wv.w[pos] * zd;
            zd *= zs[k];
        }
        sys.b(k) = -double(n + 1) * std::pow(zs[k], n);
    }
    return sys;
}

Eigen::VectorXcd build_x(const std::vector<Complex>& a, const IndexTables& tables) {
    const auto factor = [&](int idx) -> Complex {
        return idx == 0 ? Complex(1.0) : a.at(idx - 1);
    };
    Eigen::VectorXcd x(tables.I.size());
    for (std::size_t i = 0; i < tables.I.size(); ++i)
        x(i) = factor(tables.I[i]) * std::conj(factor(tables.Ibar[i]));
    return x;
}

Polynomial wronskian_from_coeffs(const std::vector<Complex>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<Complex> pc(n + 2, Complex(0.0));
    for (int i = 1; i <= n; ++i) pc[i] = a[i - 1];
    pc[n + 1] = 1.0;
    std::vector<Complex> qc(n + 1, Complex(0.0));
    qc[0] = 1.0;
    for (int j = 1; j <= n; ++j) qc[j] = std::conj(a[n - j]);

    const Polynomial p(std::move(pc));
    const Polynomial q(std::move(qc));
    return add(mul(derivative(p), q), scale(mul(p, derivative(q)), Complex(-1.0)));
}

}  // namespace blaschke
