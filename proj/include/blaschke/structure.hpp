#pragma once

#include <Eigen/Dense>
#include <vector>

#include "blaschke/poly.hpp"

namespace blaschke {

/// Degree-block geometry of the variable vector x(a) for a given n.
/// Block d holds the Wronskian terms of degree d; positions are 1-based
/// to match the reporting convention used throughout.
struct DegreeLayout {
    int n = 0;
    int m = 0;  // floor(n^2/2), number of quadratic constraints
    int p = 0;  // m + n, length of the reduced vector
    std::vector<int> sizes;    // block size per degree d = 0..2n
    std::vector<int> offsets;  // 1-based start of block d

    int total() const { return n * n + n; }
    int degree_of(int pos) const;  // block degree containing 1-based position
};

DegreeLayout degree_layout(int n);

/// Concatenated integer weights w = (w^0, ..., w^2n), length n^2+n.
struct WeightVector {
    std::vector<double> w;
};

/// Index tables decoding x_i = a_{I_i} * conj(a_{Ibar_i}), with the value 0
/// standing for the absent factor a_0 := 1. J[i] is the 1-based position of
/// the linear variable a_i inside x; J[0] = 0.
struct IndexTables {
    std::vector<int> I;
    std::vector<int> Ibar;
    std::vector<int> J;
};

std::vector<double> weight_block(int n, int d);
std::vector<int> index_block(int n, int d);
std::vector<int> conj_index_block(int n, int d);

WeightVector weight_vectors(int n);
IndexTables index_vectors(int n);
std::vector<int> coeff_positions(int n);

struct DenseSystem {
    Eigen::MatrixXcd A;  // 2n x (n^2+n)
    Eigen::VectorXcd b;  // -(n+1) [z_1^n ... z_2n^n]^T
};

/// Test oracle only: the ill-conditioned relaxed linear system over the
/// points z_1..z_n and their circle reflections 1/conj(z_k). Never used in
/// the production solve path.
DenseSystem dense_system(int n, const std::vector<Complex>& points);

/// x(a): full variable vector of length n^2+n decoded through the tables.
Eigen::VectorXcd build_x(const std::vector<Complex>& a, const IndexTables& tables);

/// W = p'q - p q' for the normalized ansatz
/// B = (a_1 z + ... + a_n z^n + z^{n+1}) / (1 + conj(a_n) z + ... + conj(a_1) z^n).
Polynomial wronskian_from_coeffs(const std::vector<Complex>& a);

}  // namespace blaschke
