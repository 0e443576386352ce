#pragma once

// Exact linear algebra over Q and Z for the small dense matrices of the
// pipeline (exponent matrices, plane-model matrices, oracle tooling).
// Elimination is fraction-free (Bareiss) on an integer image of the input.

#include "delsarte/exact.hpp"

#include <vector>

namespace delsarte {

struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

struct RankDeficiencyError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Scales each row by the lcm of its denominators; the result is integral and
/// row-equivalent to m.
MatrixZ clear_row_denominators(const MatrixQ& m);

template <typename Derived>
MatrixQ to_rational(const Eigen::MatrixBase<Derived>& m) {
    MatrixQ out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

/// Fraction-free row echelon form in place. Every division is exact.
/// Returns the pivot columns; `sign` picks up row swaps.
std::vector<Eigen::Index> bareiss_echelon(MatrixZ& m, int& sign);

Integer determinant(const MatrixZ& m);
Rational determinant(const MatrixQ& m);

Eigen::Index rank(const MatrixQ& m);

/// Exact inverse. Throws SingularMatrixError when det(m) = 0.
MatrixQ invert(const MatrixQ& m);

/// Basis of {x : m x = 0}, each vector primitive and integral.
std::vector<IntegerVector> right_kernel(const MatrixQ& m);

/// The unique primitive integer k with k m = 0 and k_last > 0, for a 4x3
/// matrix of rank 3. Throws RankDeficiencyError otherwise. If the last entry
/// of the kernel happens to vanish, the sign is fixed by the last nonzero one.
IntegerVector left_kernel_normalized(const MatrixQ& m);

/// Divides out the content and fixes the sign so the last nonzero entry is
/// positive.
IntegerVector make_primitive(const IntegerVector& v);

/// Clears denominators of v and returns the primitive integral multiple with
/// the same direction (sign preserved).
IntegerVector primitive_integral_multiple(const VectorQ& v);

}  // namespace delsarte
