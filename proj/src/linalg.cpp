#include "delsarte/linalg.hpp"

#include <utility>

namespace delsarte {

MatrixZ clear_row_denominators(const MatrixQ& m) {
    MatrixZ out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Integer scale = 1;
        for (Eigen::Index j = 0; j < m.cols(); ++j) scale = lcm(scale, denominator(m(i, j)));
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = numerator(m(i, j) * Rational(scale));
    }
    return out;
}

std::vector<Eigen::Index> bareiss_echelon(MatrixZ& m, int& sign) {
    sign = 1;
    std::vector<Eigen::Index> pivots;
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Integer prev = 1;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            m.row(p).swap(m.row(r));
            sign = -sign;
        }
        const Integer pivot = m(r, c);
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            for (Eigen::Index j = c + 1; j < cols; ++j)
                m(i, j) = (pivot * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = 0;
        }
        // rows above the pivot row are untouched; entries left of c in the
        // rows below are already zero
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Integer determinant(const MatrixZ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    MatrixZ work = m;
    int sign = 1;
    auto pivots = bareiss_echelon(work, sign);
    if (static_cast<Eigen::Index>(pivots.size()) < m.rows()) return 0;
    return sign * work(m.rows() - 1, m.cols() - 1);
}

Rational determinant(const MatrixQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    Integer scale = 1;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Integer row = 1;
        for (Eigen::Index j = 0; j < m.cols(); ++j) row = lcm(row, denominator(m(i, j)));
        scale *= row;
    }
    return Rational(determinant(clear_row_denominators(m))) / Rational(scale);
}

Eigen::Index rank(const MatrixQ& m) {
    MatrixZ work = clear_row_denominators(m);
    int sign = 1;
    return static_cast<Eigen::Index>(bareiss_echelon(work, sign).size());
}

namespace {

// Reduced row echelon form over Q, starting from a fraction-free echelon
// form so the forward pass never leaves Z.
MatrixQ reduced_echelon(const MatrixQ& m, std::vector<Eigen::Index>& pivots) {
    MatrixZ work = clear_row_denominators(m);
    int sign = 1;
    pivots = bareiss_echelon(work, sign);
    MatrixQ r = to_rational(work);
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const auto row = static_cast<Eigen::Index>(k);
        const Eigen::Index c = pivots[k];
        r.row(row) /= r(row, c);
        for (Eigen::Index i = 0; i < row; ++i) {
            if (r(i, c) == 0) continue;
            r.row(i) -= r(i, c) * r.row(row);
        }
    }
    return r;
}

}  // namespace

MatrixQ invert(const MatrixQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const Eigen::Index n = m.rows();
    MatrixQ augmented(n, 2 * n);
    augmented << m, MatrixQ::Identity(n, n);
    std::vector<Eigen::Index> pivots;
    MatrixQ r = reduced_echelon(augmented, pivots);
    if (static_cast<Eigen::Index>(pivots.size()) < n || pivots.back() >= n)
        throw SingularMatrixError("matrix is singular");
    return r.rightCols(n);
}

IntegerVector make_primitive(const IntegerVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) return v;
    IntegerVector out = v / g;
    for (Eigen::Index i = out.size(); i-- > 0;) {
        if (out(i) == 0) continue;
        if (out(i) < 0) out = -out;
        break;
    }
    return out;
}

IntegerVector primitive_integral_multiple(const VectorQ& v) {
    Integer scale = 1;
    for (const auto& x : v) scale = lcm(scale, denominator(x));
    IntegerVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = numerator(v(i) * Rational(scale));
    Integer g = 0;
    for (const auto& x : out) g = gcd(g, x);
    if (g != 0) out /= g;
    return out;
}

std::vector<IntegerVector> right_kernel(const MatrixQ& m) {
    std::vector<Eigen::Index> pivots;
    MatrixQ r = reduced_echelon(m, pivots);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<IntegerVector> basis;
    for (Eigen::Index free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        VectorQ x = VectorQ::Zero(m.cols());
        x(free) = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            x(pivots[k]) = -r(static_cast<Eigen::Index>(k), free);
        basis.push_back(primitive_integral_multiple(x));
    }
    return basis;
}

IntegerVector left_kernel_normalized(const MatrixQ& m) {
    if (m.rows() != 4 || m.cols() != 3)
        throw std::invalid_argument("left kernel expects a 4x3 matrix");
    auto basis = right_kernel(m.transpose());
    if (basis.size() != 1) throw RankDeficiencyError("matrix does not have rank 3");
    return make_primitive(basis.front());
}

}  // namespace delsarte
