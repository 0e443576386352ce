#pragma once

#include "delsarte/model.hpp"
#include "delsarte/polynomial.hpp"
#include "delsarte/reduction.hpp"

#include <random>
#include <vector>

namespace testing {

using namespace delsarte;

inline Rational q(long n, long d = 1) { return Rational(n) / Rational(d); }

/// Coefficients low to high.
inline PolyQ poly(std::initializer_list<Rational> c) { return PolyQ(std::vector<Rational>(c)); }

inline PolyQ t_power(long k) { return PolyQ::monomial(Rational(1), static_cast<int>(k)); }

inline MinimalFibration fib(std::array<int, 2> m1, std::array<int, 2> m2, std::array<int, 2> m3,
                            std::array<int, 2> m4) {
    return MinimalFibration::from_exponents({m1, m2, m3, m4});
}

// The three running examples.
inline MinimalFibration cubic_quadratic() { return fib({0, 2}, {3, 0}, {2, 0}, {0, 0}); }  // y^2+x^3+x^2+t
inline MinimalFibration cubic_linear() { return fib({0, 2}, {3, 0}, {1, 0}, {0, 0}); }     // y^2+x^3+x+t
inline MinimalFibration cubic_tx() { return fib({0, 2}, {3, 0}, {2, 0}, {1, 0}); }         // y^2+x^3+x^2+tx

inline IntegerVector ivec(std::initializer_list<long> v) {
    IntegerVector out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (long x : v) out(i++) = x;
    return out;
}

inline MatrixQ qmat(const std::vector<std::vector<long>>& rows) {
    MatrixQ m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return m;
}

/// Irreducible, nondegenerate minimal fibrations of plane degree <= max_degree
/// with pairwise distinct monomials: no variable divides all four monomials,
/// det(A) != 0 and no two plane-model rows coincide.
std::vector<MinimalFibration> fibration_corpus(int max_degree);

/// Random valid minimal fibrations (det(A) != 0, distinct monomials).
std::vector<MinimalFibration> random_fibrations(std::size_t count, int max_degree, unsigned seed);

}  // namespace testing
