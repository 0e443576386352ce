#pragma once

// Delsarte surfaces, their standard fibration in the affine chart X3 = 1,
// and Delsarte base changes (x, y, t) -> (x t^a, y t^b, t^n).
//
// Columns of the exponent matrix are X0 = x, X1 = y, X2 = t, X3 = w.

#include "delsarte/exact.hpp"

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace delsarte {

struct InconsistentDegreeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NeedsNormalizationError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DegenerateInputError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exponents of x, y and t in the affine chart. The t-exponent may be
/// negative transiently, before a t-power is cleared.
struct Monomial3 {
    int x = 0;
    int y = 0;
    int t = 0;

    int xy_degree() const { return x + y; }
    auto operator<=>(const Monomial3&) const = default;
};

using ExponentMatrix = Eigen::Matrix<long, 4, 4>;

struct DelsarteSurface {
    ExponentMatrix exponents = ExponentMatrix::Zero();
    std::array<Rational, 4> coefficients{Rational(1), Rational(1), Rational(1), Rational(1)};
    bool allow_repeated_rows = false;

    static DelsarteSurface from_rows(const std::array<std::array<long, 4>, 4>& rows);

    /// The exponent matrix A over Q.
    MatrixQ matrix() const;
    bool all_ones() const;
    /// Sum of the first row (the common degree once validated).
    long degree() const { return exponents.row(0).sum(); }
};

struct ValidationReport {
    long degree = 0;
    Integer determinant;
    bool distinct_rows = true;
};

/// Checks nonnegative entries and equal row sums; reports d, det(A) and
/// whether the four monomials are pairwise distinct.
ValidationReport validate_surface(const DelsarteSurface& s);

/// Applies a coordinate permutation: column j of the result is column
/// perm[j] of the input.
DelsarteSurface permute_coordinates(const DelsarteSurface& s, const std::array<int, 4>& perm);

struct AffineTerm {
    Rational coefficient{1};
    Monomial3 monomial;
};

struct AffineEquation {
    std::vector<AffineTerm> terms;

    int min_t() const;
    /// Divides by t^e with e the smallest t-exponent and returns e.
    long clear_t_power();
    AffineEquation cleared() const;
    std::string str() const;
};

/// Same terms up to order, after clearing the t-power on both sides.
bool equivalent(const AffineEquation& a, const AffineEquation& b);

/// f(x, y, t) = F(x, y, t, 1).
AffineEquation affine_equation(const DelsarteSurface& s);

/// Homogenizes a four-term affine equation with the smallest possible degree.
DelsarteSurface homogenize(const AffineEquation& f);

struct BaseChangeSpec {
    long n = 1;  ///< degree; negative means t -> 1/t first
    long a = 0;  ///< x -> x t^a
    long b = 0;  ///< y -> y t^b
    long e = 0;  ///< t-power divided out afterwards
};

/// f(x t^a, y t^b, t^n), not cleared.
AffineEquation substitute(const AffineEquation& f, const BaseChangeSpec& bc);

/// Substitutes, clears the t-power and homogenizes.
DelsarteSurface apply_base_change(const DelsarteSurface& s, const BaseChangeSpec& bc);

}  // namespace delsarte
