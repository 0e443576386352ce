#pragma once

// Singular fibers of a minimal Delsarte fibration away from t = 0, infinity:
// the locus t^k4 = prod k_i^k_i, the quotient by the base automorphism, the
// three-way structure classification, isotrivial normal forms, and an
// independent elimination oracle for the locus.

#include "delsarte/polynomial.hpp"
#include "delsarte/reduction.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace delsarte {

struct DegreeOverflowError : std::domain_error {
    using std::domain_error::domain_error;
};

struct OracleDegenerateError : std::domain_error {
    using std::domain_error::domain_error;
};

struct RejectedInputError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NoMatchError : std::domain_error {
    using std::domain_error::domain_error;
};

struct SingularLocus {
    bool degenerate = false;  ///< two of the N_i coincide; no equation
    long k4 = 0;
    Rational c;               ///< t^k4 = c
    std::vector<Rational> rational_roots;

    /// t^k4 - c (zero polynomial when degenerate).
    PolyQ equation() const;
};

/// prod over k_i != 0 of k_i^k_i, exactly.
Rational kernel_product(const IntegerVector& k);

SingularLocus singular_locus(const MinimalFibration& mf);

/// Squarefree polynomial in t vanishing exactly where the projective closure
/// (in x, y) of f(x, y, t) = 0 acquires a singular point that is not present
/// for every t, with t = 0 left out. Isolated singular points off the
/// coordinate points come from elimination ideals; jumps at the coordinate
/// points from the Newton diagram. Throws OracleDegenerateError when the
/// singular points of the pencil are not isolated.
PolyQ discriminant_oracle(const AffineEquation& f);

struct StructureDecomposition {
    long k4 = 1;
    Rational quotient_value;  ///< the one possible singular value of the quotient
    std::vector<std::string> quotient_places;  ///< "0", "infinity", the value
    std::string statement;
};

StructureDecomposition structure_decomposition(const MinimalFibration& mf);

struct Isotrivial {
    int duplicate_index = 0;  ///< 0-based index i < 3 with m_i = m_4
};
/// y^a = x^b + x^c + t x^d
struct Superelliptic {
    long a = 0, b = 0, c = 0, d = 0;
};
struct SemistableElsewhere {};
using Trichotomy = std::variant<Isotrivial, Superelliptic, SemistableElsewhere>;

/// Geometric genus of the generic fiber from the interior lattice points of
/// the Newton polygon of m1, ..., m4.
long fiber_genus(const MinimalFibration& mf);

Trichotomy classify_trichotomy(const MinimalFibration& mf);

std::string to_string(const Trichotomy& t);

/// Genus of the smooth model of y^a = f(x), f with the given root
/// multiplicities and degree (Riemann-Hurwitz over P^1).
long superelliptic_genus(long a, const std::vector<long>& multiplicities, long degree);

enum class IsotrivialFamily {
    RepeatedMonomial,  ///< m1 + m2 + (1 + t^n) m3
    CubicCubic,        ///< y^3 + x^3 + x^2 + t^n
    QuadraticCover,    ///< y^a + x^2 + x + t^n
};

struct IsotrivialForm {
    IsotrivialFamily family;
    long n = 1;
    long a = 0;  ///< exponent of y for the last family
    std::string str() const;
};

IsotrivialForm classify_isotrivial(const MinimalFibration& mf, long n = 1);
/// Reduces first; n is the reduction degree.
IsotrivialForm classify_isotrivial(const DelsarteSurface& s);

struct NodalCheck {
    bool applicable = false;  ///< false outside the semistable branch
    bool all_nodes = false;   ///< every torus singular point at t^k4 = c is a node
    bool has_singular_point = false;
};

/// Exact local algebra: the ideal of torus points on t^k4 = c where f, f_x,
/// f_y and the Hessian all vanish must be the unit ideal.
NodalCheck nodal_check(const MinimalFibration& mf);

}  // namespace delsarte
