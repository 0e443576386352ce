#pragma once

// Shioda's enumeration for Delsarte surfaces: the character group L generated
// by v_i = (e_i - e_4) A^{-1} in (Q/Z)^4, the subset L0 of vectors without zero
// entries, the set Lambda of vectors with a unit multiple whose fractional
// parts do not sum to 2, and the resulting Lefschetz and Picard numbers for
// the family y^2 = x^p + t^{2ap} + s^{2ap}.

#include "delsarte/exact.hpp"
#include "delsarte/model.hpp"

#include <array>
#include <set>
#include <string>
#include <vector>

namespace delsarte {

struct CharacterVector {
    std::array<QmodZ, 4> entries;

    bool has_zero_entry() const;
    /// Sum of the representatives in [0, 1).
    Rational fractional_sum() const;
    /// lcm of the orders of the entries.
    long modulus() const;
    CharacterVector scaled(long t) const;
    std::string str() const;

    friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
    friend auto operator<=>(const CharacterVector&, const CharacterVector&) = default;
};

struct ShiodaVectors {
    CharacterVector v1, v2, v3;
};

/// v_i = (e_i - e_4) A^{-1} reduced mod Z^4, i = 1, 2, 3.
ShiodaVectors shioda_vectors(const MatrixQ& a);

/// The subgroup of (Q/Z)^4 generated by v1, v2, v3, sorted.
std::vector<CharacterVector> enumerate_L(const ShiodaVectors& v);

/// Members of L with all four entries nonzero, sorted.
std::vector<CharacterVector> enumerate_L0(const ShiodaVectors& v);

struct LambdaVerdict {
    CharacterVector vector;
    bool in_lambda = false;
    long witness = 0;  ///< a unit t mod N with fractional sum of t v different from 2
    long modulus = 1;  ///< N
};

/// Stops at the first unit witness.
LambdaVerdict lambda_membership(const CharacterVector& v);

/// Evaluates every unit t mod N; the reference the early exit is checked
/// against.
LambdaVerdict lambda_membership_exhaustive(const CharacterVector& v);

/// Number of vectors of `l0` in Lambda, split across `threads` workers. The
/// result does not depend on the thread count.
long count_in_lambda(const std::vector<CharacterVector>& l0, unsigned threads = 1);

/// #(L0 intersected with Lambda) for an invertible exponent matrix.
long lefschetz_number(const MatrixQ& a, unsigned threads = 1);

struct InvalidParamsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FamilyParams {
    long p = 3;
    long a = 1;

    /// Throws InvalidParamsError unless p is an odd prime and a >= 1.
    static FamilyParams make(long p, long a);
    long degree() const { return 2 * a * p; }
};

/// y^2 w^{2ap-2} + x^p w^{2ap-p} + t^{2ap} + w^{2ap} (the affine chart s = 1).
DelsarteSurface family_surface(const FamilyParams& params);

/// (1/2, i/p, j/2ap, -(1/2 + i/p + j/2ap)) for 0 < i < p and 0 < j < 2ap,
/// dropping the vectors whose last entry vanishes.
std::vector<CharacterVector> family_L0(const FamilyParams& params);

struct FamilyPicard {
    FamilyParams params;
    long l0_count = 0;
    long lambda = 0;
    long rho_tilde = 0;  ///< 2 + #L0 - lambda
    long rho = 0;        ///< rho_tilde - 1
};

FamilyPicard picard_family(const FamilyParams& params, unsigned threads = 1);

/// Values fr(j/2ap) over the vectors with i = 1 that lie outside Lambda.
std::set<Rational> excluded_fractions(const FamilyParams& params);

struct HodgeCounts {
    long h20 = 0, h11prim = 0, h02 = 0;
    long total() const { return h20 + h11prim + h02; }
};

/// Family vectors graded by the sum q of their representatives in (0, 1).
HodgeCounts gs_hodge_counts(const FamilyParams& params);

}  // namespace delsarte
