#pragma once

// Degenerate exponent matrices (rational or split fibrations) and reduction
// of a Delsarte fibration to a minimal one m1 + m2 + m3 + t m4, together with
// its plane model over K(t) and the kernel vector k.

#include "delsarte/model.hpp"

#include <optional>
#include <variant>

namespace delsarte {

/// A nonzero v = (a, b, c, 0) with A v in span(1,1,1,1), present iff
/// det(A) = 0. A vector with c = 0 is preferred when the solution space
/// contains one.
std::optional<IntegerVector> detect_split_direction(const MatrixQ& a);

struct RationalFiber {};
struct SplitAfterBaseChange {
    long degree = 0;
};
using DegeneracyVerdict = std::variant<RationalFiber, SplitAfterBaseChange>;

DegeneracyVerdict classify_degenerate(const MatrixQ& a, const IntegerVector& v);

/// A monomial x^x y^y of a minimal fibration (the t-exponent stays 0).
struct MinimalFibration {
    std::array<Monomial3, 4> m;

    static MinimalFibration from_exponents(const std::array<std::array<int, 2>, 4>& xy);

    AffineEquation equation() const;
    /// Homogenization M1 + M2 + M3 + X2 M4 with deg M4 = d - 1.
    DelsarteSurface surface() const;
    bool has_duplicate() const;
    std::string str() const;
};

struct PlaneModel {
    MatrixQ a;        ///< exponent matrix of the surface (4x4)
    MatrixQ bridge;   ///< B with A' = A B (4x3)
    MatrixQ a_prime;  ///< exponent matrix of G = N1 + N2 + N3 + t N4 (4x3)
    IntegerVector k;  ///< normalized left kernel of A'
    bool ell1_contained = false;
    long degree = 0;  ///< degree of the plane curves G
};

PlaneModel plane_model(const MinimalFibration& mf);

struct Reduction {
    MinimalFibration fibration;
    /// input(x t^a, y t^b, t^n) = t^e * minimal(x, y, t^degree)
    BaseChangeSpec twist;
    long degree = 1;
    int pivot = 3;  ///< input monomial that carries t in the minimal form
};

/// Lemma-style reduction. Among the candidate vectors (one per monomial) the
/// one minimizing (|c|, |a| + |b|, index) is used.
Reduction reduce_to_minimal(const DelsarteSurface& s);

}  // namespace delsarte
