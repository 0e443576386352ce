#pragma once

// Genus-1 fibrations over P^1_t: Weierstrass invariants, Kodaira fiber types
// at 0, infinity and the remaining places, the gamma invariant, and the test
// that a minimal Delsarte fibration is a base change of a rational elliptic
// surface with gamma < 1.

#include "delsarte/polynomial.hpp"
#include "delsarte/reduction.hpp"

#include <string>
#include <vector>

namespace delsarte {

struct NotEllipticError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotConvertibleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q[t].
struct WeierstrassModel {
    PolyQ a1, a2, a3, a4, a6;

    static WeierstrassModel short_form(const PolyQ& a2, const PolyQ& a4, const PolyQ& a6);
    std::string str() const;
};

struct WeierstrassInvariants {
    PolyQ b2, b4, b6, b8;
    PolyQ c4, c6, discriminant;
    /// j = c4^3 / discriminant in lowest terms, denominator monic.
    PolyQ j_numerator, j_denominator;

    bool constant_j() const { return j_numerator.degree() <= 0 && j_denominator.degree() <= 0; }
};

WeierstrassInvariants weierstrass_invariants(const WeierstrassModel& w);

enum class KodairaSymbol { Smooth, I, IStar, II, III, IV, IVStar, IIIStar, IIStar };

struct KodairaFiber {
    KodairaSymbol symbol = KodairaSymbol::Smooth;
    long n = 0;          ///< index of I_n and I_n*
    long euler = 0;      ///< Euler number of the fiber
    long conductor = 0;  ///< exponent of the conductor

    static KodairaFiber make(KodairaSymbol symbol, long n = 0);
    /// n for I_n and I_n*, else 0.
    long n_value() const;
    bool multiplicative() const { return symbol == KodairaSymbol::I && n > 0; }
    std::string name() const;
    friend bool operator==(const KodairaFiber&, const KodairaFiber&) = default;
};

/// A place of P^1_t, or a Galois orbit of places given by a squarefree factor.
struct Place {
    enum class Kind { Zero, Infinity, Away };
    Kind kind = Kind::Zero;
    PolyQ factor;  ///< monic squarefree factor for Away places
    long multiplicity() const { return kind == Kind::Away ? factor.degree() : 1; }
    std::string str(const std::string& var = "t") const;
};

struct FiberAtPlace {
    Place place;
    KodairaFiber fiber;
};

/// Orders of c4, c6, discriminant along `factor` (a squarefree polynomial whose
/// roots share the same orders) reduced to the minimal model, then Kodaira's
/// table in characteristic 0.
KodairaFiber kodaira_type(const WeierstrassInvariants& inv, const Place& place);
KodairaFiber kodaira_type(const WeierstrassModel& w, const Place& place);
KodairaFiber kodaira_type_at(const WeierstrassModel& w, const Rational& t0);
KodairaFiber kodaira_type_at_infinity(const WeierstrassModel& w);

/// Orbits of places outside 0 and infinity where the discriminant vanishes,
/// split so that every orbit has constant orders of c4, c6 and the discriminant.
std::vector<Place> away_places(const WeierstrassInvariants& inv);

/// Fibers at 0, infinity and every away orbit, in that order.
std::vector<FiberAtPlace> fiber_table(const WeierstrassModel& w);

/// Sum over away places of multiplicity (f - e/6), minus n_0/6 and n_inf/6.
Rational gamma(const std::vector<FiberAtPlace>& fibers);

struct GammaReport {
    std::vector<FiberAtPlace> fibers;
    Rational gamma;
    bool nonconstant_j = false;
    bool fastenberg_eligible = false;
};

GammaReport gamma_report(const WeierstrassModel& w);

/// Weierstrass model of the Jacobian of f(x, y, t) = 0 when f is quadratic in
/// one variable and the other side is a cubic or quartic after removing
/// square powers of the remaining variable.
WeierstrassModel weierstrass_from_affine(const AffineEquation& f);

enum class FastenbergVerdict { ConstantJ, BaseChangeOfGammaLessOne, GammaNotBelowOne };

struct FastenbergCheck {
    FastenbergVerdict verdict = FastenbergVerdict::ConstantJ;
    WeierstrassModel model;
    long k4 = 1;
    /// every away fiber of the model is of type I_n
    bool away_multiplicative = true;
    /// model over u = t^k4 whose pullback is a twist of `model`
    WeierstrassModel quotient;
    GammaReport quotient_report;
};

FastenbergCheck fastenberg_check(const MinimalFibration& mf);

std::string to_string(FastenbergVerdict v);

}  // namespace delsarte
