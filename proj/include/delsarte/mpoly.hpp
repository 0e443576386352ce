#pragma once

// Sparse multivariate polynomials over Q in a fixed number of variables,
// graded reverse lexicographic order, and a plain Buchberger algorithm.
// Sized for desk-scale local algebra (ideal membership of 1, normal forms).

#include "delsarte/exact.hpp"

#include <map>
#include <string>
#include <vector>

namespace delsarte {

using Exponents = std::vector<int>;

/// Strict "a comes before b" for grevlex with leading terms first.
struct GrevlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class MPoly {
public:
    using Terms = std::map<Exponents, Rational, GrevlexDescending>;

    explicit MPoly(int nvars = 0) : nvars_(nvars) {}
    static MPoly constant(int nvars, const Rational& c);
    static MPoly variable(int nvars, int index);
    static MPoly term(const Rational& c, const Exponents& e);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    const Exponents& leading_exponents() const { return terms_.begin()->first; }
    const Rational& leading_coefficient() const { return terms_.begin()->second; }

    /// Total degree; -1 for zero.
    int total_degree() const;
    int degree_in(int var) const;

    void add_term(const Rational& c, const Exponents& e);

    MPoly derivative(int var) const;
    MPoly monic() const;

    /// Substitutes var -> value (a polynomial in the same ring).
    MPoly substitute(int var, const MPoly& value) const;

    /// Evaluates at a point with rational coordinates.
    Rational evaluate(const std::vector<Rational>& point) const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator-(const MPoly& a);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const Rational& c, const MPoly& a);
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    MPoly pow(int e) const;

    /// Multiplies by c * x^e.
    MPoly times_term(const Rational& c, const Exponents& e) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_;
    Terms terms_;
};

/// Remainder of f on division by the list g (multivariate division).
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& g);

/// Reduced Groebner basis (monic, grevlex). `max_pairs` bounds the work and
/// makes the routine throw std::runtime_error beyond desk scale.
std::vector<MPoly> groebner_basis(const std::vector<MPoly>& generators, long max_pairs = 200000);

/// True when the ideal generated by `generators` is the whole ring.
bool ideal_is_unit(const std::vector<MPoly>& generators);

}  // namespace delsarte
