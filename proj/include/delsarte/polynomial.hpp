#pragma once

// Dense univariate polynomials over an exact coefficient ring R.
//
// R = Rational gives Q[t]; R = Poly<Rational> gives the recursive bivariate
// ring Q[t][x] used by the resultant oracle. The ring only needs +, -, *,
// == and an exact division exact_div(a, b) for a known multiple a of b.

#include "delsarte/exact.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace delsarte {

template <typename R>
class Poly;

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

template <typename R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b);

template <typename R>
struct RingTraits {
    static R zero() { return R(0); }
    static R one() { return R(1); }
};

template <typename R>
class Poly {
public:
    using Coefficient = R;

    Poly() = default;
    Poly(const R& c) {  // NOLINT(google-explicit-constructor): constants embed
        if (!(c == RingTraits<R>::zero())) coeffs_.push_back(c);
    }
    Poly(int c) : Poly(R(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(std::initializer_list<R> low_to_high) : coeffs_(low_to_high) { trim(); }
    explicit Poly(std::vector<R> low_to_high) : coeffs_(std::move(low_to_high)) { trim(); }

    static Poly monomial(const R& c, int degree) {
        std::vector<R> v(static_cast<std::size_t>(degree) + 1, RingTraits<R>::zero());
        v.back() = c;
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(RingTraits<R>::one(), 1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<R>& coefficients() const { return coeffs_; }

    R operator[](int i) const {
        if (i < 0 || i > degree()) return RingTraits<R>::zero();
        return coeffs_[static_cast<std::size_t>(i)];
    }
    R leading() const { return is_zero() ? RingTraits<R>::zero() : coeffs_.back(); }

    /// Lowest exponent with a nonzero coefficient (the order at 0); -1 for zero.
    int valuation() const {
        for (int i = 0; i <= degree(); ++i)
            if (!(coeffs_[static_cast<std::size_t>(i)] == RingTraits<R>::zero())) return i;
        return -1;
    }

    template <typename S>
    S operator()(const S& x) const {
        S acc = S(RingTraits<R>::zero());
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + S(*it);
        return acc;
    }

    Poly derivative() const {
        std::vector<R> v;
        for (int i = 1; i <= degree(); ++i) v.push_back(coeffs_[static_cast<std::size_t>(i)] * R(i));
        return Poly(std::move(v));
    }

    /// p(x) -> x^n p(1/x) with n = deg p.
    Poly reversed() const {
        std::vector<R> v(coeffs_.rbegin(), coeffs_.rend());
        return Poly(std::move(v));
    }

    /// p(x) -> p(x^k).
    Poly inflate(int k) const {
        if (is_zero()) return {};
        std::vector<R> v(static_cast<std::size_t>(degree() * k) + 1, RingTraits<R>::zero());
        for (int i = 0; i <= degree(); ++i) v[static_cast<std::size_t>(i * k)] = coeffs_[static_cast<std::size_t>(i)];
        return Poly(std::move(v));
    }

    /// Multiplies by x^k (k >= 0) or divides by x^{-k} (must be exact).
    Poly shift(int k) const {
        if (is_zero()) return {};
        std::vector<R> v;
        if (k >= 0) {
            v.assign(static_cast<std::size_t>(k), RingTraits<R>::zero());
            v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        } else {
            v.assign(coeffs_.begin() + std::min<std::ptrdiff_t>(-k, static_cast<std::ptrdiff_t>(coeffs_.size())),
                     coeffs_.end());
        }
        return Poly(std::move(v));
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), RingTraits<R>::zero());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), RingTraits<R>::zero());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& c : a.coeffs_) c = RingTraits<R>::zero() - c;
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> v(a.coeffs_.size() + b.coeffs_.size() - 1, RingTraits<R>::zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == RingTraits<R>::zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == RingTraits<R>::zero()) continue;
                v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Poly(std::move(v));
    }
    friend Poly operator*(const R& c, const Poly& p) {
        if (c == RingTraits<R>::zero()) return {};
        std::vector<R> v = p.coeffs_;
        for (auto& x : v) x = c * x;
        return Poly(std::move(v));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Divides every coefficient by c exactly.
    Poly divided_by(const R& c) const {
        std::vector<R> v = coeffs_;
        for (auto& x : v) x = exact_div(x, c);
        return Poly(std::move(v));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == RingTraits<R>::zero()) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
};

using PolyQ = Poly<Rational>;
using BiPolyQ = Poly<PolyQ>;  // outer variable over Q[inner]

template <typename R>
struct RingTraits<Poly<R>> {
    static Poly<R> zero() { return {}; }
    static Poly<R> one() { return Poly<R>(RingTraits<R>::one()); }
};

/// Exact division of polynomials over an integral domain. The caller
/// guarantees b divides a.
template <typename R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<R> rem = a.coefficients();
    std::vector<R> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, RingTraits<R>::zero());
    const R lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const R top = rem[static_cast<std::size_t>(k + b.degree())];
        if (top == RingTraits<R>::zero()) continue;
        const R q = exact_div(top, lead);
        quot[static_cast<std::size_t>(k)] = q;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<std::size_t>(k + i)] = rem[static_cast<std::size_t>(k + i)] - q * b[i];
    }
    for (const auto& r : rem)
        if (!(r == RingTraits<R>::zero())) throw std::domain_error("inexact polynomial division");
    return Poly<R>(std::move(quot));
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) a mod b, computed without
/// division in R.
template <typename R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    Poly<R> r = a;
    const R lead = b.leading();
    int steps = a.degree() - b.degree() + 1;
    if (steps <= 0) return a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int shift = r.degree() - b.degree();
        Poly<R> t = Poly<R>::monomial(r.leading(), shift) * b;
        r = lead * r - t;
        --steps;
    }
    R scale = RingTraits<R>::one();
    for (int i = 0; i < steps; ++i) scale = scale * lead;
    return scale * r;
}

/// Resultant over an integral domain by the subresultant PRS.
template <typename R>
R resultant(const Poly<R>& a_in, const Poly<R>& b_in) {
    if (a_in.is_zero() || b_in.is_zero()) return RingTraits<R>::zero();
    Poly<R> a = a_in;
    Poly<R> b = b_in;
    R sign = RingTraits<R>::one();
    if (a.degree() < b.degree()) {
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = RingTraits<R>::zero() - sign;
        std::swap(a, b);
    }
    if (b.degree() == 0) {
        R out = RingTraits<R>::one();
        for (int i = 0; i < a.degree(); ++i) out = out * b.leading();
        return sign * out;
    }
    R g = RingTraits<R>::one();
    R h = RingTraits<R>::one();
    while (true) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = RingTraits<R>::zero() - sign;
        Poly<R> r = pseudo_remainder(a, b);
        a = b;
        if (r.is_zero()) return RingTraits<R>::zero();
        R hpow = RingTraits<R>::one();
        for (int i = 0; i < delta; ++i) hpow = hpow * h;
        b = r.divided_by(g * hpow);
        g = a.leading();
        // h <- g^delta / h^(delta-1); delta = 0 leaves h alone
        if (delta > 0) {
            R gpow = RingTraits<R>::one();
            for (int i = 0; i < delta; ++i) gpow = gpow * g;
            R hpow1 = RingTraits<R>::one();
            for (int i = 0; i < delta - 1; ++i) hpow1 = hpow1 * h;
            h = exact_div(gpow, hpow1);
        }
        if (b.degree() == 0) {
            // h <- lc(b)^deg(a) / h^(deg(a)-1)
            R num = RingTraits<R>::one();
            for (int i = 0; i < a.degree(); ++i) num = num * b.leading();
            R den = RingTraits<R>::one();
            for (int i = 0; i < a.degree() - 1; ++i) den = den * h;
            return sign * exact_div(num, den);
        }
    }
}

// ---- Q[t] specifics ---------------------------------------------------------

/// Quotient and remainder over Q.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);

/// Monic gcd over Q (zero if both are zero).
PolyQ gcd(const PolyQ& a, const PolyQ& b);

PolyQ monic(const PolyQ& p);

/// Product of the distinct irreducible factors, made monic.
PolyQ squarefree_part(const PolyQ& p);

/// Largest e with q^e | p (q non-constant, p nonzero).
int multiplicity(const PolyQ& p, const PolyQ& q);

/// Removes every factor t from p; returns the stripped polynomial and the
/// number removed.
std::pair<PolyQ, int> strip_variable_factor(const PolyQ& p);

/// p(c t).
PolyQ scale_argument(const PolyQ& p, const Rational& c);

/// Human-readable form in the variable `var`, e.g. "27*t^2 + 4".
std::string to_string(const PolyQ& p, const std::string& var = "t");

/// Integer-scaled primitive form with positive leading coefficient (for
/// canonical printing and comparison up to a constant).
PolyQ primitive_part(const PolyQ& p);

/// Rational roots of p (distinct, ascending).
std::vector<Rational> rational_roots(const PolyQ& p);

/// The k-th root of a rational number when it is rational.
bool rational_root_of(const Rational& c, long k, Rational& root);

}  // namespace delsarte
