#include "delsarte/elliptic.hpp"

#include "delsarte/singular_locus.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <map>
#include <sstream>

namespace delsarte {

namespace {

constexpr long kInfiniteOrder = 1L << 20;

// " + c*" or " - c*" for a constant, " + (p)*" otherwise; empty when c = 1.
std::string signed_term(const PolyQ& p, const std::string& monomial) {
    if (p.degree() <= 0) {
        const Rational c = p[0];
        const Rational a = c < 0 ? Rational(-c) : c;
        std::string body = a == 1 && !monomial.empty() ? monomial : to_string(a) + (monomial.empty() ? "" : "*" + monomial);
        return (c < 0 ? " - " : " + ") + body;
    }
    return " + (" + to_string(p) + ")" + (monomial.empty() ? "" : "*" + monomial);
}

}  // namespace

WeierstrassModel WeierstrassModel::short_form(const PolyQ& a2, const PolyQ& a4, const PolyQ& a6) {
    WeierstrassModel w;
    w.a2 = a2;
    w.a4 = a4;
    w.a6 = a6;
    return w;
}

std::string WeierstrassModel::str() const {
    std::ostringstream out;
    out << "y^2";
    if (!a1.is_zero()) out << signed_term(a1, "x*y");
    if (!a3.is_zero()) out << signed_term(a3, "y");
    out << " = x^3";
    if (!a2.is_zero()) out << signed_term(a2, "x^2");
    if (!a4.is_zero()) out << signed_term(a4, "x");
    if (!a6.is_zero()) out << signed_term(a6, "");
    return out.str();
}

WeierstrassInvariants weierstrass_invariants(const WeierstrassModel& w) {
    WeierstrassInvariants inv;
    const PolyQ& a1 = w.a1;
    const PolyQ& a2 = w.a2;
    const PolyQ& a3 = w.a3;
    const PolyQ& a4 = w.a4;
    const PolyQ& a6 = w.a6;
    inv.b2 = a1 * a1 + PolyQ(4) * a2;
    inv.b4 = PolyQ(2) * a4 + a1 * a3;
    inv.b6 = a3 * a3 + PolyQ(4) * a6;
    inv.b8 = a1 * a1 * a6 + PolyQ(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    const PolyQ& b2 = inv.b2;
    const PolyQ& b4 = inv.b4;
    const PolyQ& b6 = inv.b6;
    const PolyQ& b8 = inv.b8;
    inv.c4 = b2 * b2 - PolyQ(24) * b4;
    inv.c6 = -(b2 * b2 * b2) + PolyQ(36) * b2 * b4 - PolyQ(216) * b6;
    inv.discriminant = -(b2 * b2 * b8) - PolyQ(8) * b4 * b4 * b4 - PolyQ(27) * b6 * b6 + PolyQ(9) * b2 * b4 * b6;
    if (inv.discriminant.is_zero()) throw NotEllipticError("discriminant vanishes identically");
    if (inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6 != PolyQ(1728) * inv.discriminant)
        throw std::logic_error("c4^3 - c6^2 != 1728 discriminant");

    const PolyQ num = inv.c4 * inv.c4 * inv.c4;
    if (num.is_zero()) {
        inv.j_numerator = PolyQ();
        inv.j_denominator = PolyQ(1);
    } else {
        const PolyQ g = gcd(num, inv.discriminant);
        PolyQ n = divmod(num, g).first;
        PolyQ d = divmod(inv.discriminant, g).first;
        const Rational lead = d.leading();
        inv.j_numerator = n.divided_by(lead);
        inv.j_denominator = d.divided_by(lead);
    }
    return inv;
}

KodairaFiber KodairaFiber::make(KodairaSymbol symbol, long n) {
    KodairaFiber f;
    f.symbol = symbol;
    f.n = (symbol == KodairaSymbol::I || symbol == KodairaSymbol::IStar) ? n : 0;
    switch (symbol) {
        case KodairaSymbol::Smooth: f.euler = 0; f.conductor = 0; break;
        case KodairaSymbol::I: f.euler = n; f.conductor = n > 0 ? 1 : 0; break;
        case KodairaSymbol::IStar: f.euler = n + 6; f.conductor = 2; break;
        case KodairaSymbol::II: f.euler = 2; f.conductor = 2; break;
        case KodairaSymbol::III: f.euler = 3; f.conductor = 2; break;
        case KodairaSymbol::IV: f.euler = 4; f.conductor = 2; break;
        case KodairaSymbol::IVStar: f.euler = 8; f.conductor = 2; break;
        case KodairaSymbol::IIIStar: f.euler = 9; f.conductor = 2; break;
        case KodairaSymbol::IIStar: f.euler = 10; f.conductor = 2; break;
    }
    if (symbol == KodairaSymbol::I && n == 0) f.symbol = KodairaSymbol::Smooth;
    return f;
}

long KodairaFiber::n_value() const {
    return (symbol == KodairaSymbol::I || symbol == KodairaSymbol::IStar) ? n : 0;
}

std::string KodairaFiber::name() const {
    switch (symbol) {
        case KodairaSymbol::Smooth: return "I0";
        case KodairaSymbol::I: return "I" + std::to_string(n);
        case KodairaSymbol::IStar: return "I" + std::to_string(n) + "*";
        case KodairaSymbol::II: return "II";
        case KodairaSymbol::III: return "III";
        case KodairaSymbol::IV: return "IV";
        case KodairaSymbol::IVStar: return "IV*";
        case KodairaSymbol::IIIStar: return "III*";
        case KodairaSymbol::IIStar: return "II*";
    }
    return "?";
}

std::string Place::str(const std::string& var) const {
    switch (kind) {
        case Kind::Zero: return var + "=0";
        case Kind::Infinity: return var + "=infinity";
        case Kind::Away: {
            if (factor.degree() == 1) return var + "=" + to_string(-factor[0]);
            return to_string(factor, var) + "=0";
        }
    }
    return "?";
}

namespace {

struct Orders {
    long c4, c6, disc;
};

long order_along(const PolyQ& p, const Place& place) {
    if (p.is_zero()) return kInfiniteOrder;
    switch (place.kind) {
        case Place::Kind::Zero: return p.valuation();
        case Place::Kind::Away: return multiplicity(p, place.factor);
        case Place::Kind::Infinity: break;
    }
    return 0;
}

long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

Orders orders_at(const WeierstrassInvariants& inv, const Place& place) {
    if (place.kind != Place::Kind::Infinity)
        return {order_along(inv.c4, place), order_along(inv.c6, place), order_along(inv.discriminant, place)};
    // t = 1/s; the model over s needs the weights (4, 6, 12) raised to a
    // common N so every coefficient becomes a polynomial in s
    long n = 0;
    if (!inv.c4.is_zero()) n = std::max(n, ceil_div(inv.c4.degree(), 4));
    if (!inv.c6.is_zero()) n = std::max(n, ceil_div(inv.c6.degree(), 6));
    n = std::max(n, ceil_div(inv.discriminant.degree(), 12));
    auto at_infinity = [](const PolyQ& p, long weight) {
        return p.is_zero() ? kInfiniteOrder : weight - p.degree();
    };
    return {at_infinity(inv.c4, 4 * n), at_infinity(inv.c6, 6 * n), at_infinity(inv.discriminant, 12 * n)};
}

KodairaFiber classify(Orders o) {
    while (o.c4 >= 4 && o.c6 >= 6 && o.disc >= 12) {
        o.c4 -= 4;
        o.c6 -= 6;
        o.disc -= 12;
    }
    if (o.disc == 0) return KodairaFiber::make(KodairaSymbol::Smooth);
    if (o.c4 == 0) return KodairaFiber::make(KodairaSymbol::I, o.disc);
    if (o.disc > 6 && o.c4 == 2) return KodairaFiber::make(KodairaSymbol::IStar, o.disc - 6);
    switch (o.disc) {
        case 2: return KodairaFiber::make(KodairaSymbol::II);
        case 3: return KodairaFiber::make(KodairaSymbol::III);
        case 4: return KodairaFiber::make(KodairaSymbol::IV);
        case 6: return KodairaFiber::make(KodairaSymbol::IStar, 0);
        case 8: return KodairaFiber::make(KodairaSymbol::IVStar);
        case 9: return KodairaFiber::make(KodairaSymbol::IIIStar);
        case 10: return KodairaFiber::make(KodairaSymbol::IIStar);
        default: break;
    }
    throw std::logic_error("orders (" + std::to_string(o.c4) + ", " + std::to_string(o.c6) + ", " +
                           std::to_string(o.disc) + ") fit no Kodaira type");
}

// Splits a squarefree piece by the order of its roots in q.
std::vector<PolyQ> split_by_order(const PolyQ& piece, const PolyQ& q) {
    if (q.is_zero()) return {piece};
    std::vector<PolyQ> out;
    PolyQ p = piece;
    PolyQ rest = q;
    while (p.degree() > 0) {
        const PolyQ g = gcd(p, rest);
        const PolyQ exact = monic(divmod(p, g).first);
        if (exact.degree() > 0) out.push_back(exact);
        if (g.degree() <= 0) break;
        rest = divmod(rest, g).first;
        p = g;
    }
    return out;
}

}  // namespace

KodairaFiber kodaira_type(const WeierstrassInvariants& inv, const Place& place) {
    return classify(orders_at(inv, place));
}

KodairaFiber kodaira_type(const WeierstrassModel& w, const Place& place) {
    return kodaira_type(weierstrass_invariants(w), place);
}

KodairaFiber kodaira_type_at(const WeierstrassModel& w, const Rational& t0) {
    if (t0 == 0) return kodaira_type(w, Place{Place::Kind::Zero, {}});
    return kodaira_type(w, Place{Place::Kind::Away, PolyQ{-t0, Rational(1)}});
}

KodairaFiber kodaira_type_at_infinity(const WeierstrassModel& w) {
    return kodaira_type(w, Place{Place::Kind::Infinity, {}});
}

std::vector<Place> away_places(const WeierstrassInvariants& inv) {
    const PolyQ rest = strip_variable_factor(inv.discriminant).first;
    std::vector<PolyQ> pieces = split_by_order(squarefree_part(rest), rest);
    for (const PolyQ* q : {&inv.c4, &inv.c6}) {
        std::vector<PolyQ> finer;
        for (const auto& piece : pieces)
            for (auto& p : split_by_order(piece, *q)) finer.push_back(std::move(p));
        pieces = std::move(finer);
    }
    std::vector<Place> places;
    for (auto& p : pieces) places.push_back(Place{Place::Kind::Away, std::move(p)});
    std::sort(places.begin(), places.end(), [](const Place& a, const Place& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return to_string(a.factor) < to_string(b.factor);
    });
    return places;
}

std::vector<FiberAtPlace> fiber_table(const WeierstrassModel& w) {
    const WeierstrassInvariants inv = weierstrass_invariants(w);
    std::vector<FiberAtPlace> table;
    for (auto kind : {Place::Kind::Zero, Place::Kind::Infinity}) {
        Place place{kind, {}};
        table.push_back({place, kodaira_type(inv, place)});
    }
    for (const auto& place : away_places(inv)) table.push_back({place, kodaira_type(inv, place)});
    return table;
}

Rational gamma(const std::vector<FiberAtPlace>& fibers) {
    Rational g = 0;
    for (const auto& [place, fiber] : fibers) {
        if (place.kind == Place::Kind::Away)
            g += Rational(place.multiplicity()) * (Rational(fiber.conductor) - Rational(fiber.euler, 6));
        else
            g -= Rational(fiber.n_value(), 6);
    }
    return g;
}

GammaReport gamma_report(const WeierstrassModel& w) {
    GammaReport report;
    report.fibers = fiber_table(w);
    report.gamma = gamma(report.fibers);
    report.nonconstant_j = !weierstrass_invariants(w).constant_j();
    report.fastenberg_eligible = report.nonconstant_j && report.gamma < 1;
    return report;
}

namespace {

// Polynomials in x over Q[t].
using XPoly = BiPolyQ;

std::optional<WeierstrassModel> convert(const AffineEquation& f, bool y_is_square) {
    std::map<int, XPoly> by_degree;
    for (const auto& term : f.terms) {
        const auto& m = term.monomial;
        const int square = y_is_square ? m.y : m.x;
        const int other = y_is_square ? m.x : m.y;
        by_degree[square] += XPoly::monomial(PolyQ::monomial(term.coefficient, m.t), other);
    }
    if (by_degree.rbegin()->first != 2) return std::nullopt;
    const XPoly a = by_degree[2];
    const XPoly b = by_degree[1];
    const XPoly c = by_degree[0];
    // (2 a Y + b)^2 = b^2 - 4 a c
    XPoly h = b * b - PolyQ(4) * a * c;
    if (h.is_zero()) return std::nullopt;
    auto strip_squares = [](XPoly p) {
        const int v = p.valuation();
        return p.shift(-(v - v % 2));
    };
    h = strip_squares(h);
    if (h.degree() > 4) {
        const int even = h.degree() + h.degree() % 2;
        h = strip_squares(h.reversed().shift(even - h.degree()));
    }
    if (h.degree() == 3) {
        const PolyQ& lead = h[3];
        return WeierstrassModel::short_form(h[2], lead * h[1], lead * lead * h[0]);
    }
    if (h.degree() == 4) {
        const PolyQ qa = h[4], qb = h[3], qc = h[2], qd = h[1], qe = h[0];
        const PolyQ i = PolyQ(12) * qa * qe - PolyQ(3) * qb * qd + qc * qc;
        const PolyQ j = PolyQ(72) * qa * qc * qe + PolyQ(9) * qb * qc * qd - PolyQ(27) * qa * qd * qd -
                        PolyQ(27) * qe * qb * qb - PolyQ(2) * qc * qc * qc;
        return WeierstrassModel::short_form(PolyQ(), PolyQ(-27) * i, PolyQ(-27) * j);
    }
    return std::nullopt;
}

}  // namespace

WeierstrassModel weierstrass_from_affine(const AffineEquation& input) {
    const AffineEquation f = input.cleared();
    for (bool y_is_square : {true, false}) {
        auto w = convert(f, y_is_square);
        if (!w) continue;
        try {
            weierstrass_invariants(*w);
            return *w;
        } catch (const NotEllipticError&) {
        }
    }
    throw NotConvertibleError("no variable enters quadratically with a cubic or quartic remainder: " + f.str());
}

namespace {

// p(t) = P(t^k) -> P(u), given that every exponent is a multiple of k.
PolyQ contract(const PolyQ& p, long k) {
    std::vector<Rational> v;
    for (int e = 0; e <= p.degree(); ++e) {
        if (p[e] == 0) continue;
        if (e % k != 0) throw std::logic_error("exponent not a multiple of k4");
        const auto slot = static_cast<std::size_t>(e / k);
        if (v.size() <= slot) v.resize(slot + 1, Rational(0));
        v[slot] = p[e];
    }
    return PolyQ(std::move(v));
}

bool admissible(const PolyQ& p, long shift, long k) {
    for (int e = 0; e <= p.degree(); ++e) {
        if (p[e] == 0) continue;
        const long s = e + shift;
        if (s < 0 || s % k != 0) return false;
    }
    return true;
}

}  // namespace

FastenbergCheck fastenberg_check(const MinimalFibration& mf) {
    FastenbergCheck check;
    check.model = weierstrass_from_affine(mf.equation());
    const WeierstrassInvariants inv = weierstrass_invariants(check.model);
    for (const auto& [place, fiber] : fiber_table(check.model))
        if (place.kind == Place::Kind::Away && !fiber.multiplicative()) check.away_multiplicative = false;
    if (inv.constant_j()) {
        check.verdict = FastenbergVerdict::ConstantJ;
        return check;
    }
    check.k4 = singular_locus(mf).k4;
    const long k = check.k4;

    // twist (c4, c6) -> (t^2r c4, t^3r c6) until both are functions of t^k
    const long bound = 6 * (std::max(inv.c4.degree(), inv.c6.degree()) + k);
    std::optional<long> twist;
    for (long r = -bound; r <= bound && !twist; ++r)
        if (admissible(inv.c4, 2 * r, k) && admissible(inv.c6, 3 * r, k)) twist = r;
    if (!twist) throw std::logic_error("invariants are not pulled back along t -> t^k4");
    const PolyQ c4 = contract(inv.c4.shift(static_cast<int>(2 * *twist)), k);
    const PolyQ c6 = contract(inv.c6.shift(static_cast<int>(3 * *twist)), k);
    check.quotient = WeierstrassModel::short_form(PolyQ(), PolyQ(-27) * c4, PolyQ(-54) * c6);
    check.quotient_report = gamma_report(check.quotient);
    check.verdict = check.quotient_report.fastenberg_eligible ? FastenbergVerdict::BaseChangeOfGammaLessOne
                                                              : FastenbergVerdict::GammaNotBelowOne;
    return check;
}

std::string to_string(FastenbergVerdict v) {
    switch (v) {
        case FastenbergVerdict::ConstantJ: return "ConstantJ";
        case FastenbergVerdict::BaseChangeOfGammaLessOne: return "BaseChangeOfGammaLessOne";
        case FastenbergVerdict::GammaNotBelowOne: return "GammaNotBelowOne";
    }
    return "?";
}

}  // namespace delsarte
