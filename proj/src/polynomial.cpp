#include "delsarte/polynomial.hpp"

#include <set>
#include <sstream>

namespace delsarte {

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {PolyQ(), a};
    std::vector<Rational> rem = a.coefficients();
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const Rational q = rem[static_cast<std::size_t>(k + b.degree())] / lead;
        if (q == 0) continue;
        quot[static_cast<std::size_t>(k)] = q;
        for (int i = 0; i <= b.degree(); ++i) rem[static_cast<std::size_t>(k + i)] -= q * b[i];
    }
    rem.resize(static_cast<std::size_t>(b.degree()));
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ monic(const PolyQ& p) {
    if (p.is_zero()) return p;
    return p.divided_by(p.leading());
}

PolyQ gcd(const PolyQ& a, const PolyQ& b) {
    PolyQ x = a;
    PolyQ y = b;
    while (!y.is_zero()) {
        PolyQ r = divmod(x, y).second;
        x = std::move(y);
        y = monic(r);
    }
    return monic(x);
}

PolyQ squarefree_part(const PolyQ& p) {
    if (p.is_zero()) return p;
    if (p.degree() == 0) return PolyQ(Rational(1));
    PolyQ g = gcd(p, p.derivative());
    return monic(divmod(p, g).first);
}

int multiplicity(const PolyQ& p, const PolyQ& q) {
    if (p.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
    if (q.degree() < 1) throw std::domain_error("multiplicity of a constant");
    int e = 0;
    PolyQ cur = p;
    while (true) {
        auto [quot, rem] = divmod(cur, q);
        if (!rem.is_zero()) return e;
        cur = std::move(quot);
        ++e;
    }
}

std::pair<PolyQ, int> strip_variable_factor(const PolyQ& p) {
    if (p.is_zero()) return {p, 0};
    const int v = p.valuation();
    return {p.shift(-v), v};
}

PolyQ scale_argument(const PolyQ& p, const Rational& c) {
    std::vector<Rational> v = p.coefficients();
    Rational power = 1;
    for (auto& x : v) {
        x *= power;
        power *= c;
    }
    return PolyQ(std::move(v));
}

std::string to_string(const PolyQ& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p[i];
        if (c == 0) continue;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << to_string(mag);
            continue;
        }
        if (mag != 1) out << to_string(mag) << "*";
        out << var;
        if (i > 1) out << "^" << i;
    }
    return out.str();
}

PolyQ primitive_part(const PolyQ& p) {
    if (p.is_zero()) return p;
    Integer den = 1;
    for (const auto& c : p.coefficients()) den = lcm(den, denominator(c));
    Integer content = 0;
    for (const auto& c : p.coefficients()) content = gcd(content, numerator(c * Rational(den)));
    Rational scale = Rational(den) / Rational(content);
    if (p.leading() < 0) scale = -scale;
    return scale * p;
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<Rational> rational_roots(const PolyQ& p) {
    if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
    std::set<Rational> roots;
    auto [core, zero_order] = strip_variable_factor(primitive_part(p));
    if (zero_order > 0) roots.insert(Rational(0));
    if (core.degree() >= 1) {
        const Integer lead = numerator(core.leading());
        const Integer constant = numerator(core[0]);
        // Rational root test; the desk-scale constants here stay small.
        for (const auto& num : positive_divisors(constant))
            for (const auto& den : positive_divisors(lead))
                for (int s : {1, -1}) {
                    Rational r = Rational(num * s) / Rational(den);
                    if (core(r) == 0) roots.insert(r);
                }
    }
    return {roots.begin(), roots.end()};
}

bool rational_root_of(const Rational& c, long k, Rational& root) {
    if (k <= 0) throw std::domain_error("root index must be positive");
    if (c == 0) {
        root = 0;
        return true;
    }
    if (c < 0 && k % 2 == 0) return false;
    auto integer_root = [k](Integer n, Integer& out) {
        // binary search for floor(n^(1/k))
        Integer lo = 0;
        Integer hi = 1;
        while (bmp::pow(hi, static_cast<unsigned>(k)) <= n) hi *= 2;
        while (hi - lo > 1) {
            Integer mid = (lo + hi) / 2;
            if (bmp::pow(mid, static_cast<unsigned>(k)) <= n) lo = mid;
            else hi = mid;
        }
        if (bmp::pow(lo, static_cast<unsigned>(k)) != n) return false;
        out = lo;
        return true;
    };
    Integer num = numerator(c);
    const bool negative = num < 0;
    if (negative) num = -num;
    Integer a;
    Integer b;
    if (!integer_root(num, a) || !integer_root(denominator(c), b)) return false;
    root = Rational(negative ? Integer(-a) : a) / Rational(b);
    return true;
}

}  // namespace delsarte
