#include "delsarte/exact.hpp"

#include <cctype>

namespace delsarte {

Integer floor(const Rational& q) {
    Integer n = numerator(q);
    Integer d = denominator(q);
    Integer f = n / d;  // truncates toward zero
    if (n < 0 && f * d != n) f -= 1;
    return f;
}

Rational pow(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0) throw std::domain_error("zero to a negative power");
        return pow(Rational(1) / q, -e);
    }
    Rational result = 1;
    Rational base = q;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1UL) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

Integer gcd(const Integer& a, const Integer& b) { return bmp::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return bmp::abs(a / gcd(a, b) * b);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

Integer parse_integer(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) throw std::invalid_argument("empty integer");
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw std::invalid_argument("bad digit in '" + std::string(s) + "'");
    std::string text(s[0] == '+' ? s.substr(1) : s);
    return Integer(text);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num) / Rational(den);
}

QmodZ::QmodZ(const Rational& q) : value_(q - Rational(floor(q))) {}

QmodZ frac_part(const Rational& q) { return QmodZ(q); }

Integer ord_plus(const QmodZ& q) { return denominator(q.value()); }

}  // namespace delsarte
