#include "delsarte/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace delsarte {

bool GrevlexDescending::operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    // smaller exponent in the last differing variable wins
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

MPoly MPoly::constant(int nvars, const Rational& c) {
    MPoly p(nvars);
    p.add_term(c, Exponents(static_cast<std::size_t>(nvars), 0));
    return p;
}

MPoly MPoly::variable(int nvars, int index) {
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return term(Rational(1), e);
}

MPoly MPoly::term(const Rational& c, const Exponents& e) {
    MPoly p(static_cast<int>(e.size()));
    p.add_term(c, e);
    return p;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

int MPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
    return d;
}

void MPoly::add_term(const Rational& c, const Exponents& e) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

MPoly MPoly::derivative(int var) const {
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        const int k = e[static_cast<std::size_t>(var)];
        if (k == 0) continue;
        Exponents f = e;
        f[static_cast<std::size_t>(var)] = k - 1;
        out.add_term(c * k, f);
    }
    return out;
}

MPoly MPoly::monic() const {
    if (is_zero()) return *this;
    return (Rational(1) / leading_coefficient()) * *this;
}

MPoly MPoly::substitute(int var, const MPoly& value) const {
    MPoly out(nvars_);
    std::vector<MPoly> powers{constant(nvars_, 1)};
    for (const auto& [e, c] : terms_) {
        const int k = e[static_cast<std::size_t>(var)];
        while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * value);
        Exponents f = e;
        f[static_cast<std::size_t>(var)] = 0;
        out += powers[static_cast<std::size_t>(k)].times_term(c, f);
    }
    return out;
}

Rational MPoly::evaluate(const std::vector<Rational>& point) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        for (std::size_t i = 0; i < e.size(); ++i) m *= delsarte::pow(point[i], static_cast<long>(e[i]));
        acc += m;
    }
    return acc;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(c, e);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(-c, e);
    return *this;
}

MPoly operator-(const MPoly& a) { return Rational(-1) * a; }

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out(std::max(a.nvars_, b.nvars_));
    for (const auto& [e, c] : b.terms_) out += a.times_term(c, e);
    return out;
}

MPoly operator*(const Rational& c, const MPoly& a) {
    MPoly out(a.nvars_);
    if (c == 0) return out;
    for (const auto& [e, d] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), e, c * d);
    return out;
}

MPoly MPoly::pow(int e) const {
    MPoly out = constant(nvars_, 1);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

MPoly MPoly::times_term(const Rational& c, const Exponents& e) const {
    MPoly out(nvars_);
    if (c == 0) return out;
    // multiplying by a monomial preserves the order, so append in sequence
    for (const auto& [f, d] : terms_) {
        Exponents g = f;
        for (std::size_t i = 0; i < g.size(); ++i) g[i] += e[i];
        out.terms_.emplace_hint(out.terms_.end(), std::move(g), c * d);
    }
    return out;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << to_string(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out << "*" << names[i];
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

namespace {

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents lcm_exponents(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

Exponents difference(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

MPoly s_polynomial(const MPoly& f, const MPoly& g) {
    const Exponents l = lcm_exponents(f.leading_exponents(), g.leading_exponents());
    MPoly a = f.times_term(Rational(1) / f.leading_coefficient(), difference(l, f.leading_exponents()));
    MPoly b = g.times_term(Rational(1) / g.leading_coefficient(), difference(l, g.leading_exponents()));
    return a - b;
}

}  // namespace

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& g) {
    MPoly p = f;
    MPoly rem(f.nvars());
    while (!p.is_zero()) {
        const Exponents lead = p.leading_exponents();
        const Rational lc = p.leading_coefficient();
        bool reduced = false;
        for (const auto& h : g) {
            if (h.is_zero() || !divides(h.leading_exponents(), lead)) continue;
            p -= h.times_term(lc / h.leading_coefficient(), difference(lead, h.leading_exponents()));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lc, lead);
            p -= MPoly::term(lc, lead);
        }
    }
    return rem;
}

std::vector<MPoly> groebner_basis(const std::vector<MPoly>& generators, long max_pairs) {
    std::vector<MPoly> basis;
    for (const auto& g : generators)
        if (!g.is_zero()) basis.push_back(g.monic());
    if (basis.empty()) return basis;

    struct Pair {
        std::size_t i, j;
        int degree;
    };
    std::vector<Pair> pairs;
    auto pair_degree = [&](std::size_t i, std::size_t j) {
        auto l = lcm_exponents(basis[i].leading_exponents(), basis[j].leading_exponents());
        return std::accumulate(l.begin(), l.end(), 0);
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j, pair_degree(i, j)});

    long processed = 0;
    while (!pairs.empty()) {
        if (++processed > max_pairs) throw std::runtime_error("Groebner basis exceeds desk-scale budget");
        // normal strategy: smallest lcm degree first
        auto best = std::min_element(pairs.begin(), pairs.end(),
                                     [](const Pair& a, const Pair& b) { return a.degree < b.degree; });
        Pair pr = *best;
        pairs.erase(best);
        if (coprime(basis[pr.i].leading_exponents(), basis[pr.j].leading_exponents())) continue;
        MPoly r = normal_form(s_polynomial(basis[pr.i], basis[pr.j]), basis);
        if (r.is_zero()) continue;
        r = r.monic();
        if (r.total_degree() == 0) return {r};
        basis.push_back(r);
        const std::size_t n = basis.size() - 1;
        for (std::size_t i = 0; i < n; ++i) pairs.push_back({i, n, pair_degree(i, n)});
    }

    // minimalize, then inter-reduce
    std::vector<MPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& a = basis[j].leading_exponents();
            const auto& b = basis[i].leading_exponents();
            if (divides(a, b) && (a != b || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = normal_form(minimal[i], others).monic();
    }
    std::sort(minimal.begin(), minimal.end(), [](const MPoly& a, const MPoly& b) {
        return GrevlexDescending{}(a.leading_exponents(), b.leading_exponents());
    });
    return minimal;
}

bool ideal_is_unit(const std::vector<MPoly>& generators) {
    auto basis = groebner_basis(generators);
    return basis.size() == 1 && basis.front().total_degree() == 0;
}

}  // namespace delsarte
