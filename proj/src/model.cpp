#include "delsarte/model.hpp"

#include "delsarte/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace delsarte {

DelsarteSurface DelsarteSurface::from_rows(const std::array<std::array<long, 4>, 4>& rows) {
    DelsarteSurface s;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s.exponents(i, j) = rows[i][j];
    return s;
}

MatrixQ DelsarteSurface::matrix() const {
    MatrixQ a(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = Rational(exponents(i, j));
    return a;
}

bool DelsarteSurface::all_ones() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return c == 1; });
}

ValidationReport validate_surface(const DelsarteSurface& s) {
    if ((s.exponents.array() < 0).any()) throw std::invalid_argument("negative exponent");
    for (const auto& c : s.coefficients)
        if (c == 0) throw std::invalid_argument("zero coefficient");
    const long d = s.degree();
    for (int i = 1; i < 4; ++i)
        if (s.exponents.row(i).sum() != d)
            throw InconsistentDegreeError("row sums differ: " + std::to_string(d) + " vs " +
                                          std::to_string(s.exponents.row(i).sum()));
    ValidationReport report;
    report.degree = d;
    report.determinant = numerator(determinant(s.matrix()));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (s.exponents.row(i) == s.exponents.row(j)) report.distinct_rows = false;
    if (!report.distinct_rows && !s.allow_repeated_rows) throw std::invalid_argument("repeated monomial");
    return report;
}

DelsarteSurface permute_coordinates(const DelsarteSurface& s, const std::array<int, 4>& perm) {
    std::array<bool, 4> seen{};
    for (int p : perm) {
        if (p < 0 || p > 3 || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("permutation must list 0..3 once each");
        seen[static_cast<std::size_t>(p)] = true;
    }
    DelsarteSurface out = s;
    for (int j = 0; j < 4; ++j) out.exponents.col(j) = s.exponents.col(perm[static_cast<std::size_t>(j)]);
    return out;
}

int AffineEquation::min_t() const {
    int m = terms.empty() ? 0 : terms.front().monomial.t;
    for (const auto& term : terms) m = std::min(m, term.monomial.t);
    return m;
}

long AffineEquation::clear_t_power() {
    const int e = min_t();
    for (auto& term : terms) term.monomial.t -= e;
    return e;
}

AffineEquation AffineEquation::cleared() const {
    AffineEquation out = *this;
    out.clear_t_power();
    return out;
}

std::string AffineEquation::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& term : terms) {
        if (!first) out << " + ";
        first = false;
        std::vector<std::string> factors;
        if (term.coefficient != 1) factors.push_back(to_string(term.coefficient));
        auto power = [&](const char* v, int e) {
            if (e == 0) return;
            factors.push_back(e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e));
        };
        power("t", term.monomial.t);
        power("x", term.monomial.x);
        power("y", term.monomial.y);
        if (factors.empty()) factors.push_back("1");
        for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
    }
    return out.str();
}

namespace {

std::vector<std::pair<Monomial3, Rational>> sorted_terms(const AffineEquation& f) {
    std::vector<std::pair<Monomial3, Rational>> v;
    for (const auto& term : f.terms) v.emplace_back(term.monomial, term.coefficient);
    std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    return v;
}

}  // namespace

bool equivalent(const AffineEquation& a, const AffineEquation& b) {
    return sorted_terms(a.cleared()) == sorted_terms(b.cleared());
}

AffineEquation affine_equation(const DelsarteSurface& s) {
    AffineEquation f;
    for (int i = 0; i < 4; ++i) {
        Monomial3 m{static_cast<int>(s.exponents(i, 0)), static_cast<int>(s.exponents(i, 1)),
                    static_cast<int>(s.exponents(i, 2))};
        f.terms.push_back({s.coefficients[static_cast<std::size_t>(i)], m});
    }
    return f;
}

DelsarteSurface homogenize(const AffineEquation& f) {
    if (f.terms.size() != 4) throw std::invalid_argument("a Delsarte equation has four terms");
    AffineEquation g = f.cleared();
    long d = 0;
    for (const auto& term : g.terms) d = std::max<long>(d, term.monomial.x + term.monomial.y + term.monomial.t);
    DelsarteSurface s;
    s.allow_repeated_rows = true;
    for (int i = 0; i < 4; ++i) {
        const auto& term = g.terms[static_cast<std::size_t>(i)];
        const auto& m = term.monomial;
        if (m.x < 0 || m.y < 0) throw std::invalid_argument("negative exponent");
        s.exponents.row(i) << m.x, m.y, m.t, d - m.x - m.y - m.t;
        s.coefficients[static_cast<std::size_t>(i)] = term.coefficient;
    }
    return s;
}

AffineEquation substitute(const AffineEquation& f, const BaseChangeSpec& bc) {
    if (bc.n == 0) throw std::invalid_argument("base change degree must be nonzero");
    AffineEquation out = f;
    for (auto& term : out.terms) {
        auto& m = term.monomial;
        m.t = static_cast<int>(bc.n * m.t + bc.a * m.x + bc.b * m.y);
    }
    return out;
}

DelsarteSurface apply_base_change(const DelsarteSurface& s, const BaseChangeSpec& bc) {
    DelsarteSurface out = homogenize(substitute(affine_equation(s), bc));
    out.allow_repeated_rows = s.allow_repeated_rows;
    return out;
}

}  // namespace delsarte
