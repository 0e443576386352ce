#include "delsarte/singular_locus.hpp"

#include "delsarte/linalg.hpp"
#include "delsarte/mpoly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <numeric>
#include <sstream>
#include <tuple>

namespace delsarte {

PolyQ SingularLocus::equation() const {
    if (degenerate) return {};
    return PolyQ::monomial(Rational(1), static_cast<int>(k4)) - PolyQ(c);
}

Rational kernel_product(const IntegerVector& k) {
    Rational c = 1;
    for (const auto& ki : k) {
        if (ki == 0) continue;
        c *= pow(Rational(ki), static_cast<long>(ki));
    }
    return c;
}

namespace {

bool rows_coincide(const MatrixQ& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i + 1; j < m.rows(); ++j)
            if (m.row(i) == m.row(j)) return true;
    return false;
}

}  // namespace

SingularLocus singular_locus(const MinimalFibration& mf) {
    const PlaneModel pm = plane_model(mf);
    SingularLocus locus;
    locus.k4 = static_cast<long>(pm.k(3));
    if (rows_coincide(pm.a_prime)) {
        locus.degenerate = true;
        return locus;
    }
    locus.c = kernel_product(pm.k);
    Rational root;
    if (rational_root_of(locus.c, locus.k4, root)) {
        locus.rational_roots.push_back(root);
        if (locus.k4 % 2 == 0 && root != 0) locus.rational_roots.push_back(-root);
        std::sort(locus.rational_roots.begin(), locus.rational_roots.end());
    }
    return locus;
}

// ---- elimination oracle -----------------------------------------------------

namespace {

// Variables of the projective closure: 0 = X, 1 = Y, 2 = Z, 3 = t, 4 = w.
constexpr int kVars = 5;
constexpr int kT = 3;
constexpr int kW = 4;

PolyQ lcm(const PolyQ& a, const PolyQ& b) { return monic(divmod(a * b, gcd(a, b)).first); }

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Monomials outside the leading-term ideal of a zero-dimensional basis.
std::vector<Exponents> standard_monomials(const std::vector<MPoly>& basis) {
    for (int i = 0; i < kVars; ++i) {
        const bool pure = std::any_of(basis.begin(), basis.end(), [&](const MPoly& g) {
            const Exponents& e = g.leading_exponents();
            for (int j = 0; j < kVars; ++j)
                if (j != i && e[static_cast<std::size_t>(j)] != 0) return false;
            return true;
        });
        if (!pure) throw OracleDegenerateError("singular points of the pencil are not isolated");
    }
    std::set<Exponents> seen{Exponents(kVars, 0)};
    std::vector<Exponents> frontier{Exponents(kVars, 0)};
    while (!frontier.empty()) {
        std::vector<Exponents> next;
        for (const auto& e : frontier)
            for (std::size_t i = 0; i < kVars; ++i) {
                Exponents f = e;
                ++f[i];
                if (std::any_of(basis.begin(), basis.end(),
                                [&](const MPoly& g) { return divides(g.leading_exponents(), f); }))
                    continue;
                if (seen.insert(f).second) next.push_back(f);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

// Minimal polynomial of t acting on Q[X, Y, Z, t, w] / I for a zero-dimensional
// I. Its roots are the t-coordinates of the points of V(I).
PolyQ eliminant(const std::vector<MPoly>& generators) {
    const std::vector<MPoly> basis = groebner_basis(generators);
    if (basis.size() == 1 && basis.front().total_degree() == 0) return PolyQ(Rational(1));
    const std::vector<Exponents> monomials = standard_monomials(basis);
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < monomials.size(); ++i) index[monomials[i]] = i;
    const std::size_t n = monomials.size();

    // rows in echelon form, each carrying its expression in powers of t
    struct Row {
        std::vector<Rational> v;
        std::vector<Rational> combo;
        std::size_t pivot;
    };
    std::vector<Row> rows;
    const MPoly t = MPoly::variable(kVars, kT);
    MPoly power = MPoly::constant(kVars, Rational(1));
    for (std::size_t k = 0; k <= n; ++k) {
        Row r{std::vector<Rational>(n, Rational(0)), std::vector<Rational>(k + 1, Rational(0)), n};
        for (const auto& [e, c] : power.terms()) r.v[index.at(e)] = c;
        r.combo[k] = 1;
        for (const auto& q : rows) {
            const Rational f = r.v[q.pivot];
            if (f == 0) continue;
            for (std::size_t i = 0; i < n; ++i) r.v[i] -= f * q.v[i];
            for (std::size_t i = 0; i < q.combo.size(); ++i) r.combo[i] -= f * q.combo[i];
        }
        const auto nz = std::find_if(r.v.begin(), r.v.end(), [](const Rational& x) { return x != 0; });
        if (nz == r.v.end()) return monic(PolyQ(r.combo));
        r.pivot = static_cast<std::size_t>(nz - r.v.begin());
        const Rational p = r.v[r.pivot];
        for (auto& x : r.v) x /= p;
        for (auto& x : r.combo) x /= p;
        for (auto& q : rows) q.combo.resize(k + 1, Rational(0));
        rows.push_back(std::move(r));
        power = normal_form(t * power, basis);
    }
    throw std::logic_error("no dependency among n + 1 vectors");
}

// Newton diagram of a local equation sum c_k(t) u^i v^j at the origin.
struct LocalTerm {
    long i, j;
    PolyQ c;
};

long cross(const std::array<long, 2>& o, const std::array<long, 2>& a, const std::array<long, 2>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Product of the discriminants of the compact edge polynomials. By
// Kouchnirenko the Milnor number stays constant while every edge is
// nondegenerate, so the roots contain every jump of the singularity.
PolyQ newton_edges(const std::vector<LocalTerm>& terms) {
    long order = std::numeric_limits<long>::max();
    for (const auto& m : terms) order = std::min(order, m.i + m.j);
    // a linear term with coefficient a power of t only matters at t = 0
    if (order <= 1) return PolyQ(Rational(1));

    std::map<std::array<long, 2>, PolyQ> support;
    for (const auto& m : terms) support[{m.i, m.j}] = support[{m.i, m.j}] + m.c;
    long a = -1, b = -1;
    for (const auto& [p, c] : support) {
        if (p[1] == 0 && (a < 0 || p[0] < a)) a = p[0];
        if (p[0] == 0 && (b < 0 || p[1] < b)) b = p[1];
    }
    if (a < 0 || b < 0) throw OracleDegenerateError("curve contains a coordinate line");

    // lower convex chain from (0, b) to (a, 0)
    std::vector<std::array<long, 2>> pts;
    for (const auto& [p, c] : support)
        if (p[0] <= a && p[1] <= b) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    std::vector<std::array<long, 2>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    while (!hull.empty() && hull.front() != std::array<long, 2>{0, b}) hull.erase(hull.begin());

    PolyQ product(Rational(1));
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        const auto p = hull[k];
        const auto q = hull[k + 1];
        if (q[1] >= p[1]) break;
        const long g = std::gcd(q[0] - p[0], p[1] - q[1]);
        const long di = (q[0] - p[0]) / g;
        const long dj = (q[1] - p[1]) / g;
        std::vector<PolyQ> coeffs(static_cast<std::size_t>(g) + 1);
        for (long s = 0; s <= g; ++s) {
            auto it = support.find({p[0] + s * di, p[1] + s * dj});
            if (it != support.end()) coeffs[static_cast<std::size_t>(s)] = it->second;
        }
        const BiPolyQ edge(coeffs);
        if (edge.degree() < 2) continue;
        const PolyQ disc = resultant(edge, edge.derivative());
        if (disc.is_zero()) throw OracleDegenerateError("edge of the Newton diagram degenerate for every t");
        product = product * disc;
    }
    return product;
}

// Local terms at the coordinate point where variable `at` is 1, in the two
// remaining coordinates.
std::vector<LocalTerm> local_terms(const MPoly& f, int at) {
    std::vector<LocalTerm> out;
    const int u = at == 0 ? 1 : 0;
    const int v = at == 2 ? 1 : 2;
    for (const auto& [e, c] : f.terms())
        out.push_back({e[static_cast<std::size_t>(u)], e[static_cast<std::size_t>(v)],
                       PolyQ::monomial(c, e[static_cast<std::size_t>(kT)])});
    return out;
}

PolyQ away_from_zero(const PolyQ& p) { return squarefree_part(strip_variable_factor(p).first); }

}  // namespace

PolyQ discriminant_oracle(const AffineEquation& input) {
    const AffineEquation f = input.cleared();
    int degree = 0;
    for (const auto& term : f.terms) degree = std::max(degree, term.monomial.xy_degree());
    if (degree > 8) throw DegreeOverflowError("plane curves of degree > 8 are beyond desk scale");

    MPoly F(kVars);
    for (const auto& term : f.terms) {
        const auto& m = term.monomial;
        F.add_term(term.coefficient, {m.x, m.y, degree - m.x - m.y, m.t, 0});
    }
    const auto var = [](int i) { return MPoly::variable(kVars, i); };
    const MPoly one = MPoly::constant(kVars, Rational(1));
    const MPoly w = var(kW) * var(kT);  // t = 0 is left out
    const std::vector<MPoly> singular{F, F.derivative(0), F.derivative(1), F.derivative(2)};
    auto with = [&](std::initializer_list<MPoly> extra) {
        std::vector<MPoly> g = singular;
        g.insert(g.end(), extra);
        return g;
    };

    PolyQ result(Rational(1));
    // torus, then the three coordinate lines without their corners
    result = lcm(result, away_from_zero(eliminant(with({var(2) - one, w * var(0) * var(1) - one}))));
    result = lcm(result, away_from_zero(eliminant(with({var(2) - one, var(0), w * var(1) - one}))));
    result = lcm(result, away_from_zero(eliminant(with({var(2) - one, var(1), w * var(0) - one}))));
    result = lcm(result, away_from_zero(eliminant(with({var(1) - one, var(2), w * var(0) - one}))));
    // coordinate points
    for (int at = 0; at < 3; ++at) {
        const PolyQ edges = newton_edges(local_terms(F, at));
        if (edges.degree() > 0) result = lcm(result, away_from_zero(edges));
    }
    return primitive_part(result);
}

// ---- structure ----------------------------------------------------------------

StructureDecomposition structure_decomposition(const MinimalFibration& mf) {
    const PlaneModel pm = plane_model(mf);
    StructureDecomposition sd;
    sd.k4 = static_cast<long>(pm.k(3));
    sd.quotient_value = kernel_product(pm.k);
    sd.quotient_places = {"0", "infinity", to_string(sd.quotient_value)};
    std::ostringstream out;
    out << "pullback along t -> t^" << sd.k4
        << " of a fibration with at most one singular fiber outside 0 and infinity, at t = "
        << to_string(sd.quotient_value);
    sd.statement = out.str();
    return sd;
}

namespace {

struct Point {
    long x, y;
};

long cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return std::tie(a.x, a.y) < std::tie(b.x, b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

long ext_gcd(long a, long b, long& x, long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return std::abs(a);
    }
    long x1 = 0, y1 = 0;
    const long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Exponents (b, c, d) of y^a = x^b + x^c + t x^d up to x -> 1/x and y -> y x^r,
// normalized so the smallest exponent lies in [0, a).
std::array<long, 3> shift_into_range(long a, std::array<long, 3> e) {
    const long lo = std::min({e[0], e[1], e[2]});
    const long r = floor_div(lo, a);
    for (auto& x : e) x -= r * a;
    return e;
}

std::array<long, 3> isotrivial_key(long a, long b, long c, long d) {
    std::array<long, 3> best{};
    bool first = true;
    for (long sign : {1L, -1L}) {
        auto e = shift_into_range(a, {sign * b, sign * c, sign * d});
        std::array<long, 3> key{e[2], std::min(e[0], e[1]), std::max(e[0], e[1])};
        if (first || key < best) best = key;
        first = false;
    }
    return best;
}

Superelliptic superelliptic_form(const MinimalFibration& mf, int off_line) {
    std::vector<Point> line;
    for (int i = 0; i < 4; ++i)
        if (i != off_line) line.push_back({mf.m[static_cast<std::size_t>(i)].x, mf.m[static_cast<std::size_t>(i)].y});
    const Point base = line[0];
    const Point off{mf.m[static_cast<std::size_t>(off_line)].x, mf.m[static_cast<std::size_t>(off_line)].y};
    long dx = line[1].x - base.x;
    long dy = line[1].y - base.y;
    const long g = std::gcd(std::abs(dx), std::abs(dy));
    dx /= g;
    dy /= g;
    // eps with det(delta, eps) = dx*ey - dy*ex = 1
    long ey = 0, mex = 0;
    ext_gcd(dx, dy, ey, mex);  // dx*ey + dy*mex = 1
    const long ex = -mex;
    auto lambda = [&](const Point& q) { return (q.x - base.x) * ey - (q.y - base.y) * ex; };
    auto mu = [&](const Point& q) { return dx * (q.y - base.y) - dy * (q.x - base.x); };
    const long l1 = lambda(off);
    const long a = std::abs(mu(off));
    // line[0] is the base (lambda 0); line[1], line[2] follow; line[2] is m4
    // when off_line < 3, so the t-marked point is the last one
    const long lb = lambda(line[1]);
    const long lt = lambda(line[2]);
    std::array<long, 3> e{-l1, lb - l1, lt - l1};  // x^0 term, x^lb term, t-term

    std::array<long, 3> best{};
    long best_max = 0;
    bool first = true;
    for (long sign : {1L, -1L}) {
        auto f = shift_into_range(a, {sign * e[0], sign * e[1], sign * e[2]});
        const long mx = std::max({f[0], f[1], f[2]});
        if (first || mx < best_max) {
            best = f;
            best_max = mx;
        }
        first = false;
    }
    Superelliptic s;
    s.a = a;
    s.b = std::max(best[0], best[1]);
    s.c = std::min(best[0], best[1]);
    s.d = best[2];
    return s;
}

}  // namespace

long fiber_genus(const MinimalFibration& mf) {
    std::vector<Point> pts;
    for (const auto& m : mf.m) pts.push_back({m.x, m.y});
    auto hull = convex_hull(pts);
    if (hull.size() < 3) return 0;
    long twice_area = 0;
    long boundary = 0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point& p = hull[i];
        const Point& q = hull[(i + 1) % hull.size()];
        twice_area += p.x * q.y - q.x * p.y;
        boundary += std::gcd(std::abs(q.x - p.x), std::abs(q.y - p.y));
    }
    twice_area = std::abs(twice_area);
    // Pick: A = I + B/2 - 1
    return (twice_area - boundary + 2) / 2;
}

Trichotomy classify_trichotomy(const MinimalFibration& mf) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (mf.m[static_cast<std::size_t>(i)] == mf.m[static_cast<std::size_t>(j)])
                throw std::invalid_argument("m1, m2, m3 must be distinct");
    if (fiber_genus(mf) < 1) throw RejectedInputError("generic fiber has genus 0");
    for (int i = 0; i < 3; ++i)
        if (mf.m[static_cast<std::size_t>(i)].x == mf.m[3].x && mf.m[static_cast<std::size_t>(i)].y == mf.m[3].y)
            return Isotrivial{i};
    const PlaneModel pm = plane_model(mf);
    for (int i = 0; i < 3; ++i)
        if (pm.k(i) == 0) return superelliptic_form(mf, i);
    return SemistableElsewhere{};
}

std::string to_string(const Trichotomy& t) {
    if (const auto* iso = std::get_if<Isotrivial>(&t))
        return "Isotrivial(m" + std::to_string(iso->duplicate_index + 1) + " = m4)";
    if (const auto* s = std::get_if<Superelliptic>(&t)) {
        std::ostringstream out;
        const auto power = [](long e) -> std::string {
            if (e == 0) return "1";
            return e == 1 ? "x" : "x^" + std::to_string(e);
        };
        out << "Superelliptic(y^" << s->a << " = " << power(s->b) << " + " << power(s->c) << " + t"
            << (s->d == 0 ? "" : "*" + power(s->d)) << ")";
        return out.str();
    }
    return "SemistableElsewhere";
}

long superelliptic_genus(long a, const std::vector<long>& multiplicities, long degree) {
    if (a < 2) throw std::invalid_argument("cover degree must be at least 2");
    long total = -2 * a;
    for (long m : multiplicities) total += a - std::gcd(a, m);
    total += a - std::gcd(a, degree);
    if (total % 2 != 0) throw std::logic_error("Riemann-Hurwitz sum is odd");
    return total / 2 + 1;
}

std::string IsotrivialForm::str() const {
    std::ostringstream out;
    switch (family) {
        case IsotrivialFamily::RepeatedMonomial: out << "m1 + m2 + (1 + t^" << n << ")*m3"; break;
        case IsotrivialFamily::CubicCubic: out << "y^3 + x^3 + x^2 + t^" << n; break;
        case IsotrivialFamily::QuadraticCover: out << "y^" << a << " + x^2 + x + t^" << n; break;
    }
    return out.str();
}

IsotrivialForm classify_isotrivial(const MinimalFibration& mf, long n) {
    const Trichotomy t = classify_trichotomy(mf);
    if (std::holds_alternative<Isotrivial>(t)) return {IsotrivialFamily::RepeatedMonomial, n, 0};
    if (const auto* s = std::get_if<Superelliptic>(&t)) {
        const auto key = isotrivial_key(s->a, s->b, s->c, s->d);
        if (s->a == 3 && key == isotrivial_key(3, 3, 2, 0)) return {IsotrivialFamily::CubicCubic, n, 3};
        if (key == isotrivial_key(s->a, 2, 1, 0)) return {IsotrivialFamily::QuadraticCover, n, s->a};
    }
    throw NoMatchError("not one of the isotrivial normal forms: " + to_string(t));
}

IsotrivialForm classify_isotrivial(const DelsarteSurface& s) {
    const Reduction r = reduce_to_minimal(s);
    return classify_isotrivial(r.fibration, std::abs(r.degree));
}

NodalCheck nodal_check(const MinimalFibration& mf) {
    NodalCheck check;
    const Trichotomy t = classify_trichotomy(mf);
    if (!std::holds_alternative<SemistableElsewhere>(t)) return check;
    check.applicable = true;
    const SingularLocus locus = singular_locus(mf);

    // variables x, y, t, u, v with u x = 1 and v y = 1
    constexpr int n = 5;
    MPoly f(n);
    for (std::size_t i = 0; i < 4; ++i) f.add_term(Rational(1), {mf.m[i].x, mf.m[i].y, i == 3 ? 1 : 0, 0, 0});
    const MPoly fx = f.derivative(0);
    const MPoly fy = f.derivative(1);
    const MPoly hessian = fx.derivative(0) * fy.derivative(1) - fx.derivative(1) * fx.derivative(1);
    MPoly on_locus = MPoly::term(Rational(1), {0, 0, static_cast<int>(locus.k4), 0, 0});
    on_locus.add_term(-locus.c, {0, 0, 0, 0, 0});
    const MPoly one = MPoly::constant(n, 1);
    const MPoly invert_x = MPoly::variable(n, 3) * MPoly::variable(n, 0) - one;
    const MPoly invert_y = MPoly::variable(n, 4) * MPoly::variable(n, 1) - one;

    std::vector<MPoly> singular{f, fx, fy, on_locus, invert_x, invert_y};
    check.has_singular_point = !ideal_is_unit(singular);
    singular.push_back(hessian);
    check.all_nodes = ideal_is_unit(singular);
    return check;
}

}  // namespace delsarte
