#include "delsarte/reduction.hpp"

#include "delsarte/linalg.hpp"

#include <sstream>
#include <tuple>

namespace delsarte {

std::optional<IntegerVector> detect_split_direction(const MatrixQ& a) {
    if (determinant(a) != 0) return std::nullopt;
    // a null combination of columns sum a_i A_i = 0 gives
    // v = (a4 - a1, a4 - a2, a4 - a3, 0) with A v = a4 d (1,1,1,1)
    std::vector<IntegerVector> candidates;
    for (const auto& null : right_kernel(a)) {
        IntegerVector v(4);
        v << null(3) - null(0), null(3) - null(1), null(3) - null(2), 0;
        candidates.push_back(v);
    }
    // prefer c = 0: combine two candidates to cancel c when possible
    for (const auto& v : candidates)
        if (v(2) == 0 && !v.isZero()) return make_primitive(v);
    if (candidates.size() >= 2) {
        IntegerVector w = candidates[1] * candidates[0](2) - candidates[0] * candidates[1](2);
        if (!w.isZero()) return make_primitive(w);
    }
    return make_primitive(candidates.front());
}

DegeneracyVerdict classify_degenerate(const MatrixQ& a, const IntegerVector& v) {
    if (v.size() != 4 || v(3) != 0 || v.isZero())
        throw std::invalid_argument("split direction must be a nonzero (a, b, c, 0)");
    VectorQ image = a * to_rational(v);
    for (int i = 1; i < 4; ++i)
        if (image(i) != image(0)) throw std::invalid_argument("A v is not a multiple of (1,1,1,1)");
    if (v(2) == 0) return RationalFiber{};
    return SplitAfterBaseChange{static_cast<long>(bmp::abs(v(2)))};
}

MinimalFibration MinimalFibration::from_exponents(const std::array<std::array<int, 2>, 4>& xy) {
    MinimalFibration mf;
    for (std::size_t i = 0; i < 4; ++i) mf.m[i] = Monomial3{xy[i][0], xy[i][1], 0};
    return mf;
}

AffineEquation MinimalFibration::equation() const {
    AffineEquation f;
    for (std::size_t i = 0; i < 4; ++i) {
        Monomial3 mono = m[i];
        mono.t = i == 3 ? 1 : 0;
        f.terms.push_back({Rational(1), mono});
    }
    return f;
}

DelsarteSurface MinimalFibration::surface() const { return homogenize(equation()); }

bool MinimalFibration::has_duplicate() const {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (m[i].x == m[j].x && m[i].y == m[j].y) return true;
    return false;
}

std::string MinimalFibration::str() const { return equation().str(); }

PlaneModel plane_model(const MinimalFibration& mf) {
    PlaneModel pm;
    const DelsarteSurface s = mf.surface();
    const long d = s.degree();
    pm.a = s.matrix();

    // N_i' = M_i(X0, X1, X2, X2), with the extra X2 of N_4' already in row 4
    MatrixQ n(4, 3);
    for (int i = 0; i < 4; ++i)
        n.row(i) << Rational(s.exponents(i, 0)), Rational(s.exponents(i, 1)),
            Rational(s.exponents(i, 2) + s.exponents(i, 3));
    pm.ell1_contained = s.exponents(0, 3) >= 1 && s.exponents(1, 3) >= 1 && s.exponents(2, 3) >= 1;

    pm.bridge = MatrixQ::Zero(4, 3);
    if (!pm.ell1_contained) {
        pm.bridge(0, 0) = 1;
        pm.bridge(1, 1) = 1;
        pm.bridge(2, 2) = 1;
        pm.bridge(3, 2) = 1;
    } else {
        const Rational dq(d);
        pm.bridge(0, 0) = 1;
        pm.bridge(1, 1) = 1;
        pm.bridge(0, 2) = Rational(-1) / dq;
        pm.bridge(1, 2) = Rational(-1) / dq;
        pm.bridge(2, 2) = (dq - 1) / dq;
        pm.bridge(3, 2) = (dq - 1) / dq;
        for (int i = 0; i < 4; ++i) n(i, 2) -= 1;
    }
    pm.a_prime = n;
    pm.degree = pm.ell1_contained ? d - 1 : d;

    if (pm.a * pm.bridge != pm.a_prime) throw std::logic_error("plane model: A' differs from A B");
    if (determinant(MatrixQ(pm.a_prime.topRows(3))) == 0)
        throw RankDeficiencyError("upper minor of A' vanishes");
    pm.k = left_kernel_normalized(pm.a_prime);

    // k must be proportional to (0, 0, 1, -1) A^{-1}
    RowVectorQ e(4);
    e << 0, 0, 1, -1;
    RowVectorQ w = e * invert(pm.a);
    IntegerVector wk = primitive_integral_multiple(w.transpose());
    if (make_primitive(wk) != pm.k) throw std::logic_error("plane model: k not proportional to (0,0,1,-1)A^-1");
    return pm;
}

Reduction reduce_to_minimal(const DelsarteSurface& s) {
    if (!s.all_ones()) throw NeedsNormalizationError("reduction needs all coefficients equal to 1");
    const ValidationReport report = validate_surface(s);
    if (report.determinant == 0) throw DegenerateInputError("det(A) = 0");
    const MatrixQ a = s.matrix();
    const MatrixQ inv = invert(a);
    const Rational d(report.degree);

    struct Candidate {
        IntegerVector v;  // (a, b, c) primitive with c > 0
        Integer mu;       // A v = mu e_i + mu t_i (1,1,1,1)
        int index;
    };
    std::optional<Candidate> best;
    auto key = [](const Candidate& c) {
        return std::make_tuple(bmp::abs(c.v(2)), bmp::abs(c.v(0)) + bmp::abs(c.v(1)), c.index);
    };
    for (int i = 0; i < 4; ++i) {
        VectorQ w = inv.col(i);
        const Rational ti = -d * w(3);
        VectorQ v = w + VectorQ::Constant(4, ti / d);
        if (v(2) == 0) continue;
        IntegerVector p = primitive_integral_multiple(v.head(3));
        if (p(2) < 0) p = -p;
        const Rational mu = Rational(p(2)) / v(2);
        Candidate c{p, numerator(mu), i};
        if (!is_integer(mu) || !is_integer(mu * ti)) throw std::logic_error("non-integral twist");
        if (!best || key(c) < key(*best)) best = c;
    }
    if (!best) throw std::logic_error("no twist vector with c != 0");

    Reduction r;
    r.pivot = best->index;
    r.twist = BaseChangeSpec{static_cast<long>(best->v(2)), static_cast<long>(best->v(0)),
                             static_cast<long>(best->v(1)), 0};
    r.degree = static_cast<long>(best->mu);
    std::size_t slot = 0;
    for (int i = 0; i < 4; ++i) {
        if (i == r.pivot) continue;
        r.fibration.m[slot++] = Monomial3{static_cast<int>(s.exponents(i, 0)), static_cast<int>(s.exponents(i, 1)), 0};
    }
    r.fibration.m[3] = Monomial3{static_cast<int>(s.exponents(r.pivot, 0)),
                                 static_cast<int>(s.exponents(r.pivot, 1)), 0};

    // exact round trip on exponent vectors
    AffineEquation lhs = substitute(affine_equation(s), r.twist);
    r.twist.e = lhs.min_t();
    AffineEquation rhs = substitute(r.fibration.equation(), BaseChangeSpec{r.degree, 0, 0, 0});
    if (!equivalent(lhs, rhs)) throw std::logic_error("reduction: round trip failed");
    return r;
}

}  // namespace delsarte
