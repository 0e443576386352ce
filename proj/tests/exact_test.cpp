#include "helpers.hpp"

#include "delsarte/linalg.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("rationals print and parse") {
    CHECK(to_string(q(3, 4)) == "3/4");
    CHECK(to_string(q(-6, 3)) == "-2");
    CHECK(parse_rational("-4/27") == q(-4, 27));
    CHECK(parse_rational("12") == q(12));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("powers and floors") {
    CHECK(pow(q(-3), -3) == q(-1, 27));
    CHECK(pow(q(2, 3), 0) == q(1));
    CHECK(floor(q(-1, 3)) == Integer(-1));
    CHECK(floor(q(7, 4)) == Integer(1));
    CHECK(gcd(Integer(12), Integer(-18)) == Integer(6));
    CHECK(lcm(Integer(4), Integer(6)) == Integer(12));
}

TEST_CASE("fractional parts") {
    CHECK(frac_part(q(7, 4)).value() == q(3, 4));
    CHECK(frac_part(q(-1, 3)).value() == q(2, 3));
    CHECK(frac_part(q(2)).is_zero());
    CHECK(ord_plus(QmodZ(q(1, 2))) == Integer(2));
    CHECK(ord_plus(QmodZ(q(3, 7))) == Integer(7));
    CHECK(ord_plus(QmodZ(q(0))) == Integer(1));
    CHECK(QmodZ(1, 3) + QmodZ(2, 3) == QmodZ(0, 1));
    CHECK(QmodZ(1, 3) * 5L == QmodZ(2, 3));
}

TEST_CASE("determinant and inverse") {
    CHECK(determinant(MatrixQ(MatrixQ::Identity(4, 4))) == q(1));
    CHECK(invert(MatrixQ(MatrixQ::Identity(4, 4))) == MatrixQ::Identity(4, 4));
    const MatrixQ fermat = qmat({{5, 0, 0, 0}, {0, 5, 0, 0}, {0, 0, 5, 0}, {0, 0, 0, 5}});
    CHECK(determinant(fermat) == q(625));

    // p = 3, a = 1 family; the row vector e1 - e4 times the inverse
    const MatrixQ a = qmat({{0, 2, 0, 4}, {3, 0, 0, 3}, {0, 0, 6, 0}, {0, 0, 0, 6}});
    const MatrixQ inv = invert(a);
    CHECK(a * inv == MatrixQ::Identity(4, 4));
    RowVectorQ e(4);
    e << 1, 0, 0, -1;
    RowVectorQ expected(4);
    expected << 0, q(1, 3), 0, q(-1, 3);
    CHECK(e * inv == expected);

    CHECK_THROWS_AS(invert(qmat({{1, 2}, {2, 4}})), SingularMatrixError);
}

TEST_CASE("inverse against an independent solve") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> entry(-4, 6);
    int checked = 0;
    while (checked < 25) {
        MatrixQ a(4, 4);
        for (Eigen::Index i = 0; i < 4; ++i)
            for (Eigen::Index j = 0; j < 4; ++j) a(i, j) = entry(rng);
        if (determinant(a) == 0) continue;
        // Gauss-Jordan on [A | e1] with plain rational pivoting
        MatrixQ aug(4, 5);
        aug << a, VectorQ::Unit(4, 0);
        for (Eigen::Index c = 0; c < 4; ++c) {
            Eigen::Index p = c;
            while (aug(p, c) == 0) ++p;
            aug.row(c).swap(aug.row(p));
            aug.row(c) /= Rational(aug(c, c));
            for (Eigen::Index r = 0; r < 4; ++r)
                if (r != c && aug(r, c) != 0) aug.row(r) -= Rational(aug(r, c)) * aug.row(c);
        }
        CHECK(invert(a).col(0) == aug.col(4));
        ++checked;
    }
}

TEST_CASE("rank and kernels") {
    CHECK(rank(qmat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 2);
    const auto kernel = right_kernel(qmat({{1, 2, 3}, {2, 4, 6}}));
    CHECK(kernel.size() == 2);
    for (const auto& v : kernel) CHECK(qmat({{1, 2, 3}}) * v.cast<Rational>() == VectorQ::Zero(1));

    CHECK(left_kernel_normalized(qmat({{0, 2, 1}, {3, 0, 0}, {2, 0, 1}, {0, 0, 3}})) == ivec({0, 2, -3, 1}));
    CHECK(left_kernel_normalized(qmat({{0, 2, 1}, {3, 0, 0}, {1, 0, 2}, {0, 0, 3}})) == ivec({0, 1, -3, 2}));
    CHECK(left_kernel_normalized(qmat({{0, 2, 1}, {3, 0, 0}, {2, 0, 1}, {1, 0, 2}})) == ivec({0, 1, -2, 1}));
    CHECK_THROWS_AS(left_kernel_normalized(qmat({{1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {4, 0, 0}})), RankDeficiencyError);

    CHECK(make_primitive(ivec({4, -6, 2})) == ivec({2, -3, 1}));
    CHECK(make_primitive(ivec({0, 3, -6})) == ivec({0, -1, 2}));
}

TEST_CASE("univariate polynomials over Q") {
    const PolyQ f = poly({q(-1), q(0), q(1)});  // t^2 - 1
    const PolyQ g = poly({q(1), q(1)});         // t + 1
    CHECK(gcd(f, g) == g);
    CHECK(divmod(f, g).first == poly({q(-1), q(1)}));
    CHECK(squarefree_part(f * f * g) == monic(f));
    CHECK(multiplicity(f * f * g, g) == 3);
    CHECK(strip_variable_factor(t_power(3) * g) == std::make_pair(g, 3));
    CHECK(to_string(poly({q(4), q(27)})) == "27*t + 4");
    CHECK(rational_roots(poly({q(4), q(27)})) == std::vector<Rational>{q(-4, 27)});
    // Res(t^2 - 1, t + 1) = 0, Res(t^2 + 1, t) = 1
    CHECK(resultant(f, g) == 0);
    CHECK(resultant(poly({q(1), q(0), q(1)}), t_power(1)) == 1);
    Rational root;
    CHECK(rational_root_of(q(-8, 27), 3, root));
    CHECK(root == q(-2, 3));
    CHECK_FALSE(rational_root_of(q(-4, 27), 2, root));
}
