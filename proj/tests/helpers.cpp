#include "helpers.hpp"

#include "delsarte/linalg.hpp"

namespace testing {

namespace {

bool valid(const MinimalFibration& mf) {
    if (mf.has_duplicate()) return false;
    bool x_everywhere = true, y_everywhere = true;
    for (const auto& m : mf.m) {
        x_everywhere = x_everywhere && m.x > 0;
        y_everywhere = y_everywhere && m.y > 0;
    }
    if (x_everywhere || y_everywhere) return false;
    if (determinant(mf.surface().matrix()) == 0) return false;
    const MatrixQ ap = plane_model(mf).a_prime;
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = i + 1; j < 4; ++j)
            if (ap.row(i) == ap.row(j)) return false;
    return true;
}

std::vector<std::array<int, 2>> monomials_up_to(int degree) {
    std::vector<std::array<int, 2>> out;
    for (int d = 0; d <= degree; ++d)
        for (int x = 0; x <= d; ++x) out.push_back({x, d - x});
    return out;
}

}  // namespace

std::vector<MinimalFibration> fibration_corpus(int max_degree) {
    const auto mons = monomials_up_to(max_degree);
    std::vector<MinimalFibration> out;
    const std::size_t n = mons.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    if (d == a || d == b || d == c) continue;
                    const auto mf = MinimalFibration::from_exponents({mons[a], mons[b], mons[c], mons[d]});
                    if (valid(mf)) out.push_back(mf);
                }
    return out;
}

std::vector<MinimalFibration> random_fibrations(std::size_t count, int max_degree, unsigned seed) {
    std::mt19937 rng(seed);
    const auto mons = monomials_up_to(max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    std::vector<MinimalFibration> out;
    while (out.size() < count) {
        const auto mf = MinimalFibration::from_exponents({mons[pick(rng)], mons[pick(rng)], mons[pick(rng)], mons[pick(rng)]});
        if (valid(mf)) out.push_back(mf);
    }
    return out;
}

}  // namespace testing
