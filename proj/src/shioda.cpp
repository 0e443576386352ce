#include "delsarte/shioda.hpp"

#include "delsarte/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace delsarte {

namespace {

// Entries as residues r_k mod D with alpha_k = r_k / D.
struct Residues {
    long modulus = 1;
    std::array<long, 4> r{};
};

long to_long(const Integer& z) { return z.convert_to<long>(); }

Residues residues(const CharacterVector& v) {
    Residues out;
    for (const auto& e : v.entries) out.modulus = std::lcm(out.modulus, to_long(denominator(e.value())));
    for (std::size_t k = 0; k < 4; ++k)
        out.r[k] = to_long(numerator(v.entries[k].value() * Rational(out.modulus)));
    return out;
}

CharacterVector from_residues(const std::array<long, 4>& r, long modulus) {
    CharacterVector v;
    for (std::size_t k = 0; k < 4; ++k) v.entries[k] = QmodZ(r[k], modulus);
    return v;
}

bool sums_to_two(const Residues& v, long t) {
    long s = 0;
    for (long r : v.r) s += (t * r) % v.modulus;
    return s == 2 * v.modulus;
}

LambdaVerdict membership(const CharacterVector& v, bool early_exit) {
    const Residues res = residues(v);
    LambdaVerdict verdict;
    verdict.vector = v;
    verdict.modulus = res.modulus;
    for (long t = 1; t <= std::max(res.modulus - 1, 1L); ++t) {
        if (std::gcd(t, res.modulus) != 1) continue;
        if (!sums_to_two(res, t)) {
            if (!verdict.in_lambda) verdict.witness = t;
            verdict.in_lambda = true;
            if (early_exit) break;
        }
    }
    return verdict;
}

}  // namespace

bool CharacterVector::has_zero_entry() const {
    return std::any_of(entries.begin(), entries.end(), [](const QmodZ& e) { return e.is_zero(); });
}

Rational CharacterVector::fractional_sum() const {
    Rational s = 0;
    for (const auto& e : entries) s += e.value();
    return s;
}

long CharacterVector::modulus() const { return residues(*this).modulus; }

CharacterVector CharacterVector::scaled(long t) const {
    CharacterVector out;
    for (std::size_t k = 0; k < 4; ++k) out.entries[k] = entries[k] * t;
    return out;
}

std::string CharacterVector::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t k = 0; k < 4; ++k) out << (k ? ", " : "") << to_string(entries[k].value());
    out << ")";
    return out.str();
}

ShiodaVectors shioda_vectors(const MatrixQ& a) {
    const MatrixQ inv = invert(a);
    std::array<CharacterVector, 3> v;
    for (int i = 0; i < 3; ++i) {
        RowVectorQ e = RowVectorQ::Zero(4);
        e(i) = 1;
        e(3) = -1;
        const RowVectorQ w = e * inv;
        for (int k = 0; k < 4; ++k) v[static_cast<std::size_t>(i)].entries[static_cast<std::size_t>(k)] = QmodZ(w(k));
    }
    return {v[0], v[1], v[2]};
}

std::vector<CharacterVector> enumerate_L(const ShiodaVectors& v) {
    const std::array<Residues, 3> gens{residues(v.v1), residues(v.v2), residues(v.v3)};
    long d = 1;
    for (const auto& g : gens) d = std::lcm(d, g.modulus);
    std::array<std::array<long, 4>, 3> steps{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 4; ++k) steps[i][k] = gens[i].r[k] * (d / gens[i].modulus);

    std::set<std::array<long, 4>> seen{{0, 0, 0, 0}};
    std::vector<std::array<long, 4>> frontier{{0, 0, 0, 0}};
    while (!frontier.empty()) {
        std::vector<std::array<long, 4>> next;
        for (const auto& x : frontier)
            for (const auto& s : steps) {
                std::array<long, 4> y{};
                for (std::size_t k = 0; k < 4; ++k) y[k] = (x[k] + s[k]) % d;
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    std::vector<CharacterVector> out;
    out.reserve(seen.size());
    for (const auto& x : seen) out.push_back(from_residues(x, d));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CharacterVector> enumerate_L0(const ShiodaVectors& v) {
    std::vector<CharacterVector> out;
    for (auto& x : enumerate_L(v))
        if (!x.has_zero_entry()) out.push_back(std::move(x));
    return out;
}

LambdaVerdict lambda_membership(const CharacterVector& v) { return membership(v, true); }

LambdaVerdict lambda_membership_exhaustive(const CharacterVector& v) { return membership(v, false); }

long count_in_lambda(const std::vector<CharacterVector>& l0, unsigned threads) {
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(l0.size(), 1))));
    std::vector<long> partial(threads, 0);
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < l0.size(); i += threads)
            if (lambda_membership(l0[i]).in_lambda) ++partial[w];
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    return std::accumulate(partial.begin(), partial.end(), 0L);
}

long lefschetz_number(const MatrixQ& a, unsigned threads) {
    return count_in_lambda(enumerate_L0(shioda_vectors(a)), threads);
}

FamilyParams FamilyParams::make(long p, long a) {
    if (p < 3 || p % 2 == 0) throw InvalidParamsError("p must be an odd prime");
    for (long q = 3; q * q <= p; q += 2)
        if (p % q == 0) throw InvalidParamsError("p must be an odd prime");
    if (a < 1) throw InvalidParamsError("a must be at least 1");
    return FamilyParams{p, a};
}

DelsarteSurface family_surface(const FamilyParams& params) {
    const long d = params.degree();
    return DelsarteSurface::from_rows({{{0, 2, 0, d - 2}, {params.p, 0, 0, d - params.p}, {0, 0, d, 0}, {0, 0, 0, d}}});
}

namespace {

// Family vectors as residues mod D = 2ap with the i index attached.
template <typename F>
void for_each_family_vector(const FamilyParams& params, F&& f) {
    const long d = params.degree();
    const long half = params.a * params.p;
    for (long i = 1; i < params.p; ++i)
        for (long j = 1; j < d; ++j) {
            const long last = ((-(half + 2 * params.a * i + j)) % d + d) % d;
            if (last == 0) continue;
            f(i, j, std::array<long, 4>{half, 2 * params.a * i, j, last});
        }
}

}  // namespace

std::vector<CharacterVector> family_L0(const FamilyParams& params) {
    std::vector<CharacterVector> out;
    for_each_family_vector(params, [&](long, long, const std::array<long, 4>& r) {
        out.push_back(from_residues(r, params.degree()));
    });
    std::sort(out.begin(), out.end());
    return out;
}

FamilyPicard picard_family(const FamilyParams& params, unsigned threads) {
    const std::vector<CharacterVector> l0 = family_L0(params);
    FamilyPicard out;
    out.params = params;
    out.l0_count = static_cast<long>(l0.size());
    out.lambda = count_in_lambda(l0, threads);
    out.rho_tilde = 2 + out.l0_count - out.lambda;
    out.rho = out.rho_tilde - 1;
    return out;
}

std::set<Rational> excluded_fractions(const FamilyParams& params) {
    std::set<Rational> out;
    const long d = params.degree();
    for_each_family_vector(params, [&](long i, long j, const std::array<long, 4>& r) {
        if (i != 1) return;
        if (!lambda_membership(from_residues(r, d)).in_lambda) out.insert(Rational(j, d));
    });
    return out;
}

HodgeCounts gs_hodge_counts(const FamilyParams& params) {
    HodgeCounts h;
    const long d = params.degree();
    for_each_family_vector(params, [&](long, long, const std::array<long, 4>& r) {
        const long q = (r[0] + r[1] + r[2] + r[3]) / d;
        if (q == 1) ++h.h20;
        else if (q == 2) ++h.h11prim;
        else if (q == 3) ++h.h02;
        else throw std::logic_error("representative sum outside {1, 2, 3}");
    });
    return h;
}

}  // namespace delsarte
