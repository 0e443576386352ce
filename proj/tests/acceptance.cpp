// One PASS or FAIL line per acceptance criterion, with indented detail lines.
// Exit status is the number of failed criteria.

#include "helpers.hpp"
#include "witness_table.hpp"

#include "delsarte/elliptic.hpp"
#include "delsarte/linalg.hpp"
#include "delsarte/shioda.hpp"
#include "delsarte/singular_locus.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

using namespace testing;

namespace {

int failures = 0;

void verdict(int n, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << "\n";
    if (!ok) ++failures;
}

void detail(const std::string& line) { std::cout << "    " << line << "\n"; }

std::string set_str(const std::set<Rational>& s) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& x : s) {
        out << (first ? "" : ", ") << to_string(x);
        first = false;
    }
    out << "}";
    return out.str();
}

PolyQ away(const PolyQ& p) { return squarefree_part(strip_variable_factor(p).first); }

bool has_zero_kernel_entry(const PlaneModel& pm) {
    for (Eigen::Index i = 0; i < 3; ++i)
        if (pm.k(i) == 0) return true;
    return false;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void picard_family_constant() {
    bool ok = true;
    double worst = 0;
    for (const auto& [p, want] : std::vector<std::pair<long, long>>{{11, 62}, {13, 74}}) {
        std::ostringstream line;
        line << "p=" << p << ":";
        for (long a = 1; a <= 12; ++a) {
            const auto start = std::chrono::steady_clock::now();
            const FamilyPicard r = picard_family(FamilyParams::make(p, a));
            worst = std::max(worst, seconds_since(start));
            line << " " << r.rho_tilde;
            ok = ok && r.rho_tilde == want && r.rho == want - 1;
        }
        detail(line.str());
    }
    std::ostringstream t;
    t << "slowest (p, a): " << worst << " s";
    detail(t.str());
    verdict(1, ok, "rho(S~) = 62 for p = 11 and 74 for p = 13, a = 1..12");
}

void small_primes() {
    bool ok = true;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& [p, a, want] : std::vector<std::array<long, 3>>{{7, 3, 86}, {5, 6, 74}, {3, 60, 62}}) {
        const long got = picard_family(FamilyParams::make(p, a)).rho_tilde;
        std::ostringstream line;
        line << "p=" << p << " a=" << a << ": rho(S~) = " << got << ", expected " << want;
        detail(line.str());
        ok = ok && got == want;
    }
    std::ostringstream t;
    t << "total " << seconds_since(start) << " s";
    detail(t.str());
    verdict(2, ok, "small-prime exceptions 86, 74, 62");
}

void excluded_sets() {
    bool ok = true;
    for (long p : {11L, 13L})
        for (long a = 1; a <= 4; ++a) {
            const long d = 2 * p;
            const std::set<Rational> want{q(p - 1, d), q(1, 2), q(p + 2, d), q(2 * p - 4, d), q(2 * p - 2, d), q(2 * p - 1, d)};
            const std::set<Rational> got = excluded_fractions(FamilyParams::make(p, a));
            if (got != want) {
                ok = false;
                detail("p=" + std::to_string(p) + " a=" + std::to_string(a) + ": " + set_str(got));
            }
        }
    detail("p=11: " + set_str(excluded_fractions(FamilyParams::make(11, 1))));
    verdict(3, ok, "excluded fractions for p in {11, 13}, a in {1, 2, 3, 4}");
}

std::vector<MinimalFibration> locus_corpus() {
    std::vector<MinimalFibration> corpus = fibration_corpus(4);
    for (const auto& mf : random_fibrations(60, 6, 20240611)) corpus.push_back(mf);
    corpus.push_back(cubic_quadratic());
    corpus.push_back(cubic_linear());
    corpus.push_back(cubic_tx());
    return corpus;
}

void oracle_equivalence(const std::vector<MinimalFibration>& corpus) {
    long compared = 0, equal = 0, skipped = 0, nonzero_k = 0, nonzero_equal = 0, contained = 0;
    std::vector<std::string> mismatches;
    for (const auto& mf : corpus) {
        PolyQ oracle;
        try {
            oracle = away(discriminant_oracle(mf.equation()));
        } catch (const DegreeOverflowError&) {
            ++skipped;
            continue;
        } catch (const OracleDegenerateError&) {
            ++skipped;
            continue;
        }
        const PolyQ locus = away(singular_locus(mf).equation());
        const bool zero_k = has_zero_kernel_entry(plane_model(mf));
        ++compared;
        if (oracle == locus) ++equal;
        else if (mismatches.size() < 3) mismatches.push_back(mf.str() + ": oracle " + to_string(oracle) + ", locus " + to_string(locus));
        if (!zero_k) {
            ++nonzero_k;
            if (oracle == locus) ++nonzero_equal;
        }
        if (divmod(locus, oracle).second.is_zero()) ++contained;
    }
    const bool pinned = away(discriminant_oracle(cubic_quadratic().equation())) == poly({q(4, 27), 1}) &&
                        away(discriminant_oracle(cubic_linear().equation())) == poly({q(4, 27), 0, 1}) &&
                        away(discriminant_oracle(cubic_tx().equation())) == poly({q(-1, 4), 1});
    std::ostringstream s;
    s << "compared " << compared << " fibrations of degree <= 6, " << skipped << " outside the oracle's range";
    detail(s.str());
    detail("exact coincidence: " + std::to_string(equal) + " / " + std::to_string(compared));
    detail("with every k_i != 0 (i < 4): " + std::to_string(nonzero_equal) + " / " + std::to_string(nonzero_k));
    detail("oracle roots among t^k4 = prod k_i^k_i: " + std::to_string(contained) + " / " + std::to_string(compared));
    detail(std::string("pinned t = -4/27, t^2 = -4/27, t = 1/4: ") + (pinned ? "match" : "differ"));
    for (const auto& m : mismatches) detail("e.g. " + m);
    verdict(4, compared >= 50 && equal == compared && pinned,
            "singular-locus oracle coincides with t^k4 = prod k_i^k_i");
}

bool same_j(const WeierstrassInvariants& inv, const PolyQ& num, const PolyQ& den) {
    return inv.j_numerator * den == num * inv.j_denominator;
}

std::string symbols(const std::vector<FiberAtPlace>& table) {
    std::string out;
    for (const auto& f : table) out += (out.empty() ? "" : ", ") + f.fiber.name() + " at " + f.place.str();
    return out;
}

void elliptic_examples() {
    const PolyQ t = t_power(1);
    using K = KodairaSymbol;
    const auto sym = [](const std::vector<FiberAtPlace>& table, std::vector<KodairaFiber> want) {
        if (table.size() != want.size()) return false;
        for (std::size_t i = 0; i < want.size(); ++i)
            if (!(table[i].fiber == want[i])) return false;
        return true;
    };

    // y^2 = x^3 + x^2 + t x
    const auto tx = WeierstrassModel::short_form(PolyQ(q(1)), t, PolyQ());
    const PolyQ u = q(3) * t - PolyQ(q(1));
    const bool j_ok = same_j(weierstrass_invariants(tx), q(256) * u * u * u, q(4) * t_power(3) - t_power(2));
    detail(std::string("j(y^2 = x^3 + x^2 + t x) = 256(3t - 1)^3 / (4t^3 - t^2): ") + (j_ok ? "exact" : "differs"));
    const auto tx_table = fiber_table(tx);
    const bool tx_ok = sym(tx_table, {KodairaFiber::make(K::I, 2), KodairaFiber::make(K::III), KodairaFiber::make(K::I, 1)});
    detail("y^2 = x^3 + x^2 + t x: " + symbols(tx_table) + " (expected I2, III, I1)");

    // y^2 = x^3 + x^2 + t and y^2 = x^3 + t x + t^2
    const auto first = fiber_table(WeierstrassModel::short_form(PolyQ(q(1)), PolyQ(), t));
    const bool first_ok = sym(first, {KodairaFiber::make(K::I, 1), KodairaFiber::make(K::IIStar), KodairaFiber::make(K::I, 1)});
    detail("y^2 = x^3 + x^2 + t: " + symbols(first) + " (expected I1, II*, I1)");
    const auto second = fiber_table(WeierstrassModel::short_form(PolyQ(), t, t_power(2)));
    const bool second_ok = sym(second, {KodairaFiber::make(K::IV), KodairaFiber::make(K::I, 1), KodairaFiber::make(K::IStar, 1)});
    detail("y^2 = x^3 + t x + t^2: " + symbols(second) + " (expected IV, I1, I1*)");

    // gamma of the computed tables and of the quoted configuration
    const Rational g1 = gamma(first);
    const Rational g2 = gamma(second);
    const Rational quoted = gamma({{{Place::Kind::Zero, {}}, KodairaFiber::make(K::IV)},
                                   {{Place::Kind::Infinity, {}}, KodairaFiber::make(K::I, 1)},
                                   {{Place::Kind::Away, poly({q(4, 27), 1})}, KodairaFiber::make(K::IStar, 1)}});
    detail("gamma: " + to_string(g1) + " and " + to_string(g2) + " from the models, " + to_string(quoted) +
           " from the quoted (IV, I1, I1*) symbols");
    const bool gamma_ok = g1 == q(2, 3) && g2 == q(2, 3);
    verdict(5, j_ok && tx_ok && first_ok && second_ok && gamma_ok,
            "j, Kodaira configurations and gamma = 2/3 of the elliptic examples");
}

bool prime_division(const IntegerVector& k) {
    Integer bound = 0;
    for (const auto& x : k) bound = std::max(bound, Integer(abs(x)));
    for (Integer p = 2; p <= bound; ++p) {
        bool prime = true;
        for (Integer d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
        if (!prime) continue;
        int undivided = 0;
        for (const auto& x : k) undivided += x % p != 0;
        if (undivided < 2) return false;
    }
    return true;
}

void kernel_invariants(const std::vector<MinimalFibration>& corpus) {
    std::vector<MinimalFibration> all = corpus;
    for (const auto& mf : random_fibrations(200, 6, 7)) all.push_back(mf);
    long ok_count = 0;
    std::vector<std::string> bad;
    for (const auto& mf : all) {
        const PlaneModel pm = plane_model(mf);
        const IntegerVector& k = pm.k;
        const VectorQ kq = k.cast<Rational>();
        const bool annihilates = (pm.a_prime.transpose() * kq).isZero();
        const bool sum_zero = k.sum() == 0;
        Integer g = 0;
        for (const auto& x : k) g = gcd(g, x);
        const bool primitive = g == 1;
        const bool positive = k(3) > 0;
        int nonzero = 0;
        for (const auto& x : k) nonzero += x != 0;
        RowVectorQ e = RowVectorQ::Zero(4);
        e(2) = 1;
        e(3) = -1;
        MatrixQ pair(2, 4);
        pair.row(0) = e * invert(pm.a);
        pair.row(1) = kq.transpose();
        const bool proportional = rank(pair) == 1;
        if (annihilates && sum_zero && primitive && positive && nonzero >= 3 && prime_division(k) && proportional) ++ok_count;
        else if (bad.size() < 3) bad.push_back(mf.str());
    }
    detail(std::to_string(ok_count) + " / " + std::to_string(all.size()) +
           " fibrations satisfy k A' = 0, sum 0, gcd 1, k4 > 0, three nonzero entries, prime division, k ~ (0,0,1,-1) A^-1");
    for (const auto& b : bad) detail("fails: " + b);
    verdict(6, ok_count == static_cast<long>(all.size()), "kernel-vector invariants");
}

void hodge() {
    bool ok = true;
    for (long p : {3L, 5L, 7L, 11L, 13L})
        for (long a = 1; a <= 4; ++a) {
            const FamilyParams params = FamilyParams::make(p, a);
            const HodgeCounts h = gs_hodge_counts(params);
            const long expected = (p - 1) * (2 * a * p - 2);
            ok = ok && h.total() == expected && h.total() == static_cast<long>(family_L0(params).size()) && h.h20 == h.h02;
        }
    const HodgeCounts k3 = gs_hodge_counts(FamilyParams::make(3, 2));
    detail("p=3 a=2: h20 = " + std::to_string(k3.h20) + ", h11prim = " + std::to_string(k3.h11prim) +
           ", h02 = " + std::to_string(k3.h02));
    verdict(7, ok && k3.h20 == 1, "Hodge totals (p-1)(2ap-2) = #L0, h20 = h02, h20(3, 2) = 1");
}

void structure() {
    const MinimalFibration mf = cubic_linear();
    const StructureDecomposition sd = structure_decomposition(mf);
    const PolyQ locus = away(singular_locus(mf).equation());
    const PolyQ oracle = away(discriminant_oracle(mf.equation()));
    const bool swapped = locus.degree() == 2 && scale_argument(locus, q(-1)) == locus && rational_roots(locus).empty() &&
                         oracle == locus;
    detail("k4 = " + std::to_string(sd.k4) + ", quotient value " + to_string(sd.quotient_value) +
           ", away values are the roots of " + to_string(locus));
    verdict(8, sd.k4 == 2 && sd.quotient_value == q(-4, 27) && swapped,
            "y^2 + x^3 + x + t is a pullback along t -> t^2 with singular values swapped by t -> -t");
}

void witness_table_notes() {
    for (const auto& [p, a] : std::vector<std::pair<long, long>>{{11, 4}, {11, 2}, {11, 9}, {7, 9}, {19, 3}, {23, 3}}) {
        const WitnessTally tally = check_witnesses(p, a);
        std::ostringstream line;
        line << "NOTE witness table, " << witness_case(p, a).label << ", p=" << p << " a=" << a << ": "
             << tally.covered - tally.failed << " / " << tally.covered << " witnesses valid";
        if (!tally.failing_rows.empty()) {
            line << ", failing rows";
            for (auto r : tally.failing_rows) line << " " << r + 1;
        }
        std::cout << line.str() << "\n";
    }
}

}  // namespace

int main() {
    const std::vector<MinimalFibration> corpus = locus_corpus();
    picard_family_constant();
    small_primes();
    excluded_sets();
    oracle_equivalence(corpus);
    elliptic_examples();
    kernel_invariants(corpus);
    hodge();
    structure();
    witness_table_notes();
    std::cout << (8 - failures) << " / 8 criteria pass\n";
    return failures;
}
