#include "delsarte/report.hpp"

#include "delsarte/elliptic.hpp"
#include "delsarte/linalg.hpp"
#include "delsarte/reduction.hpp"
#include "delsarte/singular_locus.hpp"

#include <algorithm>

namespace delsarte {

using nlohmann::json;

namespace {

std::string str(long v) { return std::to_string(v); }
std::string str(const Rational& q) { return to_string(q); }
std::string str(const Integer& z) { return to_string(z); }

json vector_json(const IntegerVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(str(x));
    return out;
}

json poly_json(const PolyQ& p) { return to_string(p); }

json fiber_json(const FiberAtPlace& f, const std::string& var) {
    return json{{"place", f.place.str(var)},
                {"multiplicity", str(f.place.multiplicity())},
                {"type", f.fiber.name()},
                {"euler", str(f.fiber.euler)},
                {"conductor", str(f.fiber.conductor)}};
}

json gamma_json(const GammaReport& r, const std::string& var) {
    json fibers = json::array();
    for (const auto& f : r.fibers) fibers.push_back(fiber_json(f, var));
    return json{{"fibers", fibers},
                {"gamma", str(r.gamma)},
                {"nonconstant_j", r.nonconstant_j},
                {"fastenberg_eligible", r.fastenberg_eligible}};
}

json monomial_json(const Monomial3& m) { return json::array({str(static_cast<long>(m.x)), str(static_cast<long>(m.y))}); }

PolyQ away_part(const PolyQ& p) { return squarefree_part(strip_variable_factor(p).first); }

json genus_one_section(const MinimalFibration& mf, const SingularLocus& locus, bool verify) {
    const FastenbergCheck check = fastenberg_check(mf);
    const WeierstrassInvariants inv = weierstrass_invariants(check.model);
    json out;
    out["weierstrass"] = check.model.str();
    out["discriminant"] = poly_json(inv.discriminant);
    out["c4"] = poly_json(inv.c4);
    out["c6"] = poly_json(inv.c6);
    out["j"] = json{{"numerator", poly_json(inv.j_numerator)}, {"denominator", poly_json(inv.j_denominator)}};
    out["model"] = gamma_json(gamma_report(check.model), "t");
    out["away_fibers_multiplicative"] = check.away_multiplicative;
    out["fastenberg"] = to_string(check.verdict);
    if (check.verdict != FastenbergVerdict::ConstantJ) {
        out["quotient"] = json{{"k4", str(check.k4)},
                               {"weierstrass", check.quotient.str()},
                               {"report", gamma_json(check.quotient_report, "u")}};
        out["gamma"] = str(check.quotient_report.gamma);
    }
    if (verify && !locus.degenerate && !inv.constant_j()) {
        const bool ok = away_part(inv.discriminant) == away_part(locus.equation());
        out["verify_discriminant_matches_locus"] = ok;
        if (!ok)
            throw VerificationError("away part of the discriminant " + to_string(inv.discriminant) +
                                    " differs from the locus " + to_string(locus.equation()));
    }
    return out;
}

}  // namespace

SurfaceInput parse_surface(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("monomials")) throw InputParseError("expected an object with \"monomials\"");
    const json& mons = doc["monomials"];
    if (!mons.is_array() || mons.size() != 4) throw InputParseError("\"monomials\" must hold four rows");
    SurfaceInput input;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!mons[i].is_array() || mons[i].size() != 4) throw InputParseError("each monomial has four exponents");
        for (std::size_t j = 0; j < 4; ++j) {
            if (!mons[i][j].is_number_integer()) throw InputParseError("exponents must be integers");
            input.surface.exponents(static_cast<int>(i), static_cast<int>(j)) = mons[i][j].get<long>();
        }
    }
    if (doc.contains("coefficients")) {
        const json& cs = doc["coefficients"];
        if (!cs.is_array() || cs.size() != 4) throw InputParseError("\"coefficients\" must hold four entries");
        for (std::size_t i = 0; i < 4; ++i) {
            if (cs[i].is_string()) input.surface.coefficients[i] = parse_rational(cs[i].get<std::string>());
            else if (cs[i].is_number_integer()) input.surface.coefficients[i] = Rational(cs[i].get<long>());
            else throw InputParseError("coefficients are \"p/q\" strings or integers");
        }
    }
    if (doc.contains("permutation")) {
        const json& ps = doc["permutation"];
        if (!ps.is_array() || ps.size() != 4) throw InputParseError("\"permutation\" must hold four indices");
        std::array<int, 4> perm{};
        for (std::size_t i = 0; i < 4; ++i) {
            if (!ps[i].is_number_integer()) throw InputParseError("permutation entries must be integers");
            perm[i] = ps[i].get<int>();
        }
        input.permutation = perm;
    }
    return input;
}

json analyze(const SurfaceInput& input, const AnalyzeOptions& options) {
    json report;
    DelsarteSurface s = input.surface;
    {
        json echo;
        json rows = json::array();
        for (int i = 0; i < 4; ++i) {
            json row = json::array();
            for (int j = 0; j < 4; ++j) row.push_back(str(s.exponents(i, j)));
            rows.push_back(row);
        }
        echo["monomials"] = rows;
        json cs = json::array();
        for (const auto& c : s.coefficients) cs.push_back(str(c));
        echo["coefficients"] = cs;
        if (input.permutation) echo["permutation"] = *input.permutation;
        report["input"] = echo;
    }
    if (input.permutation) s = permute_coordinates(s, *input.permutation);

    const ValidationReport validation = validate_surface(s);
    report["validation"] = json{{"degree", str(validation.degree)},
                                {"determinant", str(validation.determinant)},
                                {"distinct_rows", validation.distinct_rows}};

    const MatrixQ a = s.matrix();
    if (auto split = detect_split_direction(a)) {
        const DegeneracyVerdict verdict = classify_degenerate(a, *split);
        std::string name = std::holds_alternative<RationalFiber>(verdict)
                               ? "RationalFiber"
                               : "SplitAfterBaseChange(" + str(std::get<SplitAfterBaseChange>(verdict).degree) + ")";
        report["degeneracy"] = json{{"verdict", name}, {"split_vector", vector_json(*split)}};
        return report;
    }
    report["degeneracy"] = json{{"verdict", "Nondegenerate"}};

    const Reduction red = reduce_to_minimal(s);
    const MinimalFibration& mf = red.fibration;
    json monomials = json::array();
    for (const auto& m : mf.m) monomials.push_back(monomial_json(m));
    report["minimal_form"] = json{{"equation", mf.str()},
                                  {"monomials", monomials},
                                  {"degree", str(red.degree)},
                                  {"pivot", str(static_cast<long>(red.pivot))},
                                  {"base_change", json{{"n", str(red.twist.n)},
                                                       {"a", str(red.twist.a)},
                                                       {"b", str(red.twist.b)},
                                                       {"e", str(red.twist.e)}}}};

    const PlaneModel pm = plane_model(mf);
    report["plane_model"] = json{{"kernel_vector", vector_json(pm.k)},
                                 {"ell1_contained", pm.ell1_contained},
                                 {"degree", str(pm.degree)}};

    const SingularLocus locus = singular_locus(mf);
    {
        json l{{"degenerate", locus.degenerate}, {"k4", str(locus.k4)}};
        if (!locus.degenerate) {
            l["c"] = str(locus.c);
            l["equation"] = "t^" + str(locus.k4) + " = " + str(locus.c);
            json roots = json::array();
            for (const auto& r : locus.rational_roots) roots.push_back(str(r));
            l["rational_roots"] = roots;
        }
        report["singular_locus"] = l;
    }

    const StructureDecomposition sd = structure_decomposition(mf);
    report["structure"] = json{{"k4", str(sd.k4)},
                               {"quotient_value", str(sd.quotient_value)},
                               {"quotient_places", sd.quotient_places},
                               {"statement", sd.statement}};

    const long genus = fiber_genus(mf);
    json tri{{"genus", str(genus)}};
    std::optional<Trichotomy> trichotomy;
    try {
        trichotomy = classify_trichotomy(mf);
        tri["class"] = to_string(*trichotomy);
    } catch (const RejectedInputError& e) {
        tri["class"] = "Rejected";
        tri["reason"] = e.what();
    }
    report["trichotomy"] = tri;

    if (options.verify) {
        json v;
        const bool zero_entry = std::any_of(pm.k.begin(), pm.k.end(), [](const Integer& k) { return k == 0; });
        if (locus.degenerate) {
            v["oracle"] = "skipped: degenerate locus";
        } else if (zero_entry) {
            // the predicted point lies on a sub-circuit and need not be a singular point of the curve
            v["oracle"] = "skipped: kernel vector has a zero entry";
        } else {
            try {
                const PolyQ oracle = away_part(discriminant_oracle(mf.equation()));
                const PolyQ expected = away_part(locus.equation());
                v["oracle"] = to_string(oracle);
                v["oracle_matches_locus"] = oracle == expected;
                if (oracle != expected)
                    throw VerificationError("oracle " + to_string(oracle) + " differs from " + to_string(expected));
            } catch (const DegreeOverflowError& e) {
                v["oracle"] = std::string("skipped: ") + e.what();
            } catch (const OracleDegenerateError& e) {
                v["oracle"] = std::string("skipped: ") + e.what();
            }
        }
        if (trichotomy && std::holds_alternative<SemistableElsewhere>(*trichotomy)) {
            const NodalCheck nc = nodal_check(mf);
            v["nodes_only"] = nc.all_nodes;
            if (!nc.all_nodes) throw VerificationError("a singular point on the locus is not a node");
        }
        report["verify"] = v;
    }

    if (genus == 1) report["genus_one"] = genus_one_section(mf, locus, options.verify);
    return report;
}

json picard_report(const FamilyParams& params, const PicardOptions& options) {
    const FamilyPicard r = picard_family(params, options.threads);
    json out{{"p", str(params.p)},
             {"a", str(params.a)},
             {"L0_count", str(r.l0_count)},
             {"lambda", str(r.lambda)},
             {"rho_tilde", str(r.rho_tilde)},
             {"rho", str(r.rho)}};
    if (options.excluded) {
        json ex = json::array();
        for (const auto& q : excluded_fractions(params)) ex.push_back(str(q));
        out["excluded_fractions"] = ex;
    }
    if (options.hodge) {
        const HodgeCounts h = gs_hodge_counts(params);
        out["h20"] = str(h.h20);
        out["h11prim"] = str(h.h11prim);
        out["h02"] = str(h.h02);
    }
    if (options.verify) {
        long exhaustive = 0;
        for (const auto& v : family_L0(params))
            if (lambda_membership_exhaustive(v).in_lambda) ++exhaustive;
        const auto generic = enumerate_L0(shioda_vectors(family_surface(params).matrix()));
        const bool ok = exhaustive == r.lambda && static_cast<long>(generic.size()) == r.l0_count;
        out["verify"] = json{{"lambda_exhaustive", str(exhaustive)},
                             {"L0_generic_count", str(static_cast<long>(generic.size()))},
                             {"consistent", ok}};
        if (!ok) throw VerificationError("early-exit and exhaustive enumerations disagree");
    }
    return out;
}

std::string dump(const json& j, int indent) { return j.dump(indent < 0 ? -1 : indent); }

}  // namespace delsarte
