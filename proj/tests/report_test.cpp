#include "delsarte/elliptic.hpp"
#include "delsarte/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

using namespace delsarte;

namespace {

const std::string kCubic = R"({"monomials": [[0,2,0,1],[3,0,0,0],[2,0,0,1],[0,0,1,2]]})";
const std::string kSplit = R"({"monomials": [[2,0,0,0],[0,2,0,0],[0,0,1,1],[1,1,0,0]]})";
const std::string kFermat = R"({"monomials": [[0,0,3,0],[3,0,0,0],[0,3,0,0],[0,0,0,3]]})";

// Runs the CLI with stdout and stderr discarded and returns its exit status.
int run_cli(const std::string& args) {
    const std::string cmd = std::string(DELSARTE_CLI) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST_CASE("surface parsing") {
    const SurfaceInput in = parse_surface(R"({"monomials": [[0,2,0,1],[3,0,0,0],[2,0,0,1],[0,0,1,2]],
                                               "coefficients": ["1/2", 3, "1", "-1"],
                                               "permutation": [1,0,2,3]})");
    CHECK(in.surface.exponents(1, 0) == 3);
    CHECK(in.surface.coefficients[0] == Rational(1, 2));
    CHECK(in.surface.coefficients[1] == Rational(3));
    CHECK(in.permutation == std::array<int, 4>{1, 0, 2, 3});

    CHECK_THROWS_AS(parse_surface("{"), InputParseError);
    CHECK_THROWS_AS(parse_surface("[]"), InputParseError);
    CHECK_THROWS_AS(parse_surface(R"({"monomials": [[0,2,0,1]]})"), InputParseError);
    CHECK_THROWS_AS(parse_surface(R"({"monomials": [[0,2,0,1],[3,0,0,0],[2,0,0,1],[0,0,1,"2"]]})"), InputParseError);
    CHECK_THROWS_AS(parse_surface(R"({"monomials": [[0,2,0,1],[3,0,0,0],[2,0,0,1],[0,0,1,2]],
                                      "coefficients": [1, 1, 1, 1.5]})"),
                    InputParseError);
}

TEST_CASE("analysis of y^2 + x^3 + x^2 + t") {
    const nlohmann::json r = analyze(parse_surface(kCubic), {true});
    CHECK(r["validation"]["determinant"] == "6");
    CHECK(r["degeneracy"]["verdict"] == "Nondegenerate");
    CHECK(r["minimal_form"]["equation"] == "y^2 + x^3 + x^2 + t");
    CHECK(r["plane_model"]["kernel_vector"] == nlohmann::json::array({"0", "2", "-3", "1"}));
    CHECK(r["singular_locus"]["c"] == "-4/27");
    CHECK(r["singular_locus"]["rational_roots"] == nlohmann::json::array({"-4/27"}));
    CHECK(r["trichotomy"]["genus"] == "1");
    CHECK(r["genus_one"]["gamma"] == "2/3");
    CHECK(r["genus_one"]["verify_discriminant_matches_locus"] == true);
    CHECK(r["verify"]["oracle"] == "skipped: kernel vector has a zero entry");
}

TEST_CASE("split surfaces stop after the degeneracy verdict") {
    const nlohmann::json r = analyze(parse_surface(kSplit));
    CHECK(r["degeneracy"]["verdict"] == "SplitAfterBaseChange(2)");
    CHECK(r["degeneracy"]["split_vector"] == nlohmann::json::array({"1", "1", "2", "0"}));
    CHECK_FALSE(r.contains("minimal_form"));
}

TEST_CASE("unsupported genus-one shape") {
    CHECK_THROWS_AS(analyze(parse_surface(kFermat)), NotConvertibleError);
}

TEST_CASE("output is deterministic") {
    const std::string a = dump(analyze(parse_surface(kCubic), {true}));
    const std::string b = dump(analyze(parse_surface(kCubic), {true}));
    CHECK(a == b);
    const std::string p1 = dump(picard_report(FamilyParams::make(11, 1), {true, true, false, 1}), -1);
    const std::string p4 = dump(picard_report(FamilyParams::make(11, 1), {true, true, false, 4}), -1);
    CHECK(p1 == p4);
    CHECK(p1.find('\n') == std::string::npos);
}

TEST_CASE("picard report") {
    const nlohmann::json r = picard_report(FamilyParams::make(11, 1), {true, true, true, 2});
    CHECK(r["L0_count"] == "200");
    CHECK(r["lambda"] == "140");
    CHECK(r["rho_tilde"] == "62");
    CHECK(r["rho"] == "61");
    CHECK(r["excluded_fractions"].size() == 6);
    CHECK(r["h20"] == "20");
    CHECK(r["verify"]["consistent"] == true);
}

TEST_CASE("CLI exit codes") {
    CHECK(run_cli("analyze " + quoted(kCubic) + " --verify") == 0);
    CHECK(run_cli("analyze " + quoted("{\"monomials\": [")) == 2);
    CHECK(run_cli("frobnicate") == 2);
    CHECK(run_cli("picard --p 4 --a 1") == 3);
    CHECK(run_cli("picard --p 5 --a 0") == 3);
    CHECK(run_cli("analyze " + quoted(kFermat)) == 4);
    CHECK(run_cli("picard --p 11 --a 1 --verify --threads 2") == 0);
}
