#include "delsarte/elliptic.hpp"
#include "delsarte/report.hpp"
#include "delsarte/singular_locus.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kParseError = 2;
constexpr int kValidationError = 3;
constexpr int kUnsupportedShape = 4;

std::string read_source(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return arg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Delsarte surfaces: minimal fibrations, singular fibers and Picard numbers"};
    app.require_subcommand(1);

    bool verify = false;
    int indent = 2;
    unsigned threads = 1;

    auto* analyze = app.add_subcommand("analyze", "analyze a surface given as a JSON file or inline JSON");
    std::string source;
    analyze->add_option("surface", source, "path to a JSON document, or the document itself")->required();
    analyze->add_flag("--verify", verify, "recheck formula results against brute-force oracles");
    analyze->add_option("--json-indent", indent, "indentation of the JSON output (negative for one line)");

    auto* picard = app.add_subcommand("picard", "Picard number of y^2 = x^p + t^{2ap} + s^{2ap}");
    long p = 0;
    long a = 0;
    bool excluded = false;
    bool hodge = false;
    picard->add_option("--p", p, "odd prime")->required();
    picard->add_option("--a", a, "positive integer")->required();
    picard->add_flag("--excluded", excluded, "add the fractions j/2ap outside Lambda for i = 1");
    picard->add_flag("--hodge", hodge, "add the Hodge counts h20, h11prim, h02");
    picard->add_flag("--verify", verify, "recheck against the exhaustive unit loop");
    picard->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    picard->add_option("--json-indent", indent, "indentation of the JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kParseError;
    }

    try {
        nlohmann::json out;
        if (analyze->parsed()) {
            const delsarte::SurfaceInput input = delsarte::parse_surface(read_source(source));
            out = delsarte::analyze(input, {verify});
        } else {
            const auto params = delsarte::FamilyParams::make(p, a);
            out = delsarte::picard_report(params, {excluded, hodge, verify, threads});
        }
        std::cout << delsarte::dump(out, indent) << "\n";
        return 0;
    } catch (const delsarte::InputParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const delsarte::NotConvertibleError& e) {
        std::cerr << "unsupported shape: " << e.what() << "\n";
        return kUnsupportedShape;
    } catch (const delsarte::DegreeOverflowError& e) {
        std::cerr << "unsupported shape: " << e.what() << "\n";
        return kUnsupportedShape;
    } catch (const delsarte::VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidationError;
    } catch (const delsarte::NeedsNormalizationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidationError;
    } catch (const delsarte::DegenerateInputError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidationError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
