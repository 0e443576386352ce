#pragma once

// JSON front end: surface input parsing and the analysis and Picard reports.
// Every number is written as an exact "p/q" or integer string; keys are
// sorted so identical inputs give byte-identical output.

#include "delsarte/model.hpp"
#include "delsarte/shioda.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace delsarte {

struct InputParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SurfaceInput {
    DelsarteSurface surface;
    std::optional<std::array<int, 4>> permutation;
};

/// {"monomials": [[..4..] x4], "coefficients": ["p/q" x4]?, "permutation": [4]?}.
/// Throws InputParseError on malformed JSON or a wrong shape, and
/// std::invalid_argument on bad values.
SurfaceInput parse_surface(const std::string& text);

struct AnalyzeOptions {
    bool verify = false;
};

/// validate, degeneracy, reduction, plane model, singular locus, structure,
/// trichotomy and, for genus 1, the Weierstrass section. Throws
/// NotConvertibleError for genus-1 shapes without a Weierstrass reduction.
nlohmann::json analyze(const SurfaceInput& input, const AnalyzeOptions& options = {});

struct PicardOptions {
    bool excluded = false;
    bool hodge = false;
    bool verify = false;
    unsigned threads = 1;
};

nlohmann::json picard_report(const FamilyParams& params, const PicardOptions& options = {});

/// Serialization with sorted keys; indent < 0 gives a single line.
std::string dump(const nlohmann::json& j, int indent = 2);

}  // namespace delsarte
