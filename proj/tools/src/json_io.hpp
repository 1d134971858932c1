#pragma once

// JSON schemas for the command line tool. All numeric values are integers or
// exact "p/q" strings; floating point input is rejected. Polynomials travel
// in the divided-power basis as {"alpha": [...]}.

#include <string>
#include <vector>

#include "json.hpp"
#include "orbistab/bounds.hpp"
#include "orbistab/curve.hpp"
#include "orbistab/gerbe.hpp"
#include "orbistab/git.hpp"

namespace orbistab::cli {

using nlohmann::json;

// Invalid input; the driver maps it to exit code 2 and prints the hint.
struct InputError : std::runtime_error {
  std::string hint;
  InputError(std::string message, std::string schema_hint = "")
      : std::runtime_error(std::move(message)), hint(std::move(schema_hint)) {}
};

long long parse_int(const json& j, const char* what);
Rational parse_rational(const json& j, const char* what);
json rational_to_json(const Rational& r);
json int_to_json(const Int& n);

QPoly parse_poly(const json& j, const char* what);
json poly_to_json(const QPoly& p);

StackyCurve parse_curve(const json& j);
OrbiLineBundle parse_line_bundle(const json& j, const StackyCurve& curve);
TorsionSummand parse_torsion(const json& j, const StackyCurve& curve);
DecomposableSheaf parse_sheaf(const json& j, const StackyCurve& curve);
GeneratingSheafSpec parse_generating(const json& j, const StackyCurve& curve);
GerbeSheaf parse_gerbe(const json& j);

std::vector<WeightEntry> parse_weights(const json& j);
std::vector<SubspacePair> parse_pairs(const json& j);

// {"kind": ..., "payload": {...}}; checks the kind tag.
json load_problem(const std::string& path, const std::string& expected_kind);

}  // namespace orbistab::cli
