#include "json_io.hpp"

#include <fstream>

namespace orbistab::cli {

namespace {

const json& require_field(const json& j, const char* field, const char* where) {
  const auto it = j.find(field);
  if (it == j.end())
    throw InputError(std::string(where) + ": missing field \"" + field + "\"");
  return *it;
}

}  // namespace

long long parse_int(const json& j, const char* what) {
  if (j.is_number_float())
    throw InputError(std::string(what) + ": floating point numbers are not accepted");
  if (!j.is_number_integer())
    throw InputError(std::string(what) + ": expected an integer");
  return j.get<long long>();
}

Rational parse_rational(const json& j, const char* what) {
  if (j.is_number_float())
    throw InputError(std::string(what) + ": floating point numbers are not accepted");
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      throw InputError(std::string(what) + ": " + e.what());
    }
  }
  throw InputError(std::string(what) + ": expected an integer or a \"p/q\" string");
}

json rational_to_json(const Rational& r) {
  if (r.is_integer() && r.numerator().fits_slong_p())
    return json(static_cast<long long>(r.numerator().get_si()));
  return json(r.str());
}

json int_to_json(const Int& n) {
  if (n.fits_slong_p()) return json(static_cast<long long>(n.get_si()));
  return json(n.get_str());
}

QPoly parse_poly(const json& j, const char* what) {
  if (!j.is_object())
    throw InputError(std::string(what) + ": expected {\"alpha\": [...]}");
  const json& alphas = require_field(j, "alpha", what);
  if (!alphas.is_array()) throw InputError(std::string(what) + ": \"alpha\" must be an array");
  std::vector<Rational> a;
  a.reserve(alphas.size());
  for (const auto& entry : alphas) a.push_back(parse_rational(entry, what));
  return poly_from_alpha(a);
}

json poly_to_json(const QPoly& p) {
  json alphas = json::array();
  for (const auto& a : alpha_coeffs(p)) alphas.push_back(rational_to_json(a));
  return json{{"alpha", std::move(alphas)}};
}

StackyCurve parse_curve(const json& j) {
  if (!j.is_object()) throw InputError("curve: expected an object");
  StackyCurve curve;
  if (j.contains("genus")) curve.genus = parse_int(j.at("genus"), "curve.genus");
  if (j.contains("polarization_degree"))
    curve.polarization_degree = parse_int(j.at("polarization_degree"), "curve.polarization_degree");
  if (j.contains("stacky_points")) {
    const json& pts = j.at("stacky_points");
    if (!pts.is_array()) throw InputError("curve.stacky_points: expected an array");
    for (const auto& r : pts) curve.stacky_points.push_back(parse_int(r, "curve.stacky_points"));
  }
  try {
    validate(curve);
  } catch (const Error& e) {
    throw InputError(std::string("curve: ") + e.what());
  }
  return curve;
}

OrbiLineBundle parse_line_bundle(const json& j, const StackyCurve& curve) {
  if (!j.is_object()) throw InputError("line bundle: expected an object");
  OrbiLineBundle line;
  if (j.contains("base_degree")) line.base_degree = parse_int(j.at("base_degree"), "base_degree");
  if (j.contains("exponents")) {
    const json& exps = j.at("exponents");
    if (!exps.is_array()) throw InputError("line bundle exponents: expected an array");
    for (const auto& k : exps) line.exponents.push_back(parse_int(k, "exponents"));
  } else {
    line.exponents.assign(curve.stacky_points.size(), 0);
  }
  return line;
}

TorsionSummand parse_torsion(const json& j, const StackyCurve& curve) {
  if (!j.is_object()) throw InputError("torsion summand: expected an object");
  TorsionSummand tor;
  const json& loc = require_field(j, "location", "torsion summand");
  if (loc.is_string() && loc.get<std::string>() == "generic") tor.location = kGenericPoint;
  else tor.location = parse_int(loc, "torsion.location");
  long long modulus = 1;
  if (tor.location != kGenericPoint) {
    if (tor.location < 0 || tor.location >= static_cast<long long>(curve.stacky_points.size()))
      throw InputError("torsion.location: stacky point index out of range");
    modulus = curve.stacky_points[static_cast<std::size_t>(tor.location)];
  }
  std::vector<long long> chars;
  if (j.contains("chars")) {
    for (const auto& c : j.at("chars")) chars.push_back(parse_int(c, "torsion.chars"));
  } else if (j.contains("length")) {
    chars.assign(static_cast<std::size_t>(parse_int(j.at("length"), "torsion.length")), 0);
  } else {
    throw InputError("torsion summand: need \"chars\" or \"length\"");
  }
  try {
    tor.rep = CharacterRep::make(modulus, std::move(chars));
  } catch (const Error& e) {
    throw InputError(std::string("torsion summand: ") + e.what());
  }
  return tor;
}

DecomposableSheaf parse_sheaf(const json& j, const StackyCurve& curve) {
  if (!j.is_object()) throw InputError("sheaf: expected an object");
  DecomposableSheaf sheaf;
  if (j.contains("line_summands"))
    for (const auto& l : j.at("line_summands")) sheaf.line_summands.push_back(parse_line_bundle(l, curve));
  if (j.contains("torsion_summands"))
    for (const auto& t : j.at("torsion_summands")) sheaf.torsion_summands.push_back(parse_torsion(t, curve));
  try {
    validate(sheaf, curve);
  } catch (const Error& e) {
    throw InputError(std::string("sheaf: ") + e.what());
  }
  return sheaf;
}

GeneratingSheafSpec parse_generating(const json& j, const StackyCurve& curve) {
  try {
    if (j.is_null()) return GeneratingSheafSpec::balanced(curve);
    if (!j.is_object()) throw InputError("generating: expected an object");
    if (j.contains("twists")) {
      std::vector<std::vector<long long>> per_point;
      for (const auto& list : j.at("twists")) {
        std::vector<long long> twists;
        for (const auto& t : list) twists.push_back(parse_int(t, "generating.twists"));
        per_point.push_back(std::move(twists));
      }
      return GeneratingSheafSpec::from_twists(std::move(per_point), curve);
    }
    const std::string kind = j.contains("kind") ? j.at("kind").get<std::string>() : "balanced";
    if (kind == "balanced") return GeneratingSheafSpec::balanced(curve);
    if (kind == "levels") return GeneratingSheafSpec::level_range(curve);
    throw InputError("generating.kind: expected \"balanced\", \"levels\" or explicit \"twists\"");
  } catch (const Error& e) {
    throw InputError(std::string("generating: ") + e.what());
  }
}

GerbeSheaf parse_gerbe(const json& j) {
  if (!j.is_object()) throw InputError("gerbe: expected an object");
  GerbeSheaf sheaf;
  sheaf.band_order = parse_int(require_field(j, "band_order", "gerbe"), "gerbe.band_order");
  sheaf.base = parse_curve(j.contains("curve") ? j.at("curve") : json::object());
  sheaf.base_generating =
      parse_generating(j.contains("generating") ? j.at("generating") : json(nullptr), sheaf.base);
  if (j.contains("character_twists")) {
    for (const auto& t : j.at("character_twists"))
      sheaf.character_twists.push_back(parse_int(t, "gerbe.character_twists"));
  } else {
    for (long long chi = 0; chi < sheaf.band_order; ++chi) sheaf.character_twists.push_back(chi);
  }
  const json& components = require_field(j, "components", "gerbe");
  if (!components.is_object()) throw InputError("gerbe.components: expected an object keyed by character");
  for (const auto& [key, value] : components.items()) {
    long long chi = 0;
    try {
      chi = std::stoll(key);
    } catch (...) {
      throw InputError("gerbe.components: keys must be characters (integers)");
    }
    sheaf.components[chi] = parse_sheaf(value, sheaf.base);
  }
  try {
    validate(sheaf);
  } catch (const Error& e) {
    throw InputError(std::string("gerbe: ") + e.what());
  }
  return sheaf;
}

std::vector<WeightEntry> parse_weights(const json& j) {
  if (!j.is_array()) throw InputError("weights: expected an array");
  std::vector<WeightEntry> entries;
  for (const auto& e : j) {
    WeightEntry entry;
    entry.weight = parse_int(require_field(e, "weight", "weights"), "weights.weight");
    entry.dim = e.contains("dim") ? parse_int(e.at("dim"), "weights.dim") : 1;
    entry.poly = parse_poly(require_field(e, "poly", "weights"), "weights.poly");
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<SubspacePair> parse_pairs(const json& j) {
  if (!j.is_array()) throw InputError("pairs: expected an array");
  std::vector<SubspacePair> pairs;
  for (const auto& e : j) {
    SubspacePair pair;
    pair.dim = parse_int(require_field(e, "dim", "pairs"), "pairs.dim");
    pair.poly = parse_poly(require_field(e, "poly", "pairs"), "pairs.poly");
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

json load_problem(const std::string& path, const std::string& expected_kind) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("payload"))
    throw InputError("problem file must be {\"kind\": ..., \"payload\": {...}}",
                     "expected kinds: point_table, rootcurve, gerbe, git, bounds");
  if (doc.at("kind").get<std::string>() != expected_kind)
    throw InputError("problem kind \"" + doc.at("kind").get<std::string>() +
                         "\" does not match this subcommand",
                     "this subcommand expects kind \"" + expected_kind + "\"");
  return doc.at("payload");
}

}  // namespace orbistab::cli
