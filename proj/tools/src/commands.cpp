#include "commands.hpp"

#include <algorithm>
#include <sstream>

#include "json_io.hpp"
#include "orbistab/lattice.hpp"

namespace orbistab::cli {

namespace {

// Generic CSV rendering: one "key,value" row per scalar, keys being JSON
// pointer paths. The point table has its own tabular format.
std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (const char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string to_csv_rows(const json& out) {
  std::ostringstream os;
  os << "key,value\n";
  const json flat = out.flatten();
  for (const auto& [path, value] : flat.items()) {
    os << path.substr(1) << ",";  // drop the leading '/'
    if (value.is_string()) os << csv_escape(value.get<std::string>());
    else os << value.dump();
    os << "\n";
  }
  return os.str();
}

std::string render(const json& out, const Options& options) {
  if (options.format == "csv") return to_csv_rows(out);
  return out.dump(2) + "\n";
}

struct RootCurveProblem {
  StackyCurve curve;
  DecomposableSheaf sheaf;
  GeneratingSheafSpec generating;
  json payload;
};

RootCurveProblem load_rootcurve(const Options& options, const char* kind = "rootcurve") {
  if (options.file.empty()) throw InputError("--file is required for this subcommand");
  const json payload = load_problem(options.file, kind);
  RootCurveProblem problem{
      parse_curve(payload.contains("curve") ? payload.at("curve") : json::object()),
      DecomposableSheaf{},
      GeneratingSheafSpec::balanced(StackyCurve{}),
      payload};
  problem.generating =
      parse_generating(payload.contains("generating") ? payload.at("generating") : json(nullptr),
                       problem.curve);
  if (payload.contains("sheaf")) problem.sheaf = parse_sheaf(payload.at("sheaf"), problem.curve);
  return problem;
}

json filtration_to_json(const SubobjectLattice& lattice, const Filtration& filtration,
                        bool with_reduced) {
  json chain = json::array();
  for (const std::size_t node : filtration.chain) chain.push_back(lattice.node_label(node));
  json graded = json::array();
  json graded_reduced = json::array();
  for (const auto& piece : filtration.graded) {
    graded.push_back(poly_to_json(piece));
    if (with_reduced) graded_reduced.push_back(poly_to_json(reduced_poly(piece)));
  }
  json out{{"chain", std::move(chain)}, {"graded", std::move(graded)}};
  if (with_reduced) out["graded_reduced"] = std::move(graded_reduced);
  return out;
}

}  // namespace

std::string cmd_point_table(const Options& options) {
  std::vector<std::pair<std::string, CharacterRep>> points;
  std::vector<long long> twists;
  if (!options.preset.empty()) {
    if (options.preset == "p332-minimal") {
      points = p332_points();
      twists = p332_minimal_twists();
    } else if (options.preset == "p332-separating") {
      points = p332_points();
      twists = p332_separating_twists();
    } else {
      throw InputError("unknown preset \"" + options.preset + "\"",
                       "available presets: p332-minimal, p332-separating");
    }
  } else {
    if (options.file.empty())
      throw InputError("point-table needs --preset or --file");
    const json payload = load_problem(options.file, "point_table");
    for (const auto& p : payload.at("points")) {
      const std::string label = p.at("label").get<std::string>();
      const long long modulus = parse_int(p.at("modulus"), "point.modulus");
      std::vector<long long> chars;
      for (const auto& c : p.at("chars")) chars.push_back(parse_int(c, "point.chars"));
      try {
        points.emplace_back(label, CharacterRep::make(modulus, std::move(chars)));
      } catch (const Error& e) {
        throw InputError(std::string("point \"") + label + "\": " + e.what());
      }
    }
    for (const auto& t : payload.at("twists")) twists.push_back(parse_int(t, "twists"));
  }

  const PointTable table = point_table(points, twists);
  if (options.format == "csv") return to_csv(table);

  std::vector<CharacterRep> reps;
  for (const auto& [label, rep] : points) reps.push_back(rep);
  json rows = json::array();
  for (const auto& row : table.rows)
    rows.push_back(json{{"label", row.label}, {"counts", row.counts}, {"n", row.total}});
  return render(json{{"twists", table.twists},
                     {"rows", std::move(rows)},
                     {"distinguishes", distinguishes(reps, twists)}},
                options);
}

std::string cmd_hilbert(const Options& options) {
  const auto problem = load_rootcurve(options);
  return render(poly_to_json(modified_hilbert(problem.sheaf, problem.generating, problem.curve)),
                options);
}

std::string cmd_stability(const Options& options) {
  const auto problem = load_rootcurve(options);
  const auto verdict = semistable(problem.sheaf, problem.generating, problem.curve);
  return render(json{{"verdict", to_string(verdict)}}, options);
}

std::string cmd_hn(const Options& options) {
  const auto problem = load_rootcurve(options);
  const auto lattice = build_lattice(problem.sheaf, problem.generating, problem.curve);
  return render(filtration_to_json(lattice, hn(lattice), true), options);
}

std::string cmd_jh(const Options& options) {
  const auto problem = load_rootcurve(options);
  const auto lattice = build_lattice(problem.sheaf, problem.generating, problem.curve);
  const auto result = jh(lattice, options.seed);
  json pieces = json::array();
  for (const auto& piece : result.pieces)
    pieces.push_back(json{{"label", piece.label}, {"poly", poly_to_json(piece.poly)}});
  return render(json{{"reduced", poly_to_json(result.reduced)}, {"pieces", std::move(pieces)}},
                options);
}

std::string cmd_sequiv(const Options& options) {
  if (options.file.empty()) throw InputError("--file is required for this subcommand");
  const json payload = load_problem(options.file, "rootcurve");
  const StackyCurve curve =
      parse_curve(payload.contains("curve") ? payload.at("curve") : json::object());
  const auto generating =
      parse_generating(payload.contains("generating") ? payload.at("generating") : json(nullptr),
                       curve);
  if (!payload.contains("a") || !payload.contains("b"))
    throw InputError("sequiv payload needs sheaves \"a\" and \"b\"");
  const auto a = parse_sheaf(payload.at("a"), curve);
  const auto b = parse_sheaf(payload.at("b"), curve);
  const auto jh_a = jh(build_lattice(a, generating, curve), options.seed);
  const auto jh_b = jh(build_lattice(b, generating, curve), options.seed);
  return render(json{{"s_equivalent", s_equivalent(jh_a, jh_b)}}, options);
}

std::string cmd_torsion(const Options& options) {
  const auto problem = load_rootcurve(options);
  const auto lattice = build_lattice(problem.sheaf, problem.generating, problem.curve);
  return render(filtration_to_json(lattice, torsion_filtration(lattice), false), options);
}

std::string cmd_parabolic(const Options& options) {
  const auto problem = load_rootcurve(options);
  const std::size_t point =
      problem.payload.contains("point")
          ? static_cast<std::size_t>(parse_int(problem.payload.at("point"), "point"))
          : 0;
  const auto levels = parabolic_levels(problem.sheaf, problem.curve, point);
  json out_levels = json::array();
  for (const auto& level : levels)
    out_levels.push_back(json{{"level", level.level}, {"degrees", level.degrees}});
  return render(json{{"point", point}, {"levels", std::move(out_levels)}}, options);
}

std::string cmd_gerbe_split(const Options& options) {
  if (options.file.empty()) throw InputError("--file is required for this subcommand");
  const json payload = load_problem(options.file, "gerbe");
  const GerbeSheaf sheaf = parse_gerbe(payload);

  json parts = json::array();
  for (const auto& part : split(sheaf))
    parts.push_back(json{{"character", part.character}, {"poly", poly_to_json(part.poly)}});
  json label = json::array();
  for (const auto& p : component_label(sheaf)) label.push_back(poly_to_json(p));

  bool componentwise_locally_free = true;
  for (const auto& [chi, component] : sheaf.components)
    componentwise_locally_free = componentwise_locally_free &&
                                 (component.is_zero() || component.locally_free());
  json verdict;
  if (componentwise_locally_free) verdict = to_string(semistable_gerbe(sheaf));

  return render(json{{"total", poly_to_json(total_poly(sheaf))},
                     {"parts", std::move(parts)},
                     {"label", std::move(label)},
                     {"split_check", poly_split_check(sheaf)},
                     {"verdict", std::move(verdict)}},
                options);
}

std::string cmd_git_weight(const Options& options) {
  if (options.file.empty()) throw InputError("--file is required for this subcommand");
  const json payload = load_problem(options.file, "git");
  const auto entries = parse_weights(payload.at("weights"));
  return render(json{{"l", options.level},
                     {"weight", rational_to_json(hm_weight(entries, options.level))}},
                options);
}

std::string cmd_git_check(const Options& options) {
  if (options.file.empty()) throw InputError("--file is required for this subcommand");
  const json payload = load_problem(options.file, "git");
  const long long total_dim = parse_int(payload.at("total_dim"), "total_dim");
  const QPoly total = parse_poly(payload.at("poly"), "poly");
  const auto pairs = parse_pairs(payload.at("pairs"));
  return render(
      json{{"l", options.level},
           {"strict", options.strict},
           {"pointwise", git_semistable_check(total_dim, total, pairs, options.level, options.strict)},
           {"eventual", git_semistable_check_eventual(total_dim, total, pairs, options.strict)},
           {"injectivity", validation_injectivity(pairs)}},
      options);
}

std::string cmd_bounds_check(const Options& options) {
  const auto problem = load_rootcurve(options, "bounds");
  const auto& curve = problem.curve;
  const auto& generating = problem.generating;
  const auto& sheaf = problem.sheaf;

  const long long mtilde = find_mtilde(generating, curve);
  const long long m = options.twist_given
                          ? options.twist
                          : std::max<long long>(regularity_genus0(sheaf, generating, curve), 0);
  const auto counts = lepotier_counts(sheaf, generating, curve, m);

  const auto degrees = f_e_summand_degrees(sheaf, generating, curve);
  long long max_degree = degrees.front();
  for (const long long d : degrees) max_degree = std::max(max_degree, d);
  const Rational mu_max =
      Rational(max_degree + 1 - curve.genus, curve.polarization_degree);
  const QPoly p = modified_hilbert(sheaf, generating, curve);
  const Rational multiplicity = alpha_coeffs(p).back();
  if (!multiplicity.is_integer()) throw Error("unexpected non-integral multiplicity");
  const Rational langer = langer_h0_bound(mu_max, multiplicity.numerator().get_si(), 1);

  return render(json{{"mtilde", mtilde},
                     {"slope_bound", slope_bound_check(sheaf, generating, curve, mtilde)},
                     {"m", m},
                     {"lepotier", json{{"h0", int_to_json(counts.h0)},
                                       {"r_times_reduced", rational_to_json(counts.r_times_reduced)}}},
                     {"langer", json{{"mu_max", rational_to_json(mu_max)},
                                     {"multiplicity", rational_to_json(multiplicity)},
                                     {"bound", rational_to_json(langer)}}}},
                options);
}

std::string cmd_regularity(const Options& options) {
  if (options.file.empty()) throw InputError("--file is required for this subcommand");
  const json payload = load_problem(options.file, "bounds");
  if (payload.contains("kleiman")) {
    const json& spec = payload.at("kleiman");
    std::vector<Int> xs;
    for (const auto& x : spec.at("xs")) xs.push_back(Int(static_cast<long>(parse_int(x, "xs"))));
    const long long i = spec.contains("i") ? parse_int(spec.at("i"), "i")
                                           : static_cast<long long>(xs.size()) - 1;
    return render(json{{"value", int_to_json(kleiman_poly(i, xs))}}, options);
  }
  if (!payload.contains("a") || !payload.contains("b"))
    throw InputError("regularity payload needs \"a\" and \"b\" (or \"kleiman\")");
  std::vector<Int> a, b;
  for (const auto& x : payload.at("a")) a.push_back(Int(static_cast<long>(parse_int(x, "a"))));
  for (const auto& x : payload.at("b")) b.push_back(Int(static_cast<long>(parse_int(x, "b"))));
  return render(json{{"n", int_to_json(regularity_bound(a, b))}}, options);
}

}  // namespace orbistab::cli
