// Command line front end: exact stability computations for sheaves on
// stacky curves, driven by JSON problem files.

#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"
#include "json_io.hpp"
#include "orbistab/errors.hpp"

namespace {

using orbistab::cli::Options;

constexpr int kExitInvalidInput = 2;
constexpr int kExitInternal = 3;

struct Subcommand {
  const char* name;
  const char* description;
  std::function<std::string(const Options&)> run;
  bool takes_preset = false;
  bool takes_level = false;
  bool takes_twist = false;
  bool takes_strict = false;
};

const std::vector<Subcommand>& subcommands() {
  using namespace orbistab::cli;
  static const std::vector<Subcommand> table = {
      {"point-table", "Character count table for zero-dimensional point objects", cmd_point_table,
       true, false, false, false},
      {"hilbert", "Modified Hilbert polynomial of a sheaf", cmd_hilbert},
      {"stability", "Stability verdict for a locally free decomposable sheaf", cmd_stability},
      {"hn", "Harder-Narasimhan filtration over the sub-sum lattice", cmd_hn},
      {"jh", "Jordan-Holder graded pieces of a semistable sheaf", cmd_jh},
      {"sequiv", "S-equivalence of two semistable sheaves", cmd_sequiv},
      {"torsion", "Torsion filtration over the sub-sum lattice", cmd_torsion},
      {"parabolic", "Parabolic level data at a stacky point", cmd_parabolic},
      {"gerbe-split", "Character eigensheaf splitting on a gerbe", cmd_gerbe_split},
      {"git-weight", "Hilbert-Mumford weight of a one-parameter subgroup", cmd_git_weight,
       false, true, false, false},
      {"git-check", "Numerical GIT semistability inequalities", cmd_git_check,
       false, true, false, true},
      {"bounds-check", "Slope estimate, section bound and section counts", cmd_bounds_check,
       false, false, true, false},
      {"regularity", "Regularity bound from section bounds", cmd_regularity},
  };
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact stability computations for sheaves on stacky curves"};
  app.require_subcommand(1);

  Options options;
  std::string selected;
  std::map<std::string, CLI::App*> apps;
  for (const auto& sub : subcommands()) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.description);
    cmd->add_option("--file", options.file, "JSON problem file");
    cmd->add_option("--format", options.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--seed", options.seed, "Choice seed for filtration refinements");
    if (sub.takes_preset) cmd->add_option("--preset", options.preset, "Named built-in input");
    if (sub.takes_level) cmd->add_option("--l", options.level, "Linearization level");
    if (sub.takes_twist) cmd->add_option("--m", options.twist, "Twist");
    if (sub.takes_strict) cmd->add_flag("--strict", options.strict, "Require strict inequalities");
    cmd->callback([&selected, name = std::string(sub.name)] { selected = name; });
    apps[sub.name] = cmd;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    std::cerr << "run '" << (argv[0] ? argv[0] : "orbistab") << " --help' for usage\n";
    return kExitInvalidInput;
  }
  if (!selected.empty()) {
    const CLI::Option* m_option = apps[selected]->get_option_no_throw("--m");
    if (m_option != nullptr && m_option->count() > 0) options.twist_given = true;
  }

  try {
    for (const auto& sub : subcommands()) {
      if (selected == sub.name) {
        std::cout << sub.run(options);
        return 0;
      }
    }
    std::cerr << "no subcommand selected\n";
    return kExitInvalidInput;
  } catch (const orbistab::cli::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!e.hint.empty()) std::cerr << "hint: " << e.hint << "\n";
    return kExitInvalidInput;
  } catch (const orbistab::InconsistentLatticeError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const orbistab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitInternal;
  }
}
