#pragma once

// Subcommand implementations for the command line tool; each returns the
// final stdout text (JSON by default, CSV on request).

#include <cstdint>
#include <string>

namespace orbistab::cli {

struct Options {
  std::string file;
  std::string format = "json";  // "json" or "csv"
  std::string preset;
  long long level = 0;     // --l
  long long twist = 0;     // --m
  bool twist_given = false;
  bool strict = false;
  std::uint64_t seed = 0;
};

std::string cmd_point_table(const Options& options);
std::string cmd_hilbert(const Options& options);
std::string cmd_stability(const Options& options);
std::string cmd_hn(const Options& options);
std::string cmd_jh(const Options& options);
std::string cmd_sequiv(const Options& options);
std::string cmd_torsion(const Options& options);
std::string cmd_parabolic(const Options& options);
std::string cmd_gerbe_split(const Options& options);
std::string cmd_git_weight(const Options& options);
std::string cmd_git_check(const Options& options);
std::string cmd_bounds_check(const Options& options);
std::string cmd_regularity(const Options& options);

}  // namespace orbistab::cli
