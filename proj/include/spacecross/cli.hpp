#pragma once

// Subcommand dispatch behind the spacecross binary. Reports are JSON; exit
// status 0 on success, 1 on invalid input, 2 on an internal invariant failure.

#include "spacecross/crossing.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace spacecross {

struct CommandConfig {
  std::string command;
  std::string input;   // empty: use a seeded fixture where the command allows it
  std::string output;  // empty: stdout
  Mode mode = Mode::Exact;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::uint64_t budget = 200000;
  unsigned subdivision = 8;
  int k = 4;
  unsigned threads = 0;
  int n = 0;
  std::int64_t m = 0;
  int dim = 2;
  long den = 64;
  double p = 0.5;
  bool check_bounds = false;
  bool count = false;
  std::string kind;  // generate: points | drawing | planar-drawing | erdos-renyi | hopf | stacked-hopf | multiset

  /// ValidationError on out-of-range fields.
  void validate() const;
};

struct CommandResult {
  int status = 0;
  nlohmann::json report;
};

const std::vector<std::string>& subcommands();

/// Never throws; failures become an {"error": {...}} report and a status.
CommandResult run(const CommandConfig& cfg);

/// Parses argv, runs, and writes the report to --output or `out`; errors go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spacecross
