#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qw/quant/analysis.hpp"

namespace qw::cli {

enum ExitCode { exit_ok = 0, exit_failure = 1, exit_usage = 2, exit_input = 3 };

struct RunConfig {
  std::string command;
  std::string group_path;
  std::string quantifier_path;
  std::string structure_path;
  std::string env_path;
  std::string class_path;
  std::string formula;
  std::string tuple;
  std::string anchor;
  std::vector<std::string> vars;
  int m = 1;
  bool literal = false;
  // Largest universe accepted from input files (QW_MAX_UNIVERSE, default 8).
  int universe_bound = 8;
  std::string suite;
  std::optional<int> n;
  int trials = 50;
  std::uint64_t seed = 1;
  bool timing = true;
  std::string out_path;
  Limits limits;
};

// Parses argv and runs one command. JSON results go to --out or `out`,
// diagnostics to `err`.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qw::cli
