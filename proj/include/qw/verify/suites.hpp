#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qw/io/formats.hpp"
#include "qw/quant/analysis.hpp"

namespace qw::verify {

struct SuiteConfig {
  // Universe bound; each suite has its own default when unset.
  std::optional<int> n;
  int trials = 50;
  std::uint64_t seed = 1;
  Limits limits;
};

struct SuiteReport {
  std::string suite;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t inconclusive = 0;
  // Each failure carries the serialized instance and what went wrong.
  std::vector<io::json> failures;
  // Suite-specific counters, e.g. per-corpus instance counts.
  io::json details = io::json::object();
  std::vector<SuiteReport> parts;  // filled by "all"
  double seconds = 0;

  bool ok() const noexcept { return failed == 0; }
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// InvalidInput for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

// Timing is left out when `timing` is false, so reports of equal
// configurations compare byte for byte.
io::json report_to_json(const SuiteReport& r, bool timing = true);

}  // namespace qw::verify
