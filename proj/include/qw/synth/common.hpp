#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qw/logic/formula.hpp"

namespace qw {

enum class Verdict { no, yes, inconclusive };

std::string verdict_name(Verdict v);
Verdict verdict_of(bool b);

// One construction compared against its oracle on one instance.
struct SynthesisReport {
  std::string construction;
  std::string instance;
  std::optional<std::string> formula;
  Verdict construction_verdict = Verdict::inconclusive;
  Verdict oracle_verdict = Verdict::inconclusive;

  bool agree() const noexcept { return construction_verdict == oracle_verdict; }
};

// Variables prefix0..prefix{count-1}.
std::vector<std::string> numbered_vars(const std::string& prefix, int count);

// x̄ = ȳ componentwise, as a conjunction of equality atoms.
Formula tuple_equal(const std::vector<Term>& xs, const std::vector<Term>& ys);
std::vector<Term> var_terms(const std::vector<std::string>& names);

}  // namespace qw
