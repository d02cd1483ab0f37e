#pragma once

#include "qw/logic/formula.hpp"
#include "qw/quant/analysis.hpp"

namespace qw {

struct OrbitFormulaOptions {
  // Conjoin a_i ≠ a_j. Without it, non-injective tuples whose induced map is
  // compatible also satisfy the formula (already for Q = all relations).
  bool distinct = true;
  std::string quantifier_name = "q";
};

// Free variables a0..a{m-1}; defines the orbit of (0,...,m-1) under Aut(Q)
// for good Q. DomainError when Q is not good.
Formula orbit_formula_good(const Quantifier& q, int m, const OrbitFormulaOptions& options = {},
                           const Limits& limits = {});

}  // namespace qw
