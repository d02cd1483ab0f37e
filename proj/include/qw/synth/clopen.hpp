#pragma once

#include <vector>

#include "qw/logic/formula.hpp"
#include "qw/quant/analysis.hpp"
#include "qw/synth/common.hpp"

namespace qw {

// R^{l,m}: some member X of q has X ∩ neg = ∅ and pos ⊆ X. False when neg
// and pos share a tuple.
bool rlm_semantic(const Quantifier& q, const std::vector<Tuple>& neg, const std::vector<Tuple>& pos,
                  const Limits& limits = {});

// The defining formula of R^{l,m} with free variables b{i}_{j} (neg, l
// tuples), a{i}_{j} (pos, m tuples) and, when `with_witness` is false,
// c{i}_{j} (r witness tuples); otherwise the witnesses are existentially
// bound. The matrix is
//   (⋀ b_i ≠ a_j) ∧ Q x (⋀ x ≠ b_i ∧ (⋁ x = a_i ∨ ⋁ x = c_i)).
Formula rlm_formula(int arity, int l, int m, int r, bool with_witness, const std::string& quantifier = "q");

// Truth of the R^{l,m} formula with r = t^k, over the universe of q.
// DomainError for non-clopen q.
bool rlm_formula_check(const Quantifier& q, const std::vector<Tuple>& neg, const std::vector<Tuple>& pos);

// Formula-based support membership: some b̄, c̄ of length r avoiding a make
// R^{r+1,r}(a b̄; c̄) and R^{r,r+1}(b̄; c̄ a) differ.
bool support_membership_formula_test(const Quantifier& q, const Tuple& a);

struct ClopenOrbitOptions {
  // Limit R^{j,l} preservation to j + l <= m + t as literally stated. The
  // default also covers j + l <= |S|, without which patterns on a support
  // larger than m + t go unchecked.
  bool literal_bound = false;
};

// Whether ā (distinct, length m+1) lies in the orbit of (0,...,m), decided
// by searching extensions a_0..a_{m+t}. Inconclusive when m + t + 1 > n.
Verdict clopen_orbit_check(const Quantifier& q, const Tuple& a, const ClopenOrbitOptions& options = {},
                           const Limits& limits = {});

}  // namespace qw
