#pragma once

#include <vector>

#include "qw/logic/formula.hpp"
#include "qw/quant/analysis.hpp"
#include "qw/quant/quantifier.hpp"

namespace qw {

// ψ(ā) = Q x ⋀_j x ≠ a_j with free variables a{j}_{i}.
Formula psi_formula(int dimension, int length, const std::string& quantifier = "q");

// ψ evaluated through the formula: the Q-node on the complement of ā.
bool occurs_negatively(const PrincipalComboQuantifier& q, const std::vector<Tuple>& a);

// Some s_i is +1 exactly on the blocks met by ā; decided as membership of
// the union of those blocks, each found through chi_check.
bool occurs_positively(const PrincipalComboQuantifier& q, const std::vector<Tuple>& a,
                       const Limits& limits = {});

// ψ(a c̄), ψ(b c̄), ψ(a b c̄) agree for every c̄ of length N. DomainError
// unless q is minimal.
bool chi_check(const PrincipalComboQuantifier& q, const Tuple& a, const Tuple& b, const Limits& limits = {});

// θ(pos, neg): pos occurs positively, neg occurs negatively, and all
// entries lie in pairwise different blocks. |pos| + |neg| must equal N.
bool theta_check(const PrincipalComboQuantifier& q, const std::vector<Tuple>& pos, const std::vector<Tuple>& neg,
                 const Limits& limits = {});

// Whether b̄ lies in the Aut(q)-orbit of ā, via block representatives,
// an isomorphism search on the block-labelled expansions, and the sign
// closure test through ψ.
bool combo_orbit_check(const PrincipalComboQuantifier& q, const std::vector<Tuple>& a, const std::vector<Tuple>& b,
                       const Limits& limits = {});

}  // namespace qw
