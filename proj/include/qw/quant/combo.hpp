#pragma once

#include "qw/kernel/group.hpp"
#include "qw/quant/quantifier.hpp"

namespace qw {

// Component k is +1 iff A_k ⊆ r.
SignVector hit_vector(const PrincipalComboQuantifier& q, const Relation& r);

// True iff no two blocks can be merged without changing membership.
bool is_minimal(const PrincipalComboQuantifier& q);

// Repeatedly merges a block pair whenever membership only depends on whether
// both blocks are contained. Returns q unchanged when it is already minimal.
PrincipalComboQuantifier minimize_combo(const PrincipalComboQuantifier& q);

// Permutations that move blocks onto blocks by some p with the sign set closed
// under s -> s∘p^{-1}. DomainError when q is not minimal.
Group combo_automorphisms(const PrincipalComboQuantifier& q);

}  // namespace qw
