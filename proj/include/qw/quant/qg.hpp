#pragma once

#include "qw/kernel/group.hpp"
#include "qw/quant/quantifier.hpp"

namespace qw {

// C_j = {(0,0)} ∪ {(i,i+1) : i < j} over universe n.
Relation chain_relation(int universe, int j);

// The binary chain quantifier whose automorphism group is g.
ChainGroupQuantifier build_qg(const Group& g);

}  // namespace qw
