#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qw/kernel/group.hpp"
#include "qw/kernel/orbits.hpp"
#include "qw/logic/formula.hpp"
#include "qw/logic/structure.hpp"
#include "qw/quant/quantifier.hpp"
#include "qw/verify/rng.hpp"

// Seeded generators for tests and verification suites.
namespace qw::corpus {

// Subgroup generated by `gens` random permutations (gens may be 0).
Group random_group(Rng& rng, int n, int gens);

// Subgroups generated by each ordered pair of elements of S_n, deduplicated.
std::vector<Group> pair_generated_subgroups(int n);

// Partition of n^d into at most max_blocks nonempty blocks, with 1..max_signs
// distinct sign vectors.
PrincipalComboQuantifier random_combo(Rng& rng, int n, int d, int max_blocks, int max_signs);

ClopenQuantifier random_clopen(Rng& rng, int n, int k, int t);

// A quantifier of a random kind with n^k <= 9.
Quantifier random_small_quantifier(Rng& rng);

// A quantifier of a random kind and shape (n, k) with n^k <= max_slots, k <= 3
// and n within max_universe().
Quantifier random_quantifier(Rng& rng, std::size_t max_slots);

Structure random_structure(Rng& rng, const Signature& signature, int n);

// Each structure of the space kept with probability 1/every.
StructureClass random_class(Rng& rng, const StructureSpace& space, int every);

// Union of the G-orbits of the members of a.
StructureClass close_under(const Group& g, const StructureClass& a);

PartialInjection random_injection(Rng& rng, int n, int m);

struct FormulaShape {
  Signature signature;
  int universe = 1;
  std::vector<std::pair<std::string, int>> quantifiers;  // name, arity
  std::vector<std::pair<std::string, int>> fixed;        // name, arity
  std::vector<std::string> pool = {"x", "y", "z"};
};

// A formula whose free variables lie in `scope`.
Formula random_formula(Rng& rng, const FormulaShape& shape, int depth, std::vector<std::string> scope);

}  // namespace qw::corpus
