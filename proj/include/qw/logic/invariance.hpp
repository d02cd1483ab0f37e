#pragma once

#include <optional>

#include "qw/kernel/group.hpp"
#include "qw/logic/eval.hpp"
#include "qw/logic/formula.hpp"
#include "qw/logic/structure.hpp"

namespace qw {

// A permutation g (from `group` if given, else any) with g(a) = b and
// g(R^m) = R^n for every symbol.
std::optional<Permutation> find_isomorphism(const Structure& m, const Tuple& a, const Structure& n, const Tuple& b,
                                            const Group* group = nullptr);

bool is_invariant(const Group& g, const StructureClass& a);

// {M : g(M) ∈ A for every g in G with g(anchor_i) = i}. M is included when
// no g satisfies the anchor condition.
StructureClass vaught_transform(const Group& g, const StructureSpace& space, const StructureClass& a,
                                const Tuple& anchor, const Limits& limits = {});

struct InvariantFormula {
  Formula sentence;
  // Fixed symbol for the orbit of (0,...,n-1), and its interpretation.
  std::string orbit_symbol;
  Relation orbit;

  Environment environment() const;
};

// A sentence defining the G-invariant class A. DomainError when A is not
// invariant.
InvariantFormula invariant_class_formula(const Group& g, const StructureSpace& space, const StructureClass& a,
                                         const Limits& limits = {});

}  // namespace qw
