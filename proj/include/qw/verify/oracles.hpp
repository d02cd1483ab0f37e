#pragma once

#include <set>
#include <vector>

#include "qw/kernel/orbits.hpp"
#include "qw/logic/eval.hpp"
#include "qw/logic/structure.hpp"
#include "qw/quant/quantifier.hpp"

// Brute-force reference implementations. They only use membership and the
// definitions, never the structural shortcuts of the quant module.
namespace qw::oracle {

// Every relation of shape (n, k); n^k must stay small.
std::vector<Relation> relations(int universe, int arity);

bool downward_closed(const Quantifier& q);

// The pairwise definition: A ∩ s = B ∩ s implies A ∈ q <=> B ∈ q.
bool supports_pairwise(const Quantifier& q, const Relation& s);

// Tuples a for which some A has A ∈ q and A △ {a} ∉ q.
Relation support(const Quantifier& q);

std::vector<Permutation> automorphisms(const Quantifier& q);

// For every A ⊆ m^k: A ∈ q <=> p(A) ∈ q.
bool compatible(const Quantifier& q, const PartialInjection& p);

bool is_good(const Quantifier& q);

// Some s_i is -1 exactly on the blocks containing an entry of a.
bool occurs_negatively(const PrincipalComboQuantifier& q, const std::vector<Tuple>& a);

std::set<Tuple> orbit(const std::vector<Permutation>& group, const Tuple& a);

// A tree-walking interpreter over named assignments, independent of the
// compiled evaluator.
bool evaluate(const Formula& f, const Structure& m, const Environment& env, Assignment asg);

// g(M) ∈ A for every g in `group` and M in A.
bool invariant(const std::vector<Permutation>& group, const StructureClass& a);

// Scan of all of S_n for g with g(a) = b and g(M) = N.
bool isomorphic(const Structure& m, const Tuple& a, const Structure& n, const Tuple& b);

}  // namespace qw::oracle
