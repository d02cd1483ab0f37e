#include "qw/verify/oracles.hpp"

#include <algorithm>
#include <map>

#include "qw/error.hpp"

namespace qw::oracle {

std::vector<Relation> relations(int universe, int arity) {
  const std::size_t slots = power(universe, arity);
  if (slots > 26) throw CapabilityError("oracle relation scan too large");
  std::vector<Relation> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots); ++bits) {
    out.push_back(Relation::from_bits(universe, arity, bits));
  }
  return out;
}

bool downward_closed(const Quantifier& q) {
  for (const auto& a : relations(q.universe(), q.arity())) {
    if (!q.contains(a)) continue;
    // Checking single deletions suffices by induction on |A \ B|.
    for (std::size_t i : a.indices()) {
      Relation b = a;
      b.set(i, false);
      if (!q.contains(b)) return false;
    }
  }
  return true;
}

bool supports_pairwise(const Quantifier& q, const Relation& s) {
  std::map<Relation, bool> seen;
  for (const auto& a : relations(q.universe(), q.arity())) {
    const bool member = q.contains(a);
    auto [it, fresh] = seen.emplace(a & s, member);
    if (!fresh && it->second != member) return false;
  }
  return true;
}

Relation support(const Quantifier& q) {
  Relation out(q.universe(), q.arity());
  for (const auto& a : relations(q.universe(), q.arity())) {
    const bool member = q.contains(a);
    for (std::size_t i = 0; i < a.slots(); ++i) {
      Relation b = a;
      b.flip(i);
      if (q.contains(b) != member) out.set(i);
    }
  }
  return out;
}

std::vector<Permutation> automorphisms(const Quantifier& q) {
  // Membership is tabulated once; each g is then checked on raw bit patterns.
  const int n = q.universe();
  const int k = q.arity();
  const auto all = relations(n, k);
  std::vector<bool> member;
  for (const auto& r : all) member.push_back(q.contains(r));
  const std::size_t slots = power(n, k);
  std::vector<Permutation> out;
  for (const auto& g : all_permutations(n)) {
    std::vector<std::size_t> moved(slots);
    for (std::size_t i = 0; i < slots; ++i) {
      Tuple t = index_tuple(i, n, k);
      for (auto& e : t) e = g(e);
      moved[i] = tuple_index(t, n);
    }
    bool fixes = true;
    for (std::uint64_t bits = 0; bits < all.size() && fixes; ++bits) {
      std::uint64_t image = 0;
      for (std::size_t i = 0; i < slots; ++i) {
        if ((bits >> i) & 1u) image |= std::uint64_t{1} << moved[i];
      }
      fixes = member[bits] == member[image];
    }
    if (fixes) out.push_back(g);
  }
  return out;
}

bool compatible(const Quantifier& q, const PartialInjection& p) {
  const int n = q.universe();
  const int k = q.arity();
  const int m = p.domain_size();
  for (const auto& small : relations(m, k)) {
    Relation a(n, k);
    Relation image(n, k);
    for (const auto& t : small.tuples()) {
      a.insert(t);
      Tuple u = t;
      for (auto& e : u) e = p(e);
      image.insert(u);
    }
    if (q.contains(a) != q.contains(image)) return false;
  }
  return true;
}

bool is_good(const Quantifier& q) {
  if (!downward_closed(q)) return false;
  const auto aut = oracle::automorphisms(q);
  for (const auto& p : all_partial_injections(q.universe())) {
    if (!oracle::compatible(q, p)) continue;
    const bool extends = std::any_of(aut.begin(), aut.end(), [&](const Permutation& g) {
      for (int i = 0; i < p.domain_size(); ++i) {
        if (g(i) != p(i)) return false;
      }
      return true;
    });
    if (!extends) return false;
  }
  return true;
}

bool occurs_negatively(const PrincipalComboQuantifier& q, const std::vector<Tuple>& a) {
  std::set<int> met;
  for (const auto& t : a) {
    for (int k = 0; k < q.block_count(); ++k) {
      if (q.blocks()[static_cast<std::size_t>(k)].contains(t)) met.insert(k);
    }
  }
  for (const auto& s : q.signs()) {
    std::set<int> minus;
    for (int k = 0; k < q.block_count(); ++k) {
      if (s[static_cast<std::size_t>(k)] == -1) minus.insert(k);
    }
    if (minus == met) return true;
  }
  return false;
}

bool invariant(const std::vector<Permutation>& group, const StructureClass& a) {
  for (const auto& m : a) {
    for (const auto& g : group) {
      if (a.count(apply_to_structure(g, m)) == 0) return false;
    }
  }
  return true;
}

std::set<Tuple> orbit(const std::vector<Permutation>& group, const Tuple& a) {
  std::set<Tuple> out;
  for (const auto& g : group) out.insert(g.apply(a));
  return out;
}

bool evaluate(const Formula& f, const Structure& m, const Environment& env, Assignment asg) {
  auto value = [&](const Term& t) { return t.is_variable() ? asg.at(t.name) : t.value; };
  auto args = [&]() {
    Tuple t;
    for (const auto& term : f.terms) t.push_back(value(term));
    return t;
  };
  switch (f.kind) {
    case FormulaKind::truth: return true;
    case FormulaKind::falsity: return false;
    case FormulaKind::eq: return value(f.terms[0]) == value(f.terms[1]);
    case FormulaKind::rel: return m.relation(f.name).contains(args());
    case FormulaKind::fix: return env.fixed.at(f.name).contains(args());
    case FormulaKind::negation: return !oracle::evaluate(f.children[0], m, env, asg);
    case FormulaKind::conjunction:
      for (const auto& c : f.children) {
        if (!oracle::evaluate(c, m, env, asg)) return false;
      }
      return true;
    case FormulaKind::disjunction:
      for (const auto& c : f.children) {
        if (oracle::evaluate(c, m, env, asg)) return true;
      }
      return false;
    case FormulaKind::exists:
    case FormulaKind::forall: {
      const bool want = f.kind == FormulaKind::exists;
      for (Element x = 0; x < m.universe(); ++x) {
        asg[f.vars[0]] = x;
        if (oracle::evaluate(f.children[0], m, env, asg) == want) return want;
      }
      return !want;
    }
    case FormulaKind::quant: {
      const Quantifier& q = env.quantifiers.at(f.name);
      const int k = static_cast<int>(f.vars.size());
      Relation d(m.universe(), k);
      for (const auto& t : all_tuples(m.universe(), k)) {
        for (int i = 0; i < k; ++i) asg[f.vars[static_cast<std::size_t>(i)]] = t[static_cast<std::size_t>(i)];
        if (oracle::evaluate(f.children[0], m, env, asg)) d.insert(t);
      }
      return q.contains(d);
    }
  }
  return false;
}

bool isomorphic(const Structure& m, const Tuple& a, const Structure& n, const Tuple& b) {
  for (const auto& g : all_permutations(m.universe())) {
    if (g.apply(a) == b && apply_to_structure(g, m) == n) return true;
  }
  return false;
}

}  // namespace qw::oracle
