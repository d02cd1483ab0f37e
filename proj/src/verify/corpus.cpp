#include "qw/verify/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qw/error.hpp"
#include "qw/quant/qg.hpp"

namespace qw::corpus {

Group random_group(Rng& rng, int n, int gens) {
  std::vector<Permutation> g;
  for (int i = 0; i < gens; ++i) g.push_back(rng.permutation(n));
  return Group::generate(n, g);
}

std::vector<Group> pair_generated_subgroups(int n) {
  const auto perms = all_permutations(n);
  std::set<std::vector<Permutation>> seen;
  std::vector<Group> out;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = i; j < perms.size(); ++j) {
      Group g = Group::generate(n, {perms[i], perms[j]});
      if (seen.insert(g.elements()).second) out.push_back(std::move(g));
    }
  }
  return out;
}

PrincipalComboQuantifier random_combo(Rng& rng, int n, int d, int max_blocks, int max_signs) {
  const std::size_t slots = power(n, d);
  const int blocks = rng.between(1, std::min<int>(max_blocks, static_cast<int>(slots)));
  std::vector<std::size_t> order(slots);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<Relation> parts(static_cast<std::size_t>(blocks), Relation(n, d));
  // The first `blocks` tuples seed one block each so none is empty.
  for (std::size_t i = 0; i < slots; ++i) {
    const auto owner = i < static_cast<std::size_t>(blocks) ? i : rng.below(static_cast<std::uint64_t>(blocks));
    parts[owner].set(order[i]);
  }
  std::set<std::uint64_t> masks;
  const int count = rng.between(1, max_signs);
  for (int i = 0; i < count; ++i) masks.insert(rng.below(std::uint64_t{1} << blocks));
  std::vector<SignVector> signs;
  for (auto m : masks) signs.push_back(PrincipalComboQuantifier::signs_of(m, blocks));
  return PrincipalComboQuantifier(n, d, std::move(parts), std::move(signs));
}

ClopenQuantifier random_clopen(Rng& rng, int n, int k, int t) {
  std::set<Relation> traces;
  const std::size_t slots = power(t, k);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots); ++bits) {
    if (rng.coin()) traces.insert(Relation::from_bits(t, k, bits));
  }
  return ClopenQuantifier(n, k, t, std::move(traces));
}

namespace {

Quantifier quantifier_of_kind(Rng& rng, int kind, int n, int k) {
  const std::size_t slots = power(n, k);
  switch (kind) {
    case 0: {
      // Vary the density so sparse and dense families both appear.
      const std::uint64_t density = rng.below(4);
      std::set<Relation> members;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots); ++bits) {
        if (rng.below(4) <= density / 2) members.insert(Relation::from_bits(n, k, bits));
      }
      return ExtensionalQuantifier(n, k, std::move(members));
    }
    case 1:
      return random_clopen(rng, n, k, rng.between(0, std::min(n, 2)));
    case 2:
      return PrincipalQuantifier(rng.relation(n, k), rng.coin() ? PrincipalMode::superset : PrincipalMode::subset);
    case 3:
      return random_combo(rng, n, k, 3, 4);
    case 4:
      if (k == 2) return build_qg(random_group(rng, n, rng.between(0, 2)));
      [[fallthrough]];
    default: {
      std::vector<Relation> gens;
      const int count = rng.between(0, 3);
      for (int i = 0; i < count; ++i) gens.push_back(rng.relation(n, k));
      return DownwardGeneratedQuantifier(n, k, std::move(gens));
    }
  }
}

}  // namespace

Quantifier random_small_quantifier(Rng& rng) {
  const int kind = rng.between(0, 5);
  const int k = rng.between(1, 2);
  const int n = k == 1 ? rng.between(1, 4) : rng.between(1, 3);
  return quantifier_of_kind(rng, kind, n, k);
}

Quantifier random_quantifier(Rng& rng, std::size_t max_slots) {
  std::vector<std::pair<int, int>> shapes;
  for (int k = 1; k <= 3; ++k) {
    for (int n = 1; n <= std::min(static_cast<int>(max_slots), max_universe()); ++n) {
      if (power(n, k) <= max_slots) shapes.emplace_back(n, k);
    }
  }
  if (shapes.empty()) throw InvalidInput("no quantifier shape fits the slot bound");
  const int kind = rng.between(0, 5);
  const auto [n, k] = shapes[rng.below(shapes.size())];
  // Chain quantifiers are binary only; quantifier_of_kind falls back.
  return quantifier_of_kind(rng, kind, n, k);
}

Structure random_structure(Rng& rng, const Signature& signature, int n) {
  std::vector<Relation> rels;
  for (int a : signature.arities()) rels.push_back(rng.relation(n, a));
  return Structure(signature, n, std::move(rels));
}

StructureClass random_class(Rng& rng, const StructureSpace& space, int every) {
  StructureClass out;
  for (std::uint64_t i = 0; i < space.count(); ++i) {
    if (rng.below(static_cast<std::uint64_t>(every)) == 0) out.insert(space.at(i));
  }
  return out;
}

StructureClass close_under(const Group& g, const StructureClass& a) {
  StructureClass out;
  for (const auto& m : a) {
    for (const auto& h : g.elements()) out.insert(apply_to_structure(h, m));
  }
  return out;
}

PartialInjection random_injection(Rng& rng, int n, int m) {
  const auto g = rng.permutation(n);
  return PartialInjection(n, std::vector<Element>(g.images().begin(), g.images().begin() + m));
}

Formula random_formula(Rng& rng, const FormulaShape& shape, int depth, std::vector<std::string> scope) {
  auto term = [&]() {
    if (scope.empty() || rng.below(5) == 0) return Term::constant(static_cast<Element>(rng.below(static_cast<std::uint64_t>(shape.universe))));
    return Term::var(scope[rng.below(scope.size())]);
  };
  auto terms = [&](int arity) {
    std::vector<Term> out;
    for (int i = 0; i < arity; ++i) out.push_back(term());
    return out;
  };
  const int leaves = 4;
  const int choice = depth <= 0 ? static_cast<int>(rng.below(leaves)) : static_cast<int>(rng.below(leaves + 6));
  switch (choice) {
    case 0: return rng.coin() ? Formula::truth() : Formula::falsity();
    case 1: return Formula::eq(term(), term());
    case 2:
    case 3: {
      if (choice == 3 && !shape.fixed.empty()) {
        const auto& [name, arity] = shape.fixed[rng.below(shape.fixed.size())];
        return Formula::fix(name, terms(arity));
      }
      if (shape.signature.size() == 0) return Formula::eq(term(), term());
      const auto i = rng.below(shape.signature.size());
      return Formula::rel(shape.signature.symbols()[i], terms(shape.signature.arities()[i]));
    }
    case 4: return Formula::negate(random_formula(rng, shape, depth - 1, scope));
    case 5:
    case 6: {
      std::vector<Formula> parts;
      const int count = rng.between(0, 3);
      for (int i = 0; i < count; ++i) parts.push_back(random_formula(rng, shape, depth - 1, scope));
      return choice == 5 ? Formula::conj(std::move(parts)) : Formula::disj(std::move(parts));
    }
    case 7:
    case 8: {
      const std::string v = shape.pool[rng.below(shape.pool.size())];
      scope.push_back(v);
      Formula body = random_formula(rng, shape, depth - 1, scope);
      return choice == 7 ? Formula::exists(v, std::move(body)) : Formula::forall(v, std::move(body));
    }
    default: {
      if (shape.quantifiers.empty()) return Formula::negate(random_formula(rng, shape, depth - 1, scope));
      const auto& [name, arity] = shape.quantifiers[rng.below(shape.quantifiers.size())];
      std::vector<std::string> vars;
      for (int i = 0; i < arity; ++i) {
        // Distinct names keep the bound tuple meaningful.
        std::string v = shape.pool[(static_cast<std::size_t>(i) + rng.below(shape.pool.size())) % shape.pool.size()];
        while (std::find(vars.begin(), vars.end(), v) != vars.end()) v += "_";
        vars.push_back(v);
      }
      for (const auto& v : vars) scope.push_back(v);
      return Formula::quant(name, vars, random_formula(rng, shape, depth - 1, scope));
    }
  }
}

}  // namespace qw::corpus
