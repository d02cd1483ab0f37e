#include "qw/logic/invariance.hpp"

#include <algorithm>

#include "qw/error.hpp"
#include "qw/kernel/orbits.hpp"

namespace qw {
namespace {

bool maps_onto(const Permutation& g, const Structure& m, const Structure& n) {
  for (std::size_t i = 0; i < m.relations().size(); ++i) {
    if (apply_to_relation(g, m.relation(i)) != n.relation(i)) return false;
  }
  return true;
}

// Backtracking over images of 0..n-1 (anchor entries first). After each
// assignment every tuple over the assigned elements that involves the new
// element must agree between m and its image in n.
class IsoSearch {
 public:
  IsoSearch(const Structure& m, const Structure& n) : m_(m), n_(n), size_(m.universe()) {
    image_.assign(static_cast<std::size_t>(size_), -1);
    used_.assign(static_cast<std::size_t>(size_), false);
  }

  bool assign(Element x, Element y) {
    auto& slot = image_[static_cast<std::size_t>(x)];
    if (slot != -1) return slot == y;
    if (used_[static_cast<std::size_t>(y)]) return false;
    slot = y;
    used_[static_cast<std::size_t>(y)] = true;
    order_.push_back(x);
    if (consistent(x)) return true;
    unassign();
    return false;
  }

  void unassign() {
    const Element x = order_.back();
    order_.pop_back();
    used_[static_cast<std::size_t>(image_[static_cast<std::size_t>(x)])] = false;
    image_[static_cast<std::size_t>(x)] = -1;
  }

  bool complete() {
    Element x = 0;
    while (x < size_ && image_[static_cast<std::size_t>(x)] != -1) ++x;
    if (x == size_) return true;
    for (Element y = 0; y < size_; ++y) {
      if (used_[static_cast<std::size_t>(y)] || !assign(x, y)) continue;
      if (complete()) return true;
      unassign();
    }
    return false;
  }

  Permutation result() const { return Permutation(image_); }

 private:
  bool consistent(Element x) const {
    for (std::size_t r = 0; r < m_.relations().size(); ++r) {
      const Relation& src = m_.relation(r);
      const Relation& dst = n_.relation(r);
      const int k = src.arity();
      const std::size_t assigned = order_.size();
      // Tuples over the assigned elements that contain x.
      std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
      while (true) {
        bool has_x = false;
        std::size_t from = 0;
        std::size_t to = 0;
        for (auto p : pick) {
          const Element e = order_[p];
          has_x = has_x || e == x;
          from = from * static_cast<std::size_t>(size_) + static_cast<std::size_t>(e);
          to = to * static_cast<std::size_t>(size_) + static_cast<std::size_t>(image_[static_cast<std::size_t>(e)]);
        }
        if (has_x && src.test(from) != dst.test(to)) return false;
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == assigned) pick[i++] = 0;
        if (i == pick.size()) break;
      }
    }
    return true;
  }

  const Structure& m_;
  const Structure& n_;
  int size_;
  std::vector<Element> image_;
  std::vector<bool> used_;
  std::vector<Element> order_;
};

Formula variable_atom(const std::string& symbol, const Tuple& t, bool fixed) {
  std::vector<Term> args;
  for (Element e : t) args.push_back(Term::var("x" + std::to_string(e)));
  return fixed ? Formula::fix(symbol, std::move(args)) : Formula::rel(symbol, std::move(args));
}

}  // namespace

std::optional<Permutation> find_isomorphism(const Structure& m, const Tuple& a, const Structure& n, const Tuple& b,
                                            const Group* group) {
  if (m.signature() != n.signature() || m.universe() != n.universe()) {
    throw InvalidInput("structures differ in signature or universe");
  }
  if (a.size() != b.size()) throw InvalidInput("distinguished tuples differ in length");
  const Universe u{m.universe()};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!u.contains(a[i]) || !u.contains(b[i])) throw InvalidInput("distinguished tuple entry outside the universe");
  }
  if (group != nullptr) {
    if (group->universe() != m.universe()) throw InvalidInput("group universe differs from structures");
    for (const auto& g : group->elements()) {
      if (g.apply(a) == b && maps_onto(g, m, n)) return g;
    }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < m.relations().size(); ++i) {
    if (m.relation(i).count() != n.relation(i).count()) return std::nullopt;
  }
  IsoSearch search(m, n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!search.assign(a[i], b[i])) return std::nullopt;
  }
  if (!search.complete()) return std::nullopt;
  return search.result();
}

bool is_invariant(const Group& g, const StructureClass& a) {
  for (const auto& m : a) {
    for (const auto& h : g.generators()) {
      if (a.count(apply_to_structure(h, m)) == 0) return false;
    }
  }
  return true;
}

StructureClass vaught_transform(const Group& g, const StructureSpace& space, const StructureClass& a,
                                const Tuple& anchor, const Limits& limits) {
  if (g.universe() != space.universe()) throw InvalidInput("group universe differs from structure space");
  const Universe u{space.universe()};
  for (std::size_t i = 0; i < anchor.size(); ++i) {
    if (!u.contains(anchor[i])) throw InvalidInput("anchor entry outside the universe");
    for (std::size_t j = 0; j < i; ++j) {
      if (anchor[i] == anchor[j]) throw InvalidInput("anchor tuple must be injective");
    }
  }
  std::vector<Permutation> qualifying;
  for (const auto& h : g.elements()) {
    bool ok = true;
    for (std::size_t i = 0; i < anchor.size() && ok; ++i) ok = h(anchor[i]) == static_cast<Element>(i);
    if (ok) qualifying.push_back(h);
  }
  for (const auto& m : a) {
    if (m.signature() != space.signature() || m.universe() != space.universe()) {
      throw InvalidInput("class member outside the structure space");
    }
  }
  const std::uint64_t total = space.count();
  if (total > limits.max_enum) throw CapabilityError("structure space exceeds the enumeration limit");
  StructureClass out;
  for (std::uint64_t i = 0; i < total; ++i) {
    Structure m = space.at(i);
    const bool all = std::all_of(qualifying.begin(), qualifying.end(),
                                 [&](const Permutation& h) { return a.count(apply_to_structure(h, m)) != 0; });
    if (all) out.insert(std::move(m));
  }
  return out;
}

Environment InvariantFormula::environment() const {
  Environment env;
  env.fixed.emplace(orbit_symbol, orbit);
  return env;
}

InvariantFormula invariant_class_formula(const Group& g, const StructureSpace& space, const StructureClass& a,
                                         const Limits& limits) {
  if (g.universe() != space.universe()) throw InvalidInput("group universe differs from structure space");
  for (const auto& m : a) {
    if (m.signature() != space.signature() || m.universe() != space.universe()) {
      throw InvalidInput("class member outside the structure space");
    }
  }
  if (!is_invariant(g, a)) throw DomainError("class is not invariant under the group");
  const int n = space.universe();
  Tuple identity(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i)] = i;
  InvariantFormula out{Formula::truth(), "O", Relation(n, n)};
  for (const auto& t : orbit_of_tuple(g, identity)) out.orbit.insert(t);
  const std::uint64_t total = space.count();
  if (total > limits.max_enum) throw CapabilityError("structure space exceeds the enumeration limit");
  if (a.empty()) {
    out.sentence = Formula::falsity();
    return out;
  }
  if (a.size() == total) return out;

  std::vector<std::string> xs;
  for (int i = 0; i < n; ++i) xs.push_back("x" + std::to_string(i));
  StructureClass covered;
  std::vector<Formula> disjuncts;
  for (const auto& m : a) {
    if (covered.count(m) != 0) continue;
    for (const auto& h : g.elements()) covered.insert(apply_to_structure(h, m));
    // N satisfies this disjunct iff N = h(M) for the h with h(i) = x_i.
    std::vector<Formula> parts;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) parts.push_back(Formula::negate(Formula::eq(Term::var(xs[i]), Term::var(xs[j]))));
    }
    parts.push_back(variable_atom(out.orbit_symbol, identity, true));
    for (std::size_t r = 0; r < m.relations().size(); ++r) {
      const Relation& rel = m.relation(r);
      for (std::size_t idx = 0; idx < rel.slots(); ++idx) {
        Formula atom = variable_atom(space.signature().symbols()[r], index_tuple(idx, n, rel.arity()), false);
        parts.push_back(rel.test(idx) ? std::move(atom) : Formula::negate(std::move(atom)));
      }
    }
    Formula body = Formula::conj(std::move(parts));
    for (int i = n - 1; i >= 0; --i) body = Formula::exists(xs[static_cast<std::size_t>(i)], std::move(body));
    disjuncts.push_back(std::move(body));
  }
  out.sentence = Formula::disj(std::move(disjuncts));
  return out;
}

}  // namespace qw
