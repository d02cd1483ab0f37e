#include "qw/kernel/orbits.hpp"

#include <bit>
#include <string>

#include "qw/error.hpp"

namespace qw {
namespace {

void require_tuple(const Group& g, const Tuple& a) {
  for (Element e : a) {
    if (e < 0 || e >= g.universe()) throw InvalidInput("tuple entry outside group universe");
  }
}

void extend_injections(int n, std::vector<Element>& prefix, std::vector<bool>& used,
                       std::vector<PartialInjection>& out, int target) {
  if (static_cast<int>(prefix.size()) == target) {
    out.emplace_back(n, prefix);
    return;
  }
  for (Element e = 0; e < n; ++e) {
    if (used[static_cast<std::size_t>(e)]) continue;
    used[static_cast<std::size_t>(e)] = true;
    prefix.push_back(e);
    extend_injections(n, prefix, used, out, target);
    prefix.pop_back();
    used[static_cast<std::size_t>(e)] = false;
  }
}

}  // namespace

PartialInjection::PartialInjection(int universe, std::vector<Element> images)
    : n_(Universe{universe}.size()), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) > n_) throw InvalidInput("partial injection domain exceeds universe");
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  for (Element e : images_) {
    if (e < 0 || e >= n_) throw InvalidInput("partial injection image " + std::to_string(e) + " out of range");
    if (seen[static_cast<std::size_t>(e)]) throw InvalidInput("partial injection images are not distinct");
    seen[static_cast<std::size_t>(e)] = true;
  }
}

bool PartialInjection::extended_by(const Permutation& g) const {
  if (g.universe() != n_) return false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (g(static_cast<Element>(i)) != images_[i]) return false;
  }
  return true;
}

Relation PartialInjection::apply(const Relation& r) const {
  if (r.universe() != n_) throw InvalidInput("relation universe differs from injection universe");
  Relation out(n_, r.arity());
  for (const auto& t : r.tuples()) {
    Tuple image(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] >= domain_size()) throw InvalidInput("tuple outside the injection domain");
      image[i] = images_[static_cast<std::size_t>(t[i])];
    }
    out.insert(image);
  }
  return out;
}

std::vector<PartialInjection> all_partial_injections(int n) {
  (void)Universe{n};
  std::vector<PartialInjection> out;
  std::vector<Element> prefix;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int m = 0; m <= n; ++m) extend_injections(n, prefix, used, out, m);
  return out;
}

std::set<Tuple> orbit_of_tuple(const Group& g, const Tuple& a) {
  require_tuple(g, a);
  std::set<Tuple> out;
  for (const auto& x : g.elements()) out.insert(x.apply(a));
  return out;
}

bool orbit_equivalent(const Group& g, const Tuple& a, const Tuple& b) {
  if (a.size() != b.size()) throw InvalidInput("orbit equivalence of tuples of different arity");
  require_tuple(g, a);
  require_tuple(g, b);
  for (const auto& x : g.elements()) {
    bool match = true;
    for (std::size_t i = 0; i < a.size() && match; ++i) match = x(a[i]) == b[i];
    if (match) return true;
  }
  return false;
}

std::set<Relation> orbit_of_relation(const Group& g, const Relation& r) {
  if (g.universe() != r.universe()) throw InvalidInput("group and relation universes differ");
  std::set<Relation> out;
  for (const auto& x : g.elements()) out.insert(RelationAction(x, r.arity())(r));
  return out;
}

std::vector<Permutation> stabilizer(const Group& g, const Tuple& a) {
  require_tuple(g, a);
  std::vector<Permutation> out;
  for (const auto& x : g.elements()) {
    if (x.apply(a) == a) out.push_back(x);
  }
  return out;
}

std::set<Relation> downward_closure(const std::set<Relation>& family) {
  std::set<Relation> out;
  if (family.empty()) return out;
  const Relation& first = *family.begin();
  for (const auto& b : family) {
    if (!b.same_shape(first)) throw InvalidInput("downward closure of relations with mixed shapes");
  }
  for (const auto& b : family) {
    const auto members = b.indices();
    if (members.size() >= 63) throw CapabilityError("downward closure of a relation with 63 or more tuples");
    const std::uint64_t subsets = std::uint64_t{1} << members.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      Relation a(b.universe(), b.arity());
      for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        a.set(members[static_cast<std::size_t>(std::countr_zero(bits))]);
      }
      out.insert(std::move(a));
    }
  }
  return out;
}

std::optional<Permutation> extend_partial_injection(const PartialInjection& p, const Group& g) {
  if (p.universe() != g.universe()) throw InvalidInput("injection and group universes differ");
  for (const auto& x : g.elements()) {
    if (p.extended_by(x)) return x;
  }
  return std::nullopt;
}

}  // namespace qw
