#pragma once

#include <optional>
#include <set>
#include <vector>

#include "qw/kernel/group.hpp"

namespace qw {

// A finite injection p : {0..m-1} -> {0..n-1}, p(i) = images[i].
class PartialInjection {
 public:
  PartialInjection(int universe, std::vector<Element> images);

  int universe() const noexcept { return n_; }
  int domain_size() const noexcept { return static_cast<int>(images_.size()); }
  Element operator()(Element i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<Element>& images() const noexcept { return images_; }
  bool extended_by(const Permutation& g) const;

  // Image of a relation whose tuples all lie in m^k.
  Relation apply(const Relation& r) const;

 private:
  int n_;
  std::vector<Element> images_;
};

// All injections m -> n for every m in 0..n, by increasing m.
std::vector<PartialInjection> all_partial_injections(int n);

std::set<Tuple> orbit_of_tuple(const Group& g, const Tuple& a);
bool orbit_equivalent(const Group& g, const Tuple& a, const Tuple& b);
std::set<Relation> orbit_of_relation(const Group& g, const Relation& r);
std::vector<Permutation> stabilizer(const Group& g, const Tuple& a);

// { A : A subset of some B in family }.
std::set<Relation> downward_closure(const std::set<Relation>& family);

// First element of g (in sorted order) agreeing with p on its domain.
std::optional<Permutation> extend_partial_injection(const PartialInjection& p, const Group& g);

}  // namespace qw
