#pragma once

#include <memory>
#include <vector>

#include "qw/kernel/permutation.hpp"

namespace qw {

// A permutation group over {0..n-1}, stored fully enumerated. Elements are
// kept sorted, so two groups are equal iff their element lists are.
class Group {
 public:
  // Closure of `generators` together with the identity.
  static Group generate(int n, std::vector<Permutation> generators);
  static Group trivial(int n);
  static Group symmetric(int n);
  // Wraps an element set that is already known to be a group; a small
  // generating set is extracted.
  static Group from_elements(int n, std::vector<Permutation> elements);

  int universe() const noexcept { return n_; }
  const std::vector<Permutation>& generators() const noexcept { return *generators_; }
  const std::vector<Permutation>& elements() const noexcept { return *elements_; }
  std::size_t order() const noexcept { return elements_->size(); }
  bool contains(const Permutation& g) const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.n_ == b.n_ && *a.elements_ == *b.elements_;
  }

 private:
  Group(int n, std::vector<Permutation> generators, std::vector<Permutation> elements);

  int n_;
  std::shared_ptr<const std::vector<Permutation>> generators_;
  std::shared_ptr<const std::vector<Permutation>> elements_;
};

}  // namespace qw
