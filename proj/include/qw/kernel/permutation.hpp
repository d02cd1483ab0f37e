#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "qw/kernel/relation.hpp"
#include "qw/kernel/universe.hpp"

namespace qw {

// A bijection of {0..n-1}, stored as its image array.
class Permutation {
 public:
  explicit Permutation(std::vector<Element> images);
  static Permutation identity(int n);

  int universe() const noexcept { return static_cast<int>(images_.size()); }
  Element operator()(Element e) const { return images_[static_cast<std::size_t>(e)]; }
  const std::vector<Element>& images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  Permutation inverse() const;
  Tuple apply(const Tuple& t) const;

  // (g * h)(x) = g(h(x)).
  friend Permutation operator*(const Permutation& g, const Permutation& h);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Element> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Element> images_;
};

// { (g(t_0),...,g(t_{k-1})) : t in R }.
Relation apply_to_relation(const Permutation& g, const Relation& r);

// Precomputed action of a permutation on tuple indices of one arity; cheap to
// apply repeatedly.
class RelationAction {
 public:
  RelationAction(const Permutation& g, int arity);

  std::size_t image_index(std::size_t index) const { return map_[index]; }
  Relation operator()(const Relation& r) const;

 private:
  int n_;
  int k_;
  std::vector<std::uint32_t> map_;
};

// All n! permutations in lexicographic order of image arrays.
std::vector<Permutation> all_permutations(int n);

}  // namespace qw
