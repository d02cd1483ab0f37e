#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qw/kernel/universe.hpp"

namespace qw {

// A set of k-tuples over {0..n-1}, stored as a bit mask indexed by the
// row-major tuple index. Also used for plain sets of tuples (supports,
// blocks, ...).
class Relation {
 public:
  Relation() : Relation(0, 0) {}
  Relation(int universe, int arity);

  static Relation full(int universe, int arity);
  static Relation from_tuples(int universe, int arity, std::span<const Tuple> tuples);
  static Relation from_indices(int universe, int arity, std::span<const std::size_t> indices);
  // Bit i of `bits` is tuple index i. Requires n^k <= 64.
  static Relation from_bits(int universe, int arity, std::uint64_t bits);

  int universe() const noexcept { return n_; }
  int arity() const noexcept { return k_; }
  // Number of tuple slots, n^k.
  std::size_t slots() const noexcept { return slots_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept;

  bool test(std::size_t index) const noexcept {
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }
  bool contains(const Tuple& t) const;

  void insert(const Tuple& t);
  void erase(const Tuple& t);
  void set(std::size_t index, bool value = true);
  void flip(std::size_t index);

  // Members in row-major (= lexicographic) order.
  std::vector<Tuple> tuples() const;
  std::vector<std::size_t> indices() const;
  // Requires n^k <= 64.
  std::uint64_t to_bits() const;

  bool is_subset_of(const Relation& other) const;
  bool intersects(const Relation& other) const;
  bool same_shape(const Relation& other) const noexcept { return n_ == other.n_ && k_ == other.k_; }

  Relation complement() const;
  Relation& operator|=(const Relation& other);
  Relation& operator&=(const Relation& other);
  Relation& operator^=(const Relation& other);
  Relation& operator-=(const Relation& other);
  friend Relation operator|(Relation a, const Relation& b) { return a |= b; }
  friend Relation operator&(Relation a, const Relation& b) { return a &= b; }
  friend Relation operator^(Relation a, const Relation& b) { return a ^= b; }
  friend Relation operator-(Relation a, const Relation& b) { return a -= b; }

  friend bool operator==(const Relation&, const Relation&) = default;
  friend std::strong_ordering operator<=>(const Relation& a, const Relation& b);

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::size_t hash() const noexcept;

 private:
  void require_shape(const Relation& other) const;
  void trim() noexcept;

  int n_;
  int k_;
  std::size_t slots_;
  std::vector<std::uint64_t> words_;
};

struct RelationHash {
  std::size_t operator()(const Relation& r) const noexcept { return r.hash(); }
};

}  // namespace qw
