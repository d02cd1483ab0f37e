#include "qw/kernel/relation.hpp"

#include <bit>
#include <string>

#include "qw/error.hpp"

namespace qw {
namespace {

constexpr std::size_t kMaxSlots = std::size_t{1} << 24;

}  // namespace

Relation::Relation(int universe, int arity) : n_(universe), k_(arity) {
  if (universe < 0 || universe > max_universe()) {
    throw InvalidInput("relation universe " + std::to_string(universe) + " out of range");
  }
  if (arity < 0) throw InvalidInput("negative arity");
  slots_ = power(universe, arity);
  if (slots_ > kMaxSlots) throw InvalidInput("relation too large: n^k exceeds 2^24");
  words_.assign((slots_ + 63) / 64 + (slots_ == 0 ? 1 : 0), 0);
}

Relation Relation::full(int universe, int arity) {
  Relation r(universe, arity);
  for (auto& w : r.words_) w = ~std::uint64_t{0};
  r.trim();
  return r;
}

Relation Relation::from_tuples(int universe, int arity, std::span<const Tuple> tuples) {
  Relation r(universe, arity);
  for (const auto& t : tuples) r.insert(t);
  return r;
}

Relation Relation::from_indices(int universe, int arity, std::span<const std::size_t> indices) {
  Relation r(universe, arity);
  for (std::size_t i : indices) r.set(i);
  return r;
}

Relation Relation::from_bits(int universe, int arity, std::uint64_t bits) {
  Relation r(universe, arity);
  if (r.slots_ > 64) throw InvalidInput("from_bits requires n^k <= 64");
  r.words_[0] = bits;
  r.trim();
  return r;
}

void Relation::trim() noexcept {
  const std::size_t rem = slots_ & 63;
  if (slots_ == 0) {
    words_[0] = 0;
  } else if (rem != 0) {
    words_.back() &= (std::uint64_t{1} << rem) - 1;
  }
}

std::size_t Relation::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Relation::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool Relation::contains(const Tuple& t) const {
  if (static_cast<int>(t.size()) != k_) throw InvalidInput("tuple arity mismatch");
  return test(tuple_index(t, n_));
}

void Relation::insert(const Tuple& t) {
  if (static_cast<int>(t.size()) != k_) throw InvalidInput("tuple arity mismatch");
  set(tuple_index(t, n_));
}

void Relation::erase(const Tuple& t) {
  if (static_cast<int>(t.size()) != k_) throw InvalidInput("tuple arity mismatch");
  set(tuple_index(t, n_), false);
}

void Relation::set(std::size_t index, bool value) {
  if (index >= slots_) throw InvalidInput("tuple index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (index & 63);
  if (value) {
    words_[index >> 6] |= bit;
  } else {
    words_[index >> 6] &= ~bit;
  }
}

void Relation::flip(std::size_t index) {
  if (index >= slots_) throw InvalidInput("tuple index out of range");
  words_[index >> 6] ^= std::uint64_t{1} << (index & 63);
}

std::vector<std::size_t> Relation::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Tuple> Relation::tuples() const {
  std::vector<Tuple> out;
  for (std::size_t i : indices()) out.push_back(index_tuple(i, n_, k_));
  return out;
}

std::uint64_t Relation::to_bits() const {
  if (slots_ > 64) throw InvalidInput("to_bits requires n^k <= 64");
  return words_[0];
}

void Relation::require_shape(const Relation& other) const {
  if (!same_shape(other)) throw InvalidInput("relations of different universe or arity");
}

bool Relation::is_subset_of(const Relation& other) const {
  require_shape(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool Relation::intersects(const Relation& other) const {
  require_shape(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

Relation Relation::complement() const {
  Relation r = *this;
  for (auto& w : r.words_) w = ~w;
  r.trim();
  return r;
}

Relation& Relation::operator|=(const Relation& other) {
  require_shape(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Relation& Relation::operator&=(const Relation& other) {
  require_shape(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Relation& Relation::operator^=(const Relation& other) {
  require_shape(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

Relation& Relation::operator-=(const Relation& other) {
  require_shape(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const Relation& a, const Relation& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  return a.words_ <=> b.words_;
}

std::size_t Relation::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(n_) * 1000003u + static_cast<std::size_t>(k_);
  for (auto w : words_) h = (h ^ static_cast<std::size_t>(w)) * 0x100000001b3ull + (h >> 29);
  return h;
}

}  // namespace qw
