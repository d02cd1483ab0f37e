#pragma once

#include <cstdint>
#include <set>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "qw/kernel/group.hpp"
#include "qw/kernel/relation.hpp"

namespace qw {

enum class QuantifierKind { extensional, clopen, principal, combo, chain_group, downward_generated };

std::string_view kind_name(QuantifierKind kind);
QuantifierKind kind_from_name(std::string_view name);

// An explicit finite family of relations.
class ExtensionalQuantifier {
 public:
  ExtensionalQuantifier(int universe, int arity, std::set<Relation> members);

  int universe() const noexcept { return n_; }
  int arity() const noexcept { return k_; }
  const std::set<Relation>& members() const noexcept { return members_; }
  bool contains(const Relation& r) const { return members_.count(r) != 0; }

 private:
  int n_;
  int k_;
  std::set<Relation> members_;
};

// Membership decided by the trace R ∩ {0..t-1}^k. Traces are stored as
// relations over the universe {0..t-1}.
class ClopenQuantifier {
 public:
  ClopenQuantifier(int universe, int arity, int bound, std::set<Relation> traces);

  int universe() const noexcept { return n_; }
  int arity() const noexcept { return k_; }
  int bound() const noexcept { return t_; }
  const std::set<Relation>& traces() const noexcept { return traces_; }

  Relation trace(const Relation& r) const;
  // Embeds a trace into n^k.
  Relation lift(const Relation& trace) const;
  // {0..t-1}^k as a relation over n.
  Relation window() const;

  bool contains(const Relation& r) const { return traces_.count(trace(r)) != 0; }

 private:
  int n_;
  int k_;
  int t_;
  std::set<Relation> traces_;
  std::vector<std::size_t> window_;  // n-index of each trace index
};

enum class PrincipalMode { superset, subset };

// Q_A = {X : A ⊆ X} (superset) or Q^A = {X : X ⊆ A} (subset).
class PrincipalQuantifier {
 public:
  PrincipalQuantifier(Relation base, PrincipalMode mode) : base_(std::move(base)), mode_(mode) {}

  int universe() const noexcept { return base_.universe(); }
  int arity() const noexcept { return base_.arity(); }
  const Relation& base() const noexcept { return base_; }
  PrincipalMode mode() const noexcept { return mode_; }
  bool contains(const Relation& r) const {
    return mode_ == PrincipalMode::superset ? base_.is_subset_of(r) : r.is_subset_of(base_);
  }

 private:
  Relation base_;
  PrincipalMode mode_;
};

// Entries are +1 or -1.
using SignVector = std::vector<int>;

// Union over sign vectors s_i of the intersections of Q_{A_k} (s_i(k) = +1)
// and its complement (s_i(k) = -1), for a partition A_0..A_{N-1} of n^d.
class PrincipalComboQuantifier {
 public:
  PrincipalComboQuantifier(int universe, int dimension, std::vector<Relation> blocks,
                           std::vector<SignVector> signs);

  int universe() const noexcept { return n_; }
  int arity() const noexcept { return d_; }
  int dimension() const noexcept { return d_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::vector<Relation>& blocks() const noexcept { return blocks_; }
  const std::vector<SignVector>& signs() const noexcept { return signs_; }
  int block_of(std::size_t tuple_index) const { return block_of_[tuple_index]; }

  // Bit k set iff A_k ⊆ r.
  std::uint64_t hit_mask(const Relation& r) const;
  bool accepts_mask(std::uint64_t mask) const;
  bool contains(const Relation& r) const { return accepts_mask(hit_mask(r)); }

  static std::uint64_t mask_of(const SignVector& s);
  static SignVector signs_of(std::uint64_t mask, int blocks);

 private:
  int n_;
  int d_;
  std::vector<Relation> blocks_;
  std::vector<SignVector> signs_;
  std::vector<int> block_of_;
  std::vector<std::uint64_t> accepted_;  // sorted masks
};

// Downward closure of the G-orbits of the chains
// C_j = {(0,0)} ∪ {(i,i+1) : i < j}, j < n.
class ChainGroupQuantifier {
 public:
  explicit ChainGroupQuantifier(Group group);

  int universe() const noexcept { return group_.universe(); }
  int arity() const noexcept { return 2; }
  const Group& group() const noexcept { return group_; }
  // Distinct images g(C_{n-1}), sorted. Every member of Q lies below one.
  const std::vector<Relation>& maximal_chains() const noexcept { return images_; }
  bool contains(const Relation& r) const;

 private:
  Group group_;
  std::vector<Relation> images_;
};

// {A : A ⊆ B for some generator B}.
class DownwardGeneratedQuantifier {
 public:
  DownwardGeneratedQuantifier(int universe, int arity, std::vector<Relation> generators);

  int universe() const noexcept { return n_; }
  int arity() const noexcept { return k_; }
  const std::vector<Relation>& generators() const noexcept { return generators_; }
  // The maximal generators, sorted.
  const std::vector<Relation>& maximal() const noexcept { return maximal_; }
  bool contains(const Relation& r) const;

 private:
  int n_;
  int k_;
  std::vector<Relation> generators_;
  std::vector<Relation> maximal_;
};

// Value type over the representations above with a single membership
// interface.
class Quantifier {
 public:
  using Representation = std::variant<ExtensionalQuantifier, ClopenQuantifier, PrincipalQuantifier,
                                      PrincipalComboQuantifier, ChainGroupQuantifier,
                                      DownwardGeneratedQuantifier>;

  template <class T>
    requires std::is_constructible_v<Representation, T&&>
  Quantifier(T&& rep) : rep_(std::forward<T>(rep)) {}  // NOLINT(google-explicit-constructor)

  int universe() const;
  int arity() const;
  QuantifierKind kind() const noexcept { return static_cast<QuantifierKind>(rep_.index()); }
  const Representation& representation() const noexcept { return rep_; }
  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&rep_);
  }

  // Throws InvalidInput when r does not have the quantifier's (n, k).
  bool contains(const Relation& r) const;

 private:
  Representation rep_;
};

// The quantifier of all nonempty k-ary relations over n.
Quantifier nonempty_quantifier(int universe, int arity);
// The quantifier of all k-ary relations over n.
Quantifier all_relations_quantifier(int universe, int arity);

// Maximal members of a family (deduplicated, sorted).
std::vector<Relation> maximal_elements(std::vector<Relation> family);

}  // namespace qw
