#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qw/kernel/permutation.hpp"
#include "qw/kernel/relation.hpp"

namespace qw {

// Relation symbols with arities, kept in name order.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::map<std::string, int> arities);

  void add(const std::string& name, int arity);
  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const std::vector<int>& arities() const noexcept { return arities_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  std::vector<std::string> symbols_;
  std::vector<int> arities_;
};

class Structure {
 public:
  // Every symbol interpreted by the empty relation.
  Structure(Signature signature, int universe);
  Structure(Signature signature, int universe, std::vector<Relation> relations);

  const Signature& signature() const noexcept { return signature_; }
  int universe() const noexcept { return n_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const Relation& relation(std::size_t i) const { return relations_.at(i); }
  const Relation& relation(const std::string& name) const;
  void set_relation(const std::string& name, Relation r);

  friend bool operator==(const Structure&, const Structure&) = default;
  friend std::strong_ordering operator<=>(const Structure& a, const Structure& b);

 private:
  Signature signature_;
  int n_;
  std::vector<Relation> relations_;
};

using StructureClass = std::set<Structure>;

// g(M): each relation moved by g.
Structure apply_to_structure(const Permutation& g, const Structure& m);

// All structures of one signature over one universe, indexed by the
// concatenation of their relation bit patterns in signature order.
class StructureSpace {
 public:
  StructureSpace(Signature signature, int universe);

  const Signature& signature() const noexcept { return signature_; }
  int universe() const noexcept { return n_; }
  std::size_t bits() const noexcept { return bits_; }
  // Number of structures; CapabilityError when 2^bits does not fit in 62 bits.
  std::uint64_t count() const;
  Structure at(std::uint64_t index) const;
  std::uint64_t index_of(const Structure& m) const;
  StructureClass all(std::uint64_t limit) const;

 private:
  Signature signature_;
  int n_;
  std::size_t bits_ = 0;
};

}  // namespace qw
