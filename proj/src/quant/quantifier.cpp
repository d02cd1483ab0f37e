#include "qw/quant/quantifier.hpp"

#include <algorithm>
#include <string>

#include "qw/error.hpp"

namespace qw {
namespace {

void require_shape(const Relation& r, int n, int k, const char* what) {
  if (r.universe() != n || r.arity() != k) {
    throw InvalidInput(std::string(what) + ": relation has shape (" + std::to_string(r.universe()) + "," +
                       std::to_string(r.arity()) + "), expected (" + std::to_string(n) + "," +
                       std::to_string(k) + ")");
  }
}

Relation chain(int n, int j) {
  Relation c(n, 2);
  c.insert({0, 0});
  for (int i = 0; i < j; ++i) c.insert({i, i + 1});
  return c;
}

}  // namespace

std::string_view kind_name(QuantifierKind kind) {
  switch (kind) {
    case QuantifierKind::extensional: return "extensional";
    case QuantifierKind::clopen: return "clopen";
    case QuantifierKind::principal: return "principal";
    case QuantifierKind::combo: return "combo";
    case QuantifierKind::chain_group: return "chain_group";
    case QuantifierKind::downward_generated: return "downward_generated";
  }
  return "unknown";
}

QuantifierKind kind_from_name(std::string_view name) {
  for (auto kind : {QuantifierKind::extensional, QuantifierKind::clopen, QuantifierKind::principal,
                    QuantifierKind::combo, QuantifierKind::chain_group,
                    QuantifierKind::downward_generated}) {
    if (kind_name(kind) == name) return kind;
  }
  throw InvalidInput("unknown quantifier kind '" + std::string(name) + "'");
}

ExtensionalQuantifier::ExtensionalQuantifier(int universe, int arity, std::set<Relation> members)
    : n_(Universe{universe}.size()), k_(arity), members_(std::move(members)) {
  if (arity < 0) throw InvalidInput("negative arity");
  for (const auto& r : members_) require_shape(r, n_, k_, "extensional quantifier member");
}

ClopenQuantifier::ClopenQuantifier(int universe, int arity, int bound, std::set<Relation> traces)
    : n_(Universe{universe}.size()), k_(arity), t_(bound), traces_(std::move(traces)) {
  if (arity < 0) throw InvalidInput("negative arity");
  if (bound < 0 || bound > universe) throw InvalidInput("clopen bound must lie in 0..n");
  for (const auto& r : traces_) require_shape(r, t_, k_, "clopen trace");
  const std::size_t slots = power(t_, k_);
  window_.resize(slots);
  for (std::size_t i = 0; i < slots; ++i) window_[i] = tuple_index(index_tuple(i, t_, k_), n_);
}

Relation ClopenQuantifier::trace(const Relation& r) const {
  require_shape(r, n_, k_, "clopen trace");
  Relation out(t_, k_);
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (r.test(window_[i])) out.set(i);
  }
  return out;
}

Relation ClopenQuantifier::lift(const Relation& trace) const {
  require_shape(trace, t_, k_, "clopen lift");
  Relation out(n_, k_);
  for (std::size_t i : trace.indices()) out.set(window_[i]);
  return out;
}

Relation ClopenQuantifier::window() const { return lift(Relation::full(t_, k_)); }

PrincipalComboQuantifier::PrincipalComboQuantifier(int universe, int dimension,
                                                   std::vector<Relation> blocks,
                                                   std::vector<SignVector> signs)
    : n_(Universe{universe}.size()), d_(dimension), blocks_(std::move(blocks)), signs_(std::move(signs)) {
  if (dimension < 1) throw InvalidInput("combo dimension must be at least 1");
  if (blocks_.empty()) throw InvalidInput("combo needs at least one block");
  if (blocks_.size() > 62) throw InvalidInput("combo supports at most 62 blocks");
  const std::size_t slots = power(n_, d_);
  block_of_.assign(slots, -1);
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    require_shape(blocks_[k], n_, d_, "combo block");
    if (blocks_[k].empty()) throw InvalidInput("combo blocks must be nonempty");
    for (std::size_t idx : blocks_[k].indices()) {
      if (block_of_[idx] != -1) throw InvalidInput("combo blocks must be pairwise disjoint");
      block_of_[idx] = static_cast<int>(k);
    }
  }
  if (std::find(block_of_.begin(), block_of_.end(), -1) != block_of_.end()) {
    throw InvalidInput("combo blocks must cover n^d");
  }
  for (const auto& s : signs_) {
    if (s.size() != blocks_.size()) throw InvalidInput("sign vector length differs from block count");
    for (int v : s) {
      if (v != 1 && v != -1) throw InvalidInput("sign vector entries must be +1 or -1");
    }
    accepted_.push_back(mask_of(s));
  }
  std::sort(accepted_.begin(), accepted_.end());
  if (std::adjacent_find(accepted_.begin(), accepted_.end()) != accepted_.end()) {
    throw InvalidInput("sign vectors must be pairwise distinct");
  }
}

std::uint64_t PrincipalComboQuantifier::hit_mask(const Relation& r) const {
  require_shape(r, n_, d_, "combo membership");
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (blocks_[k].is_subset_of(r)) mask |= std::uint64_t{1} << k;
  }
  return mask;
}

bool PrincipalComboQuantifier::accepts_mask(std::uint64_t mask) const {
  return std::binary_search(accepted_.begin(), accepted_.end(), mask);
}

std::uint64_t PrincipalComboQuantifier::mask_of(const SignVector& s) {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == 1) mask |= std::uint64_t{1} << k;
  }
  return mask;
}

SignVector PrincipalComboQuantifier::signs_of(std::uint64_t mask, int blocks) {
  SignVector s(static_cast<std::size_t>(blocks));
  for (int k = 0; k < blocks; ++k) s[static_cast<std::size_t>(k)] = ((mask >> k) & 1u) ? 1 : -1;
  return s;
}

ChainGroupQuantifier::ChainGroupQuantifier(Group group) : group_(std::move(group)) {
  const int n = group_.universe();
  const Relation top = chain(n, n - 1);
  std::set<Relation> images;
  for (const auto& g : group_.elements()) images.insert(apply_to_relation(g, top));
  images_.assign(images.begin(), images.end());
}

bool ChainGroupQuantifier::contains(const Relation& r) const {
  require_shape(r, universe(), 2, "chain quantifier membership");
  return std::any_of(images_.begin(), images_.end(), [&](const Relation& c) { return r.is_subset_of(c); });
}

DownwardGeneratedQuantifier::DownwardGeneratedQuantifier(int universe, int arity,
                                                         std::vector<Relation> generators)
    : n_(Universe{universe}.size()), k_(arity), generators_(std::move(generators)) {
  if (arity < 0) throw InvalidInput("negative arity");
  for (const auto& r : generators_) require_shape(r, n_, k_, "downward generator");
  maximal_ = maximal_elements(generators_);
}

bool DownwardGeneratedQuantifier::contains(const Relation& r) const {
  require_shape(r, n_, k_, "downward-generated membership");
  return std::any_of(maximal_.begin(), maximal_.end(), [&](const Relation& b) { return r.is_subset_of(b); });
}

int Quantifier::universe() const {
  return std::visit([](const auto& q) { return q.universe(); }, rep_);
}

int Quantifier::arity() const {
  return std::visit([](const auto& q) { return q.arity(); }, rep_);
}

bool Quantifier::contains(const Relation& r) const {
  return std::visit(
      [&](const auto& q) {
        require_shape(r, q.universe(), q.arity(), "quantifier membership");
        return q.contains(r);
      },
      rep_);
}

Quantifier nonempty_quantifier(int universe, int arity) {
  const std::size_t slots = power(universe, arity);
  if (slots > 20) throw CapabilityError("nonempty quantifier is enumerated; n^k must be at most 20");
  std::set<Relation> members;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << slots); ++bits) {
    members.insert(Relation::from_bits(universe, arity, bits));
  }
  return ExtensionalQuantifier(universe, arity, std::move(members));
}

Quantifier all_relations_quantifier(int universe, int arity) {
  return PrincipalQuantifier(Relation(Universe{universe}.size(), arity), PrincipalMode::superset);
}

std::vector<Relation> maximal_elements(std::vector<Relation> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::stable_sort(family.begin(), family.end(),
                   [](const Relation& a, const Relation& b) { return a.count() > b.count(); });
  std::vector<Relation> kept;
  for (auto& r : family) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](const Relation& b) { return r.is_subset_of(b); });
    if (!dominated) kept.push_back(std::move(r));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace qw
