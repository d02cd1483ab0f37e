#include "qw/quant/combo.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>

#include "qw/error.hpp"

namespace qw {
namespace {

// Blocks k and l can be merged iff, for every setting of the other
// components, the three vectors other than (+,+) agree.
bool mergeable(const PrincipalComboQuantifier& q, int k, int l) {
  const std::uint64_t bk = std::uint64_t{1} << k;
  const std::uint64_t bl = std::uint64_t{1} << l;
  for (const auto& s : q.signs()) {
    const std::uint64_t base = PrincipalComboQuantifier::mask_of(s) & ~(bk | bl);
    const bool none = q.accepts_mask(base);
    if (q.accepts_mask(base | bk) != none || q.accepts_mask(base | bl) != none) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> find_mergeable(const PrincipalComboQuantifier& q) {
  for (int k = 0; k < q.block_count(); ++k) {
    for (int l = k + 1; l < q.block_count(); ++l) {
      if (mergeable(q, k, l)) return std::pair{k, l};
    }
  }
  return std::nullopt;
}

PrincipalComboQuantifier merge(const PrincipalComboQuantifier& q, int k, int l) {
  std::vector<Relation> blocks = q.blocks();
  blocks[static_cast<std::size_t>(k)] |= blocks[static_cast<std::size_t>(l)];
  blocks.erase(blocks.begin() + l);
  std::vector<SignVector> signs;
  for (auto s : q.signs()) {
    const auto ks = static_cast<std::size_t>(k);
    const auto ls = static_cast<std::size_t>(l);
    s[ks] = (s[ks] == 1 && s[ls] == 1) ? 1 : -1;
    s.erase(s.begin() + l);
    signs.push_back(std::move(s));
  }
  std::sort(signs.begin(), signs.end(), std::greater<>());
  signs.erase(std::unique(signs.begin(), signs.end()), signs.end());
  return PrincipalComboQuantifier(q.universe(), q.dimension(), std::move(blocks), std::move(signs));
}

}  // namespace

SignVector hit_vector(const PrincipalComboQuantifier& q, const Relation& r) {
  return PrincipalComboQuantifier::signs_of(q.hit_mask(r), q.block_count());
}

bool is_minimal(const PrincipalComboQuantifier& q) { return !find_mergeable(q).has_value(); }

PrincipalComboQuantifier minimize_combo(const PrincipalComboQuantifier& q) {
  auto pair = find_mergeable(q);
  if (!pair) return q;
  PrincipalComboQuantifier current = merge(q, pair->first, pair->second);
  while ((pair = find_mergeable(current))) current = merge(current, pair->first, pair->second);
  return current;
}

Group combo_automorphisms(const PrincipalComboQuantifier& q) {
  if (!is_minimal(q)) throw DomainError("combo automorphisms need a minimal combo");
  const int n = q.universe();
  const int blocks = q.block_count();
  std::vector<Permutation> elements;
  for (const auto& g : all_permutations(n)) {
    const RelationAction act(g, q.dimension());
    std::vector<int> p(static_cast<std::size_t>(blocks));
    bool maps_blocks = true;
    for (int k = 0; k < blocks && maps_blocks; ++k) {
      const Relation image = act(q.blocks()[static_cast<std::size_t>(k)]);
      const int target = q.block_of(image.indices().front());
      maps_blocks = image == q.blocks()[static_cast<std::size_t>(target)];
      p[static_cast<std::size_t>(k)] = target;
    }
    if (!maps_blocks) continue;
    // (s∘p⁻¹)(p(k)) = s(k).
    const bool closed = std::all_of(q.signs().begin(), q.signs().end(), [&](const SignVector& s) {
      std::uint64_t moved = 0;
      for (int k = 0; k < blocks; ++k) {
        if (s[static_cast<std::size_t>(k)] == 1) moved |= std::uint64_t{1} << p[static_cast<std::size_t>(k)];
      }
      return q.accepts_mask(moved);
    });
    if (closed) elements.push_back(g);
  }
  return Group::from_elements(n, std::move(elements));
}

}  // namespace qw
