#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qw/kernel/orbits.hpp"
#include "qw/quant/quantifier.hpp"

namespace qw {

struct Limits {
  // Cap on the number of relations any single exhaustive scan may visit.
  std::uint64_t max_enum = std::uint64_t{1} << 20;

  bool enumerable(std::size_t slots) const noexcept {
    return slots < 63 && (std::uint64_t{1} << slots) <= max_enum;
  }
};

// Every k-ary relation over n, in increasing bit order. CapabilityError when
// 2^(n^k) exceeds the limit.
std::vector<Relation> all_relations(int universe, int arity, const Limits& limits = {});

bool is_downward_closed(const Quantifier& q, const Limits& limits = {});

// True iff flipping any single tuple outside s never changes membership.
// Uses an exhaustive membership table when 2^(n^k) fits in the limit and the
// representation's structural description otherwise.
bool supports(const Quantifier& q, const Relation& s, const Limits& limits = {});

// Greedy elimination: start from n^k and drop each tuple (in `order`, default
// index order) whenever the remainder still supports q.
Relation support(const Quantifier& q, const Limits& limits = {});
Relation support(const Quantifier& q, std::span<const std::size_t> order, const Limits& limits = {});

// The tuples whose membership flip can change membership in q, read off the
// representation without enumerating relations. Equals the support.
Relation relevant_tuples(const Quantifier& q);

// {g in S_n : R in q <=> g(R) in q for all R}.
Group automorphisms(const Quantifier& q, const Limits& limits = {});

// Maximal members of a downward closed quantifier. DomainError otherwise.
std::vector<Relation> downward_generators(const Quantifier& q, const Limits& limits = {});

// For every A ⊆ m^k: A in q <=> p(A) in q. DomainError unless q is downward closed.
bool compatible(const Quantifier& q, const PartialInjection& p, const Limits& limits = {});

// A compatible injection that extends to no automorphism, if any.
std::optional<PartialInjection> goodness_violation(const Quantifier& q, const Limits& limits = {});
bool is_good(const Quantifier& q, const Limits& limits = {});

Quantifier to_extensional(const Quantifier& q, const Limits& limits = {});

}  // namespace qw
