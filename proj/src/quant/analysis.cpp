#include "qw/quant/analysis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "qw/error.hpp"

namespace qw {
namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

void require_enumerable(std::size_t slots, const Limits& limits, const char* what) {
  if (!limits.enumerable(slots)) {
    throw CapabilityError(std::string(what) + ": 2^" + std::to_string(slots) +
                          " relations exceed the enumeration limit " + std::to_string(limits.max_enum));
  }
}

// Bit m is set iff the relation with bit pattern m is a member.
std::vector<std::uint64_t> membership_table(const Quantifier& q) {
  const int n = q.universe();
  const int k = q.arity();
  const std::size_t slots = power(n, k);
  const std::uint64_t total = std::uint64_t{1} << slots;
  std::vector<std::uint64_t> table((total + 63) / 64, 0);
  if (const auto* ext = q.get_if<ExtensionalQuantifier>()) {
    for (const auto& r : ext->members()) {
      const std::uint64_t m = r.to_bits();
      table[m >> 6] |= std::uint64_t{1} << (m & 63);
    }
    return table;
  }
  for (std::uint64_t m = 0; m < total; ++m) {
    if (q.contains(Relation::from_bits(n, k, m))) table[m >> 6] |= std::uint64_t{1} << (m & 63);
  }
  return table;
}

// Membership is unchanged by flipping bit a of every index.
bool flip_invariant(const std::vector<std::uint64_t>& table, std::size_t slots, std::size_t a) {
  static constexpr std::uint64_t kLow[6] = {0x5555555555555555ull, 0x3333333333333333ull,
                                            0x0F0F0F0F0F0F0F0Full, 0x00FF00FF00FF00FFull,
                                            0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};
  if (a < 6) {
    const unsigned shift = 1u << a;
    std::uint64_t valid = ~std::uint64_t{0};
    if (slots < 6) valid = (std::uint64_t{1} << (std::uint64_t{1} << slots)) - 1;
    for (auto w : table) {
      if ((((w >> shift) ^ w) & kLow[a] & valid) != 0) return false;
    }
    return true;
  }
  const std::size_t stride = std::size_t{1} << (a - 6);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if ((i & stride) == 0 && table[i] != table[i | stride]) return false;
  }
  return true;
}

bool supports_by_table(const std::vector<std::uint64_t>& table, const Relation& s) {
  for (std::size_t a = 0; a < s.slots(); ++a) {
    if (!s.test(a) && !flip_invariant(table, s.slots(), a)) return false;
  }
  return true;
}

void require_same_shape(const Quantifier& q, const Relation& s) {
  if (s.universe() != q.universe() || s.arity() != q.arity()) {
    throw InvalidInput("tuple set shape differs from quantifier shape");
  }
}

std::vector<Relation> restricted(const std::vector<Relation>& family, const Relation& window) {
  std::vector<Relation> out;
  out.reserve(family.size());
  for (const auto& b : family) out.push_back(b & window);
  return out;
}

bool dominated(const std::vector<Relation>& lower, const std::vector<Relation>& upper) {
  return std::all_of(lower.begin(), lower.end(), [&](const Relation& a) {
    return std::any_of(upper.begin(), upper.end(), [&](const Relation& b) { return a.is_subset_of(b); });
  });
}

// n-indices of the tuples in m^k, and of their images under p.
struct InjectionWindow {
  std::vector<std::size_t> source;
  std::vector<std::size_t> image;
};

InjectionWindow injection_window(int n, int k, const PartialInjection& p) {
  InjectionWindow w;
  const int m = p.domain_size();
  const std::size_t count = power(m, k);
  for (std::size_t i = 0; i < count; ++i) {
    Tuple t = index_tuple(i, m, k);
    w.source.push_back(tuple_index(t, n));
    for (auto& e : t) e = p(e);
    w.image.push_back(tuple_index(t, n));
  }
  return w;
}

Relation window_relation(int n, int k, const InjectionWindow& w) {
  return Relation::from_indices(n, k, w.source);
}

// {u in m^k : p(u) in b}, as a relation over n.
Relation pullback(const Relation& b, const InjectionWindow& w) {
  Relation out(b.universe(), b.arity());
  for (std::size_t i = 0; i < w.source.size(); ++i) {
    if (b.test(w.image[i])) out.set(w.source[i]);
  }
  return out;
}

// Downward closed q: A in q <=> A below some generator. Compatibility of p
// then compares the downward closures of the generators cut to m^k and of
// their pullbacks along p.
bool compatible_with(const std::vector<Relation>& cut, const std::vector<Relation>& generators,
                     const InjectionWindow& w) {
  std::vector<Relation> pulled;
  pulled.reserve(generators.size());
  for (const auto& b : generators) pulled.push_back(pullback(b, w));
  pulled = maximal_elements(std::move(pulled));
  return dominated(cut, pulled) && dominated(pulled, cut);
}

Group pattern_automorphisms(const Quantifier& q, const Limits& limits) {
  const int n = q.universe();
  const int k = q.arity();
  const Relation s = relevant_tuples(q);
  std::vector<Permutation> elements;
  for (const auto& g : all_permutations(n)) {
    const RelationAction act(g, k);
    // Both R ∈ q and g(R) ∈ q only depend on R ∩ (S ∪ g⁻¹S).
    std::vector<std::size_t> u;
    for (std::size_t i = 0; i < s.slots(); ++i) {
      if (s.test(i) || s.test(act.image_index(i))) u.push_back(i);
    }
    require_enumerable(u.size(), limits, "automorphism pattern scan");
    bool invariant = true;
    for (std::uint64_t mask = 0; invariant && mask < (std::uint64_t{1} << u.size()); ++mask) {
      Relation r(n, k);
      Relation image(n, k);
      for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        const std::size_t idx = u[static_cast<std::size_t>(std::countr_zero(bits))];
        r.set(idx);
        image.set(act.image_index(idx));
      }
      invariant = q.contains(r) == q.contains(image);
    }
    if (invariant) elements.push_back(g);
  }
  return Group::from_elements(n, std::move(elements));
}

}  // namespace

std::vector<Relation> all_relations(int universe, int arity, const Limits& limits) {
  const std::size_t slots = power(universe, arity);
  require_enumerable(slots, limits, "relation enumeration");
  std::vector<Relation> out;
  out.reserve(std::size_t{1} << slots);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots); ++m) {
    out.push_back(Relation::from_bits(universe, arity, m));
  }
  return out;
}

bool is_downward_closed(const Quantifier& q, const Limits&) {
  return std::visit(
      Overload{
          [](const ExtensionalQuantifier& e) {
            for (const auto& r : e.members()) {
              for (std::size_t i : r.indices()) {
                Relation smaller = r;
                smaller.set(i, false);
                if (!e.contains(smaller)) return false;
              }
            }
            return true;
          },
          [](const ClopenQuantifier& c) {
            for (const auto& t : c.traces()) {
              for (std::size_t i : t.indices()) {
                Relation smaller = t;
                smaller.set(i, false);
                if (c.traces().count(smaller) == 0) return false;
              }
            }
            return true;
          },
          [](const PrincipalQuantifier& p) { return p.mode() == PrincipalMode::subset || p.base().empty(); },
          [](const PrincipalComboQuantifier& c) {
            // Deleting a tuple can only turn a +1 component into -1.
            for (const auto& s : c.signs()) {
              const std::uint64_t h = PrincipalComboQuantifier::mask_of(s);
              for (std::uint64_t bits = h; bits != 0; bits &= bits - 1) {
                if (!c.accepts_mask(h & ~(bits & -bits))) return false;
              }
            }
            return true;
          },
          [](const ChainGroupQuantifier&) { return true; },
          [](const DownwardGeneratedQuantifier&) { return true; },
      },
      q.representation());
}

bool supports(const Quantifier& q, const Relation& s, const Limits& limits) {
  require_same_shape(q, s);
  if (limits.enumerable(s.slots())) return supports_by_table(membership_table(q), s);
  return relevant_tuples(q).is_subset_of(s);
}

Relation support(const Quantifier& q, const Limits& limits) {
  std::vector<std::size_t> order(power(q.universe(), q.arity()));
  std::iota(order.begin(), order.end(), 0);
  return support(q, order, limits);
}

Relation support(const Quantifier& q, std::span<const std::size_t> order, const Limits& limits) {
  const int n = q.universe();
  const int k = q.arity();
  const std::size_t slots = power(n, k);
  std::vector<std::size_t> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i || sorted.size() != slots) throw InvalidInput("elimination order is not a permutation of n^k");
  }
  Relation s = Relation::full(n, k);
  if (limits.enumerable(slots)) {
    const auto table = membership_table(q);
    for (std::size_t a : order) {
      Relation candidate = s;
      candidate.set(a, false);
      if (supports_by_table(table, candidate)) s = std::move(candidate);
    }
    return s;
  }
  const Relation relevant = relevant_tuples(q);
  for (std::size_t a : order) {
    Relation candidate = s;
    candidate.set(a, false);
    if (relevant.is_subset_of(candidate)) s = std::move(candidate);
  }
  return s;
}

Relation relevant_tuples(const Quantifier& q) {
  return std::visit(
      Overload{
          [](const ExtensionalQuantifier& e) {
            Relation out(e.universe(), e.arity());
            for (const auto& r : e.members()) {
              for (std::size_t i = 0; i < r.slots(); ++i) {
                if (out.test(i)) continue;
                Relation flipped = r;
                flipped.flip(i);
                if (!e.contains(flipped)) out.set(i);
              }
            }
            return out;
          },
          [](const ClopenQuantifier& c) {
            Relation local(c.bound(), c.arity());
            for (const auto& t : c.traces()) {
              for (std::size_t i = 0; i < t.slots(); ++i) {
                Relation flipped = t;
                flipped.flip(i);
                if (c.traces().count(flipped) == 0) local.set(i);
              }
            }
            return c.lift(local);
          },
          [](const PrincipalQuantifier& p) {
            return p.mode() == PrincipalMode::superset ? p.base() : p.base().complement();
          },
          [](const PrincipalComboQuantifier& c) {
            Relation out(c.universe(), c.dimension());
            for (const auto& s : c.signs()) {
              const std::uint64_t h = PrincipalComboQuantifier::mask_of(s);
              for (int k = 0; k < c.block_count(); ++k) {
                if (!c.accepts_mask(h ^ (std::uint64_t{1} << k))) out |= c.blocks()[static_cast<std::size_t>(k)];
              }
            }
            return out;
          },
          [](const ChainGroupQuantifier& c) {
            // A tuple is irrelevant iff every maximal member contains it.
            Relation out(c.universe(), 2);
            for (const auto& b : c.maximal_chains()) out |= b.complement();
            return out;
          },
          [](const DownwardGeneratedQuantifier& d) {
            Relation out(d.universe(), d.arity());
            for (const auto& b : d.maximal()) out |= b.complement();
            return out;
          },
      },
      q.representation());
}

Group automorphisms(const Quantifier& q, const Limits& limits) {
  const int n = q.universe();
  const int k = q.arity();
  auto collect = [&](auto&& fixes) {
    std::vector<Permutation> elements;
    for (const auto& g : all_permutations(n)) {
      if (fixes(g)) elements.push_back(g);
    }
    return Group::from_elements(n, std::move(elements));
  };
  return std::visit(
      Overload{
          [&](const ExtensionalQuantifier& e) {
            // g is injective on relations and q is finite, so g(q) ⊆ q suffices.
            return collect([&](const Permutation& g) {
              const RelationAction act(g, k);
              return std::all_of(e.members().begin(), e.members().end(),
                                 [&](const Relation& r) { return e.contains(act(r)); });
            });
          },
          [&](const PrincipalQuantifier& p) {
            return collect([&](const Permutation& g) { return apply_to_relation(g, p.base()) == p.base(); });
          },
          [&](const ChainGroupQuantifier& c) {
            // g(h(C_j)) ∈ Q and g⁻¹(h(C_j)) ∈ Q for all h, j. Smaller chains
            // lie below C_{n-1}, and an n-element member of Q is exactly a
            // chain image, so membership reduces to a lookup among the images.
            const auto& images = c.maximal_chains();
            auto in_q = [&](const Relation& r) { return std::binary_search(images.begin(), images.end(), r); };
            return collect([&](const Permutation& g) {
              const RelationAction fwd(g, 2);
              const RelationAction back(g.inverse(), 2);
              return std::all_of(images.begin(), images.end(),
                                 [&](const Relation& r) { return in_q(fwd(r)) && in_q(back(r)); });
            });
          },
          [&](const DownwardGeneratedQuantifier& d) {
            // g fixes the downward closure iff it permutes the maximal generators.
            const auto& top = d.maximal();
            return collect([&](const Permutation& g) {
              const RelationAction act(g, k);
              return std::all_of(top.begin(), top.end(), [&](const Relation& r) {
                return std::binary_search(top.begin(), top.end(), act(r));
              });
            });
          },
          [&](const auto&) { return pattern_automorphisms(q, limits); },
      },
      q.representation());
}

std::vector<Relation> downward_generators(const Quantifier& q, const Limits& limits) {
  if (!is_downward_closed(q, limits)) throw DomainError("quantifier is not downward closed");
  const int n = q.universe();
  const int k = q.arity();
  return std::visit(
      Overload{
          [](const ExtensionalQuantifier& e) {
            return maximal_elements(std::vector<Relation>(e.members().begin(), e.members().end()));
          },
          [](const ClopenQuantifier& c) {
            const Relation outside = c.window().complement();
            std::vector<Relation> out;
            for (const auto& t : c.traces()) out.push_back(c.lift(t) | outside);
            return maximal_elements(std::move(out));
          },
          [&](const PrincipalQuantifier& p) {
            if (p.mode() == PrincipalMode::subset) return std::vector<Relation>{p.base()};
            return std::vector<Relation>{Relation::full(n, k)};
          },
          [&](const PrincipalComboQuantifier& c) {
            // Largest relations with hit vector h: every +1 block, and every
            // -1 block minus one of its tuples.
            std::vector<Relation> out;
            for (const auto& s : c.signs()) {
              Relation base(n, k);
              std::vector<std::vector<std::size_t>> choices;
              for (int b = 0; b < c.block_count(); ++b) {
                const Relation& block = c.blocks()[static_cast<std::size_t>(b)];
                if (s[static_cast<std::size_t>(b)] == 1) {
                  base |= block;
                } else {
                  choices.push_back(block.indices());
                }
              }
              std::vector<std::size_t> pick(choices.size(), 0);
              while (true) {
                Relation r = base;
                for (std::size_t i = 0; i < choices.size(); ++i) {
                  for (std::size_t j = 0; j < choices[i].size(); ++j) {
                    if (j != pick[i]) r.set(choices[i][j]);
                  }
                }
                out.push_back(std::move(r));
                if (out.size() > limits.max_enum) throw CapabilityError("too many combo generators");
                std::size_t i = 0;
                while (i < choices.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
                if (i == choices.size()) break;
              }
            }
            return maximal_elements(std::move(out));
          },
          [](const ChainGroupQuantifier& c) { return c.maximal_chains(); },
          [](const DownwardGeneratedQuantifier& d) { return d.maximal(); },
      },
      q.representation());
}

bool compatible(const Quantifier& q, const PartialInjection& p, const Limits& limits) {
  if (p.universe() != q.universe()) throw InvalidInput("injection and quantifier universes differ");
  const auto generators = downward_generators(q, limits);
  const InjectionWindow w = injection_window(q.universe(), q.arity(), p);
  const auto cut = maximal_elements(restricted(generators, window_relation(q.universe(), q.arity(), w)));
  return compatible_with(cut, generators, w);
}

std::optional<PartialInjection> goodness_violation(const Quantifier& q, const Limits& limits) {
  const int n = q.universe();
  const int k = q.arity();
  const auto generators = downward_generators(q, limits);
  const Group aut = automorphisms(q, limits);
  const auto injections = all_partial_injections(n);
  std::size_t next = 0;
  for (int m = 0; m <= n; ++m) {
    std::set<std::vector<Element>> prefixes;
    for (const auto& g : aut.elements()) {
      prefixes.emplace(g.images().begin(), g.images().begin() + m);
    }
    std::vector<Relation> cut;
    bool cut_ready = false;
    for (; next < injections.size() && injections[next].domain_size() == m; ++next) {
      const auto& p = injections[next];
      if (prefixes.count(p.images()) != 0) continue;
      const InjectionWindow w = injection_window(n, k, p);
      if (!cut_ready) {
        cut = maximal_elements(restricted(generators, window_relation(n, k, w)));
        cut_ready = true;
      }
      if (compatible_with(cut, generators, w)) return p;
    }
  }
  return std::nullopt;
}

bool is_good(const Quantifier& q, const Limits& limits) {
  if (!is_downward_closed(q, limits)) return false;
  return !goodness_violation(q, limits).has_value();
}

Quantifier to_extensional(const Quantifier& q, const Limits& limits) {
  std::set<Relation> members;
  for (auto& r : all_relations(q.universe(), q.arity(), limits)) {
    if (q.contains(r)) members.insert(std::move(r));
  }
  return ExtensionalQuantifier(q.universe(), q.arity(), std::move(members));
}

}  // namespace qw
