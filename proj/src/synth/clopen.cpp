#include "qw/synth/clopen.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "qw/error.hpp"
#include "qw/logic/eval.hpp"

namespace qw {
namespace {

const ClopenQuantifier& require_clopen(const Quantifier& q) {
  const auto* c = q.get_if<ClopenQuantifier>();
  if (c == nullptr) throw DomainError("operation needs a clopen quantifier");
  return *c;
}

std::vector<std::size_t> indices_of(const std::vector<Tuple>& ts, int n, int k) {
  std::vector<std::size_t> out;
  for (const auto& t : ts) {
    if (static_cast<int>(t.size()) != k) throw InvalidInput("tuple arity differs from quantifier arity");
    out.push_back(tuple_index(t, n));
  }
  return out;
}

std::vector<std::string> tuple_vars(const std::string& prefix, int count, int arity) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < arity; ++j) out.push_back(prefix + std::to_string(i) + "_" + std::to_string(j));
  }
  return out;
}

std::vector<Term> tuple_terms(const std::string& prefix, int i, int arity) {
  std::vector<Term> out;
  for (int j = 0; j < arity; ++j) out.push_back(Term::var(prefix + std::to_string(i) + "_" + std::to_string(j)));
  return out;
}

// rlm_semantic on index sets: membership depends only on X ∩ S, so X ranges
// over pos ∪ (patterns on S minus neg and pos).
bool rlm_indices(const Quantifier& q, const Relation& support, const std::vector<std::size_t>& neg,
                 const std::vector<std::size_t>& pos, const Limits& limits) {
  const int n = q.universe();
  const int k = q.arity();
  Relation fixed(n, k);
  Relation banned(n, k);
  for (auto i : pos) fixed.set(i);
  for (auto i : neg) banned.set(i);
  if (fixed.intersects(banned)) return false;
  std::vector<std::size_t> free;
  for (auto i : support.indices()) {
    if (!fixed.test(i) && !banned.test(i)) free.push_back(i);
  }
  if (!limits.enumerable(free.size())) throw CapabilityError("R^{l,m} pattern scan too large");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    Relation x = fixed;
    for (std::uint64_t b = mask; b != 0; b &= b - 1) x.set(free[static_cast<std::size_t>(std::countr_zero(b))]);
    if (q.contains(x)) return true;
  }
  return false;
}

// Evaluates the R^{l,m} matrix for fixed argument lengths.
class RlmMatrix {
 public:
  RlmMatrix(const Quantifier& q, int l, int m, int r)
      : q_(q), empty_(Signature{}, q.universe()),
        eval_(rlm_formula(q.arity(), l, m, r, false), Signature{}, q.universe(), env(q),
              args(q.arity(), l, m, r)) {}

  bool operator()(const std::vector<std::size_t>& neg, const std::vector<std::size_t>& pos,
                  const std::vector<std::size_t>& witness) const {
    std::vector<Element> values;
    const int n = q_.universe();
    const int k = q_.arity();
    for (const auto* list : {&neg, &pos, &witness}) {
      for (auto idx : *list) {
        const Tuple t = index_tuple(idx, n, k);
        values.insert(values.end(), t.begin(), t.end());
      }
    }
    return eval_(empty_, values);
  }

 private:
  static Environment env(const Quantifier& q) {
    Environment e;
    e.quantifiers.emplace("q", q);
    return e;
  }
  static std::vector<std::string> args(int k, int l, int m, int r) {
    auto out = tuple_vars("b", l, k);
    for (auto& v : tuple_vars("a", m, k)) out.push_back(v);
    for (auto& v : tuple_vars("c", r, k)) out.push_back(v);
    return out;
  }

  const Quantifier& q_;
  Structure empty_;
  Evaluator eval_;
};

// ∃c̄ of length r. The Q-node only sees D ∩ W with W = t^k, and
// D ∩ W = ((pos ∪ c̄) ∩ W) \ neg, so c̄ matters only through its entries in
// W \ (neg ∪ pos). Entries outside that pool (a pad) are interchangeable,
// and repetition realizes every set of at most r = |W| entries.
bool rlm_check(const ClopenQuantifier& c, const RlmMatrix& matrix, const std::vector<std::size_t>& neg,
               const std::vector<std::size_t>& pos, std::size_t r) {
  const Relation window = c.window();
  Relation excluded(c.universe(), c.arity());
  for (auto i : neg) excluded.set(i);
  for (auto i : pos) excluded.set(i);
  std::vector<std::size_t> pool;
  for (auto i : window.indices()) {
    if (!excluded.test(i)) pool.push_back(i);
  }
  if (pool.size() > 20) throw CapabilityError("R^{l,m} witness scan too large");
  std::optional<std::size_t> pad;
  const Relation outside = window.complement();
  if (!outside.empty()) {
    pad = outside.indices().front();
  } else if (!neg.empty()) {
    pad = neg.front();
  } else if (!pos.empty()) {
    pad = pos.front();
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
    std::vector<std::size_t> witness;
    for (std::uint64_t b = mask; b != 0; b &= b - 1) witness.push_back(pool[static_cast<std::size_t>(std::countr_zero(b))]);
    if (r == 0) {
      if (!witness.empty()) break;
    } else {
      if (witness.empty() && !pad) continue;
      const std::size_t fill = witness.empty() ? *pad : witness.front();
      witness.resize(r, fill);
    }
    if (matrix(neg, pos, witness)) return true;
  }
  return false;
}

}  // namespace

bool rlm_semantic(const Quantifier& q, const std::vector<Tuple>& neg, const std::vector<Tuple>& pos,
                  const Limits& limits) {
  const int n = q.universe();
  const int k = q.arity();
  return rlm_indices(q, relevant_tuples(q), indices_of(neg, n, k), indices_of(pos, n, k), limits);
}

Formula rlm_formula(int arity, int l, int m, int r, bool with_witness, const std::string& quantifier) {
  const auto xs = numbered_vars("x", arity);
  const auto x = var_terms(xs);
  std::vector<Formula> guard;
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < m; ++j) {
      guard.push_back(Formula::negate(tuple_equal(tuple_terms("b", i, arity), tuple_terms("a", j, arity))));
    }
  }
  std::vector<Formula> avoid;
  for (int i = 0; i < l; ++i) avoid.push_back(Formula::negate(tuple_equal(x, tuple_terms("b", i, arity))));
  std::vector<Formula> hit;
  for (int i = 0; i < m; ++i) hit.push_back(tuple_equal(x, tuple_terms("a", i, arity)));
  for (int i = 0; i < r; ++i) hit.push_back(tuple_equal(x, tuple_terms("c", i, arity)));
  avoid.push_back(Formula::disj(std::move(hit)));
  guard.push_back(Formula::quant(quantifier, xs, Formula::conj(std::move(avoid))));
  Formula body = Formula::conj(std::move(guard));
  if (with_witness) {
    const auto cs = tuple_vars("c", r, arity);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) body = Formula::exists(*it, std::move(body));
  }
  return body;
}

bool rlm_formula_check(const Quantifier& q, const std::vector<Tuple>& neg, const std::vector<Tuple>& pos) {
  const ClopenQuantifier& c = require_clopen(q);
  const int n = q.universe();
  const int k = q.arity();
  const std::size_t r = power(c.bound(), k);
  const RlmMatrix matrix(q, static_cast<int>(neg.size()), static_cast<int>(pos.size()), static_cast<int>(r));
  return rlm_check(c, matrix, indices_of(neg, n, k), indices_of(pos, n, k), r);
}

bool support_membership_formula_test(const Quantifier& q, const Tuple& a) {
  const ClopenQuantifier& c = require_clopen(q);
  const int n = q.universe();
  const int k = q.arity();
  const std::size_t ai = indices_of({a}, n, k).front();
  const std::size_t r = power(c.bound(), k);
  const int ri = static_cast<int>(r);
  const RlmMatrix first(q, ri + 1, ri, ri);
  const RlmMatrix second(q, ri, ri + 1, ri);
  // Both predicates only see b̄ and c̄ through their entries in W \ {a},
  // and the disjointness guard. Overlapping choices falsify both, so it
  // suffices to range over disjoint B, C ⊆ W \ {a}, padded to length r by
  // repetition or by distinct tuples outside W.
  const Relation window = c.window();
  std::vector<std::size_t> inner;
  for (auto i : window.indices()) {
    if (i != ai) inner.push_back(i);
  }
  std::vector<std::size_t> pads;
  for (auto i : window.complement().indices()) {
    if (i != ai && pads.size() < 2) pads.push_back(i);
  }
  constexpr std::size_t no_pad = static_cast<std::size_t>(-1);
  auto realize = [&](std::vector<std::size_t> set, std::size_t pad) -> std::optional<std::vector<std::size_t>> {
    if (r == 0) {
      if (!set.empty()) return std::nullopt;
      return set;
    }
    if (set.empty() && pad == no_pad) return std::nullopt;
    const std::size_t fill = set.empty() ? pad : set.front();
    set.resize(r, fill);
    return set;
  };
  const std::size_t pad_b = pads.empty() ? no_pad : pads[0];
  const std::size_t pad_c = pads.size() < 2 ? no_pad : pads[1];
  std::vector<int> state(inner.size(), 0);  // 0 neither, 1 in B, 2 in C
  while (true) {
    std::vector<std::size_t> bs;
    std::vector<std::size_t> cs;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (state[i] == 1) bs.push_back(inner[i]);
      if (state[i] == 2) cs.push_back(inner[i]);
    }
    auto b = realize(bs, pad_b);
    auto cc = realize(cs, pad_c);
    if (b && cc) {
      std::vector<std::size_t> neg1{ai};
      neg1.insert(neg1.end(), b->begin(), b->end());
      std::vector<std::size_t> pos2 = *cc;
      pos2.push_back(ai);
      if (rlm_check(c, first, neg1, *cc, r) != rlm_check(c, second, *b, pos2, r)) return true;
    }
    std::size_t i = 0;
    while (i < state.size() && ++state[i] == 3) state[i++] = 0;
    if (i == state.size()) break;
  }
  return false;
}

Verdict clopen_orbit_check(const Quantifier& q, const Tuple& a, const ClopenOrbitOptions& options,
                           const Limits& limits) {
  const ClopenQuantifier& c = require_clopen(q);
  const int n = q.universe();
  const int k = q.arity();
  const int t = c.bound();
  const Universe u{n};
  if (a.empty()) throw InvalidInput("orbit check needs a nonempty tuple");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!u.contains(a[i])) throw InvalidInput("tuple entry outside the universe");
    for (std::size_t j = 0; j < i; ++j) {
      if (a[i] == a[j]) throw InvalidInput("orbit check needs distinct entries");
    }
  }
  const int m = static_cast<int>(a.size()) - 1;
  const int len = m + t + 1;
  if (len > n) return Verdict::inconclusive;

  const Relation s = support(q, limits);
  const std::vector<std::size_t> s_idx = s.indices();
  const std::size_t s_size = s_idx.size();
  if (s_size > 10) throw CapabilityError("support too large for the R^{j,l} table");
  std::vector<bool> field(static_cast<std::size_t>(n), false);
  for (const auto& tup : s.tuples()) {
    for (Element e : tup) field[static_cast<std::size_t>(e)] = true;
  }
  const std::size_t bound = options.literal_bound ? static_cast<std::size_t>(m + t)
                                                  : std::max<std::size_t>(static_cast<std::size_t>(m + t), s_size);
  // R^{j,l} on tuples from dom^k depends only on (N ∩ S, P ∩ S) once f
  // preserves S, so the table over disjoint N, P ⊆ S is enough.
  std::map<std::pair<std::uint64_t, std::uint64_t>, bool> table;
  const std::uint64_t full = (std::uint64_t{1} << s_size) - 1;
  for (std::uint64_t nm = 0; nm <= full; ++nm) {
    for (std::uint64_t pm = 0; pm <= full; ++pm) {
      if ((nm & pm) != 0) continue;
      if (static_cast<std::size_t>(std::popcount(nm) + std::popcount(pm)) > bound) continue;
      std::vector<std::size_t> neg, pos;
      for (std::size_t i = 0; i < s_size; ++i) {
        if ((nm >> i) & 1u) neg.push_back(s_idx[i]);
        if ((pm >> i) & 1u) pos.push_back(s_idx[i]);
      }
      table[{nm, pm}] = rlm_indices(q, s, neg, pos, limits);
    }
  }

  std::vector<Element> ext(a.begin(), a.end());
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (Element e : a) used[static_cast<std::size_t>(e)] = true;
  // The table test only depends on how f permutes S.
  std::map<std::vector<std::size_t>, bool> by_image;
  auto accepts = [&]() {
    std::vector<bool> in_range(static_cast<std::size_t>(n), false);
    for (Element e : ext) in_range[static_cast<std::size_t>(e)] = true;
    for (int e = 0; e < n; ++e) {
      if (field[static_cast<std::size_t>(e)] && !in_range[static_cast<std::size_t>(e)]) return false;
    }
    // f preserves S on dom^k, in both directions.
    std::vector<std::size_t> s_image(s_size);
    for (const auto& x : all_tuples(len, k)) {
      Tuple fx = x;
      for (auto& e : fx) e = ext[static_cast<std::size_t>(e)];
      const std::size_t xi = tuple_index(x, n);
      const std::size_t fi = tuple_index(fx, n);
      if (s.test(xi) != s.test(fi)) return false;
      if (s.test(xi)) {
        const auto pos_x = std::lower_bound(s_idx.begin(), s_idx.end(), xi) - s_idx.begin();
        const auto pos_f = std::lower_bound(s_idx.begin(), s_idx.end(), fi) - s_idx.begin();
        s_image[static_cast<std::size_t>(pos_x)] = static_cast<std::size_t>(pos_f);
      }
    }
    auto move = [&](std::uint64_t mask) {
      std::uint64_t out = 0;
      for (std::size_t i = 0; i < s_size; ++i) {
        if ((mask >> i) & 1u) out |= std::uint64_t{1} << s_image[i];
      }
      return out;
    };
    auto [it, fresh] = by_image.try_emplace(s_image, false);
    if (fresh) {
      // f maps S onto S, so checking f on every pair also covers f⁻¹.
      it->second = std::all_of(table.begin(), table.end(), [&](const auto& entry) {
        return table.at({move(entry.first.first), move(entry.first.second)}) == entry.second;
      });
    }
    return it->second;
  };
  auto search = [&](auto&& self) -> bool {
    if (static_cast<int>(ext.size()) == len) return accepts();
    for (Element e = 0; e < n; ++e) {
      if (used[static_cast<std::size_t>(e)]) continue;
      used[static_cast<std::size_t>(e)] = true;
      ext.push_back(e);
      const bool found = self(self);
      ext.pop_back();
      used[static_cast<std::size_t>(e)] = false;
      if (found) return true;
    }
    return false;
  };
  return search(search) ? Verdict::yes : Verdict::no;
}

}  // namespace qw
