#include "qw/synth/principal.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qw/error.hpp"
#include "qw/logic/eval.hpp"
#include "qw/logic/invariance.hpp"
#include "qw/quant/combo.hpp"
#include "qw/synth/common.hpp"

namespace qw {
namespace {

void require_minimal(const PrincipalComboQuantifier& q) {
  if (!is_minimal(q)) throw DomainError("operation needs a minimal combo");
}

void require_shape(const PrincipalComboQuantifier& q, const std::vector<Tuple>& ts) {
  for (const auto& t : ts) {
    if (static_cast<int>(t.size()) != q.dimension()) throw InvalidInput("tuple length differs from combo dimension");
    for (Element e : t) {
      if (e < 0 || e >= q.universe()) throw InvalidInput("tuple entry outside the universe");
    }
  }
}

// Compiled ψ formulas, one per argument length.
class Psi {
 public:
  explicit Psi(const PrincipalComboQuantifier& q) : q_(q), empty_(Signature{}, q.universe()) {
    env_.quantifiers.emplace("q", q);
  }

  bool operator()(const std::vector<Tuple>& a) {
    auto it = compiled_.find(a.size());
    if (it == compiled_.end()) {
      const int len = static_cast<int>(a.size());
      std::vector<std::string> vars;
      for (int j = 0; j < len; ++j) {
        for (int i = 0; i < q_.dimension(); ++i) vars.push_back("a" + std::to_string(j) + "_" + std::to_string(i));
      }
      it = compiled_
               .emplace(a.size(), Evaluator(psi_formula(q_.dimension(), len), Signature{}, q_.universe(), env_, vars))
               .first;
    }
    std::vector<Element> values;
    for (const auto& t : a) values.insert(values.end(), t.begin(), t.end());
    return it->second(empty_, values);
  }

 private:
  const PrincipalComboQuantifier& q_;
  Structure empty_;
  Environment env_;
  std::map<std::size_t, Evaluator> compiled_;
};

bool chi_with(Psi& psi, const PrincipalComboQuantifier& q, const Tuple& a, const Tuple& b, const Limits& limits) {
  const int n = q.universe();
  const int d = q.dimension();
  const std::size_t cells = power(n, d);
  const std::size_t blocks = static_cast<std::size_t>(q.block_count());
  std::size_t total = 1;
  for (std::size_t i = 0; i < blocks; ++i) {
    if (total > limits.max_enum / cells) throw CapabilityError("chi scan over (n^d)^N too large");
    total *= cells;
  }
  std::vector<std::size_t> c(blocks, 0);
  std::vector<Tuple> with_a(blocks + 1), with_b(blocks + 1), with_ab(blocks + 2);
  with_a[0] = a;
  with_b[0] = b;
  with_ab[0] = a;
  with_ab[1] = b;
  for (std::size_t step = 0; step < total; ++step) {
    for (std::size_t i = 0; i < blocks; ++i) {
      Tuple t = index_tuple(c[i], n, d);
      with_a[i + 1] = t;
      with_b[i + 1] = t;
      with_ab[i + 2] = std::move(t);
    }
    const bool pa = psi(with_a);
    if (psi(with_b) != pa || psi(with_ab) != pa) return false;
    std::size_t i = 0;
    while (i < blocks && ++c[i] == cells) c[i++] = 0;
  }
  return true;
}

// {x : chi(a, x)}.
Relation block_by_chi(Psi& psi, const PrincipalComboQuantifier& q, const Tuple& a, const Limits& limits) {
  Relation out(q.universe(), q.dimension());
  for (std::size_t i = 0; i < out.slots(); ++i) {
    if (chi_with(psi, q, a, index_tuple(i, q.universe(), q.dimension()), limits)) out.set(i);
  }
  return out;
}

Tuple flatten(const std::vector<Tuple>& ts) {
  Tuple out;
  for (const auto& t : ts) out.insert(out.end(), t.begin(), t.end());
  return out;
}

// ⟨universe, B_0..B_{N-1}⟩ with B_k the block containing reps[k].
Structure block_structure(const PrincipalComboQuantifier& q, const std::vector<Tuple>& reps) {
  Signature sig;
  const int blocks = q.block_count();
  // Zero-padded names keep signature order equal to index order.
  auto name = [](int k) {
    std::string s = std::to_string(k);
    return "B" + std::string(3 - s.size(), '0') + s;
  };
  for (int k = 0; k < blocks; ++k) sig.add(name(k), q.dimension());
  Structure m(sig, q.universe());
  for (int k = 0; k < blocks; ++k) {
    const int b = q.block_of(tuple_index(reps[static_cast<std::size_t>(k)], q.universe()));
    m.set_relation(name(k), q.blocks()[static_cast<std::size_t>(b)]);
  }
  return m;
}

}  // namespace

Formula psi_formula(int dimension, int length, const std::string& quantifier) {
  const auto xs = numbered_vars("x", dimension);
  const auto x = var_terms(xs);
  std::vector<Formula> parts;
  for (int j = 0; j < length; ++j) {
    std::vector<Term> a;
    for (int i = 0; i < dimension; ++i) a.push_back(Term::var("a" + std::to_string(j) + "_" + std::to_string(i)));
    parts.push_back(Formula::negate(tuple_equal(x, a)));
  }
  return Formula::quant(quantifier, xs, Formula::conj(std::move(parts)));
}

bool occurs_negatively(const PrincipalComboQuantifier& q, const std::vector<Tuple>& a) {
  require_shape(q, a);
  Psi psi(q);
  return psi(a);
}

bool occurs_positively(const PrincipalComboQuantifier& q, const std::vector<Tuple>& a, const Limits& limits) {
  require_shape(q, a);
  require_minimal(q);
  Psi psi(q);
  Relation met(q.universe(), q.dimension());
  for (const auto& t : a) {
    if (!met.contains(t)) met |= block_by_chi(psi, q, t, limits);
  }
  return q.contains(met);
}

bool chi_check(const PrincipalComboQuantifier& q, const Tuple& a, const Tuple& b, const Limits& limits) {
  require_shape(q, {a, b});
  require_minimal(q);
  Psi psi(q);
  return chi_with(psi, q, a, b, limits);
}

bool theta_check(const PrincipalComboQuantifier& q, const std::vector<Tuple>& pos, const std::vector<Tuple>& neg,
                 const Limits& limits) {
  require_shape(q, pos);
  require_shape(q, neg);
  require_minimal(q);
  if (static_cast<int>(pos.size() + neg.size()) != q.block_count()) {
    throw InvalidInput("theta needs |pos| + |neg| equal to the block count");
  }
  Psi psi(q);
  std::vector<Tuple> all = pos;
  all.insert(all.end(), neg.begin(), neg.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (chi_with(psi, q, all[i], all[j], limits)) return false;
    }
  }
  return psi(neg) && occurs_positively(q, pos, limits);
}

bool combo_orbit_check(const PrincipalComboQuantifier& q, const std::vector<Tuple>& a, const std::vector<Tuple>& b,
                       const Limits& limits) {
  require_shape(q, a);
  require_shape(q, b);
  require_minimal(q);
  if (a.size() != b.size()) throw InvalidInput("orbit check needs tuples of equal length");
  const int n = q.universe();
  const int d = q.dimension();
  const int blocks = q.block_count();
  auto block = [&](const Tuple& t) { return q.block_of(tuple_index(t, n)); };

  // c_k: least tuple of A_k; f(i): the block of a_i.
  std::vector<Tuple> c;
  for (const auto& blk : q.blocks()) c.push_back(index_tuple(blk.indices().front(), n, d));
  std::vector<int> f;
  for (const auto& t : a) f.push_back(block(t));
  const Structure mac = block_structure(q, c);
  std::vector<Tuple> ac = a;
  ac.insert(ac.end(), c.begin(), c.end());
  const Tuple mac_tuple = flatten(ac);

  Psi psi(q);
  std::vector<int> perm(static_cast<std::size_t>(blocks));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // d_k ∈ A_{perm[k]}: b_i and d_{f(i)} share a block.
    bool blocks_match = true;
    for (std::size_t i = 0; i < b.size() && blocks_match; ++i) {
      blocks_match = block(b[i]) == perm[static_cast<std::size_t>(f[i])];
    }
    if (!blocks_match) continue;
    std::vector<std::vector<std::size_t>> choices;
    std::size_t total = 1;
    for (int k = 0; k < blocks; ++k) {
      choices.push_back(q.blocks()[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])].indices());
      total *= choices.back().size();
      if (total > limits.max_enum) throw CapabilityError("too many block representatives");
    }
    std::vector<std::size_t> pick(static_cast<std::size_t>(blocks), 0);
    for (std::size_t step = 0; step < total; ++step) {
      std::vector<Tuple> dd;
      for (int k = 0; k < blocks; ++k) {
        dd.push_back(index_tuple(choices[static_cast<std::size_t>(k)][pick[static_cast<std::size_t>(k)]], n, d));
      }
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;

      // For every I ⊆ N: ψ(d restricted to I) iff N∖I is an accepted hit mask.
      const std::uint64_t full = (std::uint64_t{1} << blocks) - 1;
      bool signs_ok = true;
      for (std::uint64_t mask = 0; mask <= full && signs_ok; ++mask) {
        std::vector<Tuple> sub;
        for (int k = 0; k < blocks; ++k) {
          if ((mask >> k) & 1u) sub.push_back(dd[static_cast<std::size_t>(k)]);
        }
        signs_ok = psi(sub) == q.accepts_mask(full & ~mask);
      }
      if (!signs_ok) continue;
      std::vector<Tuple> bd = b;
      bd.insert(bd.end(), dd.begin(), dd.end());
      if (find_isomorphism(mac, mac_tuple, block_structure(q, dd), flatten(bd))) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace qw
