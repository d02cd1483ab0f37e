#include <set>

#include "doctest.h"
#include "qw/error.hpp"
#include "qw/logic/eval.hpp"
#include "qw/quant/combo.hpp"
#include "qw/quant/qg.hpp"
#include "qw/synth/clopen.hpp"
#include "qw/synth/good.hpp"
#include "qw/synth/principal.hpp"
#include "qw/verify/corpus.hpp"
#include "qw/verify/oracles.hpp"

using namespace qw;

namespace {

Relation unary(int n, std::vector<Element> xs) {
  Relation r(n, 1);
  for (auto x : xs) r.insert({x});
  return r;
}

std::set<Tuple> tuples_of(const Relation& r) {
  std::set<Tuple> out;
  for (auto i : r.indices()) out.insert(index_tuple(i, r.universe(), r.arity()));
  return out;
}

Tuple iota_tuple(int m) {
  Tuple t;
  for (int i = 0; i < m; ++i) t.push_back(i);
  return t;
}

std::set<Tuple> orbit_of(const Quantifier& q, const Tuple& a) {
  const Group aut = automorphisms(q);
  return oracle::orbit(aut.elements(), a);
}

Relation orbit_formula_set(const Quantifier& q, int m) {
  Environment env;
  env.quantifiers.emplace("q", q);
  const Formula f = orbit_formula_good(q, m);
  return defined_set(f, Structure(Signature{}, q.universe()), env, numbered_vars("a", m));
}

// Q_{{(0,)}} over n as a clopen quantifier with bound 1.
ClopenQuantifier pinned_zero(int n) { return ClopenQuantifier(n, 1, 1, {unary(1, {0})}); }

PrincipalComboQuantifier two_blocks() {
  return PrincipalComboQuantifier(4, 1, {unary(4, {0, 1}), unary(4, {2, 3})}, {{1, -1}});
}

std::vector<Tuple> random_tuples(Rng& rng, int n, int k, int count) {
  std::vector<Tuple> out;
  for (int i = 0; i < count; ++i) {
    Tuple t;
    for (int j = 0; j < k; ++j) t.push_back(static_cast<Element>(rng.below(static_cast<std::uint64_t>(n))));
    out.push_back(t);
  }
  return out;
}

Tuple distinct_tuple(Rng& rng, int n, int len) {
  const Permutation p = rng.permutation(n);
  return Tuple(p.images().begin(), p.images().begin() + len);
}

Tuple flatten(const std::vector<Tuple>& ts) {
  Tuple out;
  for (const auto& t : ts) out.insert(out.end(), t.begin(), t.end());
  return out;
}

}  // namespace

TEST_CASE("orbit_formula_good examples") {
  CHECK(tuples_of(orbit_formula_set(build_qg(Group::trivial(3)), 1)) == std::set<Tuple>{{0}});
  const Relation pairs = orbit_formula_set(build_qg(Group::symmetric(3)), 2);
  std::set<Tuple> injective;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      if (x != y) injective.insert({x, y});
    }
  }
  CHECK(tuples_of(pairs) == injective);
  const Group cyclic = Group::generate(3, {Permutation({1, 2, 0})});
  CHECK(tuples_of(orbit_formula_set(build_qg(cyclic), 1)) == std::set<Tuple>{{0}, {1}, {2}});

  Quantifier not_good = DownwardGeneratedQuantifier(3, 1, {unary(3, {0, 1}), unary(3, {2})});
  CHECK_THROWS_AS(orbit_formula_good(not_good, 1), DomainError);
  CHECK_THROWS_AS(orbit_formula_good(build_qg(Group::trivial(3)), 4), InvalidInput);
}

TEST_CASE("orbit_formula_good without distinctness admits repeated entries") {
  Quantifier all = all_relations_quantifier(3, 1);
  Environment env;
  env.quantifiers.emplace("q", all);
  const Formula f = orbit_formula_good(all, 2, OrbitFormulaOptions{.distinct = false});
  const Relation set = defined_set(f, Structure(Signature{}, 3), env, {"a0", "a1"});
  CHECK(set.contains({0, 0}));
  CHECK(tuples_of(orbit_formula_set(all, 2)) == orbit_of(all, {0, 1}));
}

TEST_CASE("orbit_formula_good defines orbits over good quantifiers") {
  int checked = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : corpus::pair_generated_subgroups(n)) {
      Quantifier q = build_qg(g);
      for (int m = 1; m <= std::min(n, 3); ++m) {
        CHECK(tuples_of(orbit_formula_set(q, m)) == oracle::orbit(g.elements(), iota_tuple(m)));
        ++checked;
      }
    }
  }
  Rng rng(71);
  for (int trial = 0; trial < 80; ++trial) {
    Quantifier q = corpus::random_small_quantifier(rng);
    if (!is_good(q)) continue;
    for (int m = 1; m <= std::min(q.universe(), 3); ++m) {
      CHECK(tuples_of(orbit_formula_set(q, m)) == orbit_of(q, iota_tuple(m)));
      ++checked;
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("rlm examples") {
  Quantifier q = PrincipalQuantifier(unary(4, {0}), PrincipalMode::superset);
  CHECK(rlm_semantic(q, {}, {}));
  CHECK_FALSE(rlm_semantic(ExtensionalQuantifier(4, 1, {}), {}, {}));
  CHECK(rlm_semantic(q, {{1}}, {{2}}));
  CHECK_FALSE(rlm_semantic(q, {{0}}, {{2}}));
  CHECK_FALSE(rlm_semantic(all_relations_quantifier(3, 1), {{1}}, {{1}}));

  Quantifier c = pinned_zero(4);
  CHECK(rlm_formula_check(c, {{1}}, {{2}}));
  CHECK_FALSE(rlm_formula_check(c, {{0}}, {}));
  Quantifier empty_trace = ClopenQuantifier(4, 1, 1, {Relation(1, 1)});
  CHECK_FALSE(rlm_formula_check(empty_trace, {}, {{0}}));
  CHECK_THROWS_AS(rlm_formula_check(q, {}, {}), DomainError);
}

TEST_CASE("rlm formula check agrees with the semantic clause") {
  Rng rng(72);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + static_cast<int>(rng.below(2));
    const int n = k == 1 ? 3 + static_cast<int>(rng.below(4)) : 3;
    const int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k == 1 ? 3 : 2)));
    Quantifier q = corpus::random_clopen(rng, n, k, t);
    for (int inner = 0; inner < 10; ++inner) {
      const auto neg = random_tuples(rng, n, k, static_cast<int>(rng.below(3)));
      const auto pos = random_tuples(rng, n, k, static_cast<int>(rng.below(3)));
      CHECK(rlm_formula_check(q, neg, pos) == rlm_semantic(q, neg, pos));
      ++checked;
    }
  }
  CHECK(checked == 600);
}

TEST_CASE("rlm reduction matches evaluating the full formula") {
  // Unary, t = 1 and t = 2 on small universes: r witness tuples are bound by
  // real existential quantifiers and evaluated by the interpreter.
  Rng rng(73);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(2));
    const int t = 1 + static_cast<int>(rng.below(2));
    Quantifier q = corpus::random_clopen(rng, n, 1, t);
    Environment env;
    env.quantifiers.emplace("q", q);
    const Structure empty(Signature{}, n);
    for (int l = 0; l <= 2; ++l) {
      for (int m = 0; m <= 2 - l; ++m) {
        const Formula f = rlm_formula(1, l, m, t, true);
        const auto neg = random_tuples(rng, n, 1, l);
        const auto pos = random_tuples(rng, n, 1, m);
        Assignment asg;
        for (int i = 0; i < l; ++i) asg["b" + std::to_string(i) + "_0"] = neg[static_cast<std::size_t>(i)][0];
        for (int i = 0; i < m; ++i) asg["a" + std::to_string(i) + "_0"] = pos[static_cast<std::size_t>(i)][0];
        CHECK(oracle::evaluate(f, empty, env, asg) == rlm_formula_check(q, neg, pos));
      }
    }
  }
}

TEST_CASE("support membership test examples") {
  Quantifier q = pinned_zero(4);
  CHECK(support_membership_formula_test(q, {0}));
  CHECK_FALSE(support_membership_formula_test(q, {1}));
  Quantifier all = ClopenQuantifier(4, 1, 2, {Relation(2, 1), unary(2, {0}), unary(2, {1}), unary(2, {0, 1})});
  for (Element a = 0; a < 4; ++a) CHECK_FALSE(support_membership_formula_test(all, {a}));
}

TEST_CASE("support membership test equals the support") {
  Rng rng(74);
  for (int trial = 0; trial < 24; ++trial) {
    const int t = 1 + trial % 3;
    Quantifier q = corpus::random_clopen(rng, 8, 1, t);
    const Relation s = oracle::support(q);
    for (Element a = 0; a < 8; ++a) CHECK(support_membership_formula_test(q, {a}) == s.contains({a}));
  }
  for (int trial = 0; trial < 6; ++trial) {
    Quantifier q = corpus::random_clopen(rng, 5, 2, 2);
    const Relation s = support(q);
    for (std::size_t i = 0; i < s.slots(); ++i) {
      const Tuple a = index_tuple(i, 5, 2);
      CHECK(support_membership_formula_test(q, a) == s.contains(a));
    }
  }
}

TEST_CASE("clopen_orbit_check examples") {
  Quantifier q = pinned_zero(5);
  CHECK(clopen_orbit_check(q, {0, 1}) == Verdict::yes);
  CHECK(clopen_orbit_check(q, {0, 2}) == Verdict::yes);
  CHECK(clopen_orbit_check(q, {1, 2}) == Verdict::no);
  CHECK_THROWS_AS(clopen_orbit_check(q, {1, 1}), InvalidInput);
  Quantifier tight = ClopenQuantifier(3, 1, 3, {unary(3, {0, 1})});
  CHECK(clopen_orbit_check(tight, {0, 1}) == Verdict::inconclusive);
}

TEST_CASE("clopen_orbit_check bound counterexample") {
  // S = {0,1}^2. The swap 0 <-> 1 preserves every R^{j,l} with j + l <= 2
  // but sends the accepted trace {(0,0)} to the rejected {(1,1)}.
  const int n = 3;
  std::set<Relation> traces;
  const Relation window = Relation::full(2, 2);
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    Relation r = Relation::from_bits(2, 2, bits);
    if (r.count() % 2 == 0 || r == Relation::from_tuples(2, 2, std::vector<Tuple>{{0, 0}})) traces.insert(r);
  }
  Quantifier q = ClopenQuantifier(n, 2, 2, traces);
  CHECK(orbit_of(q, {0}).count({1}) == 0);
  CHECK(clopen_orbit_check(q, {1}) == Verdict::no);
  CHECK(clopen_orbit_check(q, {1}, ClopenOrbitOptions{.literal_bound = true}) == Verdict::yes);
  CHECK(window.count() == 4);
}

TEST_CASE("clopen_orbit_check agrees with orbits") {
  Rng rng(75);
  int decided = 0;
  for (int trial = 0; trial < 18; ++trial) {
    const int t = 1 + trial % 3;
    Quantifier q = corpus::random_clopen(rng, 8, 1, t);
    const auto aut = oracle::automorphisms(q);
    for (int len = 1; len <= 3; ++len) {
      const auto orbit = oracle::orbit(aut, iota_tuple(len));
      for (int inner = 0; inner < 6; ++inner) {
        const Tuple a = inner == 0 ? iota_tuple(len) : distinct_tuple(rng, 8, len);
        const Verdict v = clopen_orbit_check(q, a);
        if (v == Verdict::inconclusive) continue;
        CHECK((v == Verdict::yes) == (orbit.count(a) != 0));
        ++decided;
      }
    }
  }
  for (int trial = 0; trial < 4; ++trial) {
    Quantifier q = corpus::random_clopen(rng, 5, 2, 2);
    for (int len = 1; len <= 2; ++len) {
      const auto orbit = orbit_of(q, iota_tuple(len));
      for (int inner = 0; inner < 5; ++inner) {
        const Tuple a = distinct_tuple(rng, 5, len);
        const Verdict v = clopen_orbit_check(q, a);
        if (v == Verdict::inconclusive) continue;
        CHECK((v == Verdict::yes) == (orbit.count(a) != 0));
        ++decided;
      }
    }
  }
  CHECK(decided > 200);
}

TEST_CASE("combo examples") {
  const auto q = two_blocks();
  CHECK(occurs_negatively(q, {}) == q.accepts_mask(3));
  CHECK(occurs_negatively(q, {{2}}));
  CHECK_FALSE(occurs_negatively(q, {{0}}));
  CHECK(chi_check(q, {1}, {1}));
  CHECK(chi_check(q, {0}, {1}));
  CHECK_FALSE(chi_check(q, {1}, {2}));
  CHECK(theta_check(q, {{0}}, {{2}}));
  CHECK_FALSE(theta_check(q, {{0}}, {{1}}));
  CHECK_FALSE(theta_check(q, {}, {{0}, {2}}));
  CHECK_THROWS_AS(theta_check(q, {}, {{0}}), InvalidInput);
  CHECK(combo_orbit_check(q, {{0}}, {{0}}));
  CHECK(combo_orbit_check(q, {{0}}, {{1}}));
  CHECK_FALSE(combo_orbit_check(q, {{0}}, {{2}}));

  PrincipalComboQuantifier loose(4, 1, {unary(4, {0}), unary(4, {1}), unary(4, {2, 3})}, {{1, 1, 1}, {1, -1, 1}});
  REQUIRE_FALSE(is_minimal(loose));
  CHECK_THROWS_AS(chi_check(loose, {0}, {1}), DomainError);
  CHECK_THROWS_AS(combo_orbit_check(loose, {{0}}, {{1}}), DomainError);
}

TEST_CASE("combo constructions agree with their oracles") {
  Rng rng(76);
  int orbit_cases = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(5));
    const auto q = minimize_combo(corpus::random_combo(rng, n, 1, 3, 4));
    for (int inner = 0; inner < 8; ++inner) {
      const auto a = random_tuples(rng, n, 1, static_cast<int>(rng.below(4)));
      CHECK(occurs_negatively(q, a) == oracle::occurs_negatively(q, a));
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        CHECK(chi_check(q, {x}, {y}) == (q.block_of(static_cast<std::size_t>(x)) == q.block_of(static_cast<std::size_t>(y))));
      }
    }
    const auto aut = oracle::automorphisms(q);
    for (int inner = 0; inner < 6; ++inner) {
      const int len = 1 + static_cast<int>(rng.below(3));
      const auto a = random_tuples(rng, n, 1, len);
      auto b = random_tuples(rng, n, 1, len);
      if (inner % 2 == 0) {
        // Half the pairs are images under an automorphism.
        const auto& g = aut[rng.below(aut.size())];
        for (auto& t : b) t = {g(a[&t - b.data()][0])};
      }
      CHECK(combo_orbit_check(q, a, b) == (oracle::orbit(aut, flatten(a)).count(flatten(b)) != 0));
      ++orbit_cases;
    }
  }
  CHECK(orbit_cases == 240);
}

TEST_CASE("combo constructions over a binary smoke instance") {
  // d = 2 on n = 2: blocks are the diagonal and the off-diagonal pairs.
  const Relation diag = Relation::from_tuples(2, 2, std::vector<Tuple>{{0, 0}, {1, 1}});
  const Relation off = Relation::from_tuples(2, 2, std::vector<Tuple>{{0, 1}, {1, 0}});
  PrincipalComboQuantifier q(2, 2, {diag, off}, {{1, -1}});
  REQUIRE(is_minimal(q));
  CHECK(chi_check(q, {0, 0}, {1, 1}));
  CHECK_FALSE(chi_check(q, {0, 0}, {0, 1}));
  CHECK(theta_check(q, {{0, 0}}, {{1, 0}}));
  const auto aut = oracle::automorphisms(q);
  for (const auto& a : std::vector<std::vector<Tuple>>{{{0, 1}}, {{0, 0}}, {{0, 1}, {1, 1}}}) {
    for (const auto& b : std::vector<std::vector<Tuple>>{{{1, 0}}, {{1, 1}}, {{1, 0}, {0, 0}}}) {
      if (a.size() != b.size()) continue;
      CHECK(combo_orbit_check(q, a, b) == (oracle::orbit(aut, flatten(a)).count(flatten(b)) != 0));
    }
  }
  for (const auto& a : std::vector<std::vector<Tuple>>{{}, {{0, 0}}, {{0, 1}}, {{0, 0}, {1, 0}}}) {
    CHECK(occurs_negatively(q, a) == oracle::occurs_negatively(q, a));
  }
}
