#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "qw/error.hpp"
#include "qw/quant/analysis.hpp"
#include "qw/quant/combo.hpp"
#include "qw/quant/qg.hpp"
#include "qw/verify/corpus.hpp"
#include "qw/verify/oracles.hpp"
#include "qw/verify/rng.hpp"

using namespace qw;

namespace {

Relation rel(int n, int k, std::vector<Tuple> ts) { return Relation::from_tuples(n, k, ts); }

Relation unary(int n, std::vector<Element> xs) {
  Relation r(n, 1);
  for (auto x : xs) r.insert({x});
  return r;
}

std::vector<Permutation> sorted(std::vector<Permutation> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("contains examples") {
  Quantifier q = PrincipalQuantifier(unary(3, {0}), PrincipalMode::superset);
  CHECK(q.contains(unary(3, {0, 2})));
  CHECK_FALSE(q.contains(unary(3, {2})));
  CHECK_THROWS_AS(q.contains(Relation(3, 2)), InvalidInput);
  Quantifier chain = build_qg(Group::trivial(3));
  CHECK(chain.contains(rel(3, 2, {{0, 0}, {0, 1}, {1, 2}})));
  CHECK_FALSE(chain.contains(rel(3, 2, {{0, 0}, {1, 1}})));
}

TEST_CASE("is_downward_closed examples") {
  CHECK(is_downward_closed(build_qg(Group::symmetric(3))));
  CHECK_FALSE(is_downward_closed(PrincipalQuantifier(unary(3, {0}), PrincipalMode::superset)));
  CHECK(is_downward_closed(ExtensionalQuantifier(2, 2, {Relation(2, 2), rel(2, 2, {{0, 0}})})));
}

TEST_CASE("supports and support examples") {
  Quantifier q = PrincipalQuantifier(unary(4, {0}), PrincipalMode::superset);
  CHECK(supports(q, Relation::full(4, 1)));
  CHECK(supports(q, unary(4, {0})));
  CHECK_FALSE(supports(q, unary(4, {})));
  CHECK(support(q) == unary(4, {0}));
  CHECK(support(all_relations_quantifier(3, 2)).empty());
  Quantifier e = ExtensionalQuantifier(3, 1, {unary(3, {0}), unary(3, {1})});
  CHECK(support(e) == Relation::full(3, 1));
  CHECK_THROWS_AS(supports(q, Relation(4, 2)), InvalidInput);
}

TEST_CASE("automorphisms examples") {
  CHECK(automorphisms(all_relations_quantifier(3, 1)).order() == 6);
  CHECK(automorphisms(build_qg(Group::trivial(3))).order() == 1);
  PrincipalComboQuantifier combo(4, 1, {unary(4, {0, 1}), unary(4, {2, 3})}, {{1, -1}});
  Group aut = automorphisms(combo);
  CHECK(aut == Group::generate(4, {Permutation({1, 0, 2, 3}), Permutation({0, 1, 3, 2})}));
}

TEST_CASE("compatible examples") {
  Quantifier q = build_qg(Group::trivial(3));
  CHECK(compatible(q, PartialInjection(3, {})));
  CHECK(compatible(q, PartialInjection(3, {0})));
  CHECK_FALSE(compatible(q, PartialInjection(3, {1})));
  CHECK_THROWS_AS(compatible(PrincipalQuantifier(unary(3, {0}), PrincipalMode::superset), PartialInjection(3, {0})),
                  DomainError);
}

TEST_CASE("is_good examples") {
  CHECK(is_good(all_relations_quantifier(3, 1)));
  CHECK(is_good(build_qg(Group::symmetric(3))));
  CHECK(is_good(build_qg(Group::trivial(4))));
  // {∅, {0}, {1}} on 3 elements: the compatible injections are exactly those
  // avoiding 2 on their domain, and each extends to an automorphism fixing 2.
  Quantifier q = ExtensionalQuantifier(3, 1, {unary(3, {}), unary(3, {0}), unary(3, {1})});
  CHECK(is_good(q));
  CHECK(oracle::is_good(q));
  // Downward closure of {0,1} and {2}: 0 ↦ 2 is compatible (both singletons
  // are members) but no automorphism moves 0 to 2.
  Quantifier bad = DownwardGeneratedQuantifier(3, 1, {unary(3, {0, 1}), unary(3, {2})});
  CHECK_FALSE(is_good(bad));
  CHECK_FALSE(oracle::is_good(bad));
  auto violation = goodness_violation(bad);
  REQUIRE(violation.has_value());
  CHECK(oracle::compatible(bad, *violation));
  CHECK_FALSE(is_good(PrincipalQuantifier(unary(3, {0}), PrincipalMode::superset)));
}

TEST_CASE("build_qg examples") {
  Quantifier trivial = build_qg(Group::trivial(3));
  const auto subsets = oracle::relations(3, 2);
  const auto members = std::count_if(subsets.begin(), subsets.end(), [&](const Relation& r) { return trivial.contains(r); });
  CHECK(members == 8);
  const auto s3 = build_qg(Group::symmetric(3));
  CHECK(s3.maximal_chains().size() == 6);
  const Group sym = Group::symmetric(3);
  for (const auto& g : sym.elements()) {
    CHECK(s3.contains(apply_to_relation(g, chain_relation(3, 2))));
    CHECK(s3.contains(apply_to_relation(g, chain_relation(3, 1))));
  }
  Quantifier one = build_qg(Group::trivial(1));
  CHECK(one.contains(Relation(1, 2)));
  CHECK(one.contains(Relation::full(1, 2)));
  CHECK(automorphisms(one).order() == 1);
}

TEST_CASE("hit_vector examples") {
  PrincipalComboQuantifier q(4, 1, {unary(4, {0, 1}), unary(4, {2, 3})}, {{1, -1}});
  CHECK(hit_vector(q, Relation::full(4, 1)) == SignVector{1, 1});
  CHECK(hit_vector(q, unary(4, {0, 1, 2})) == SignVector{1, -1});
  CHECK(hit_vector(q, unary(4, {})) == SignVector{-1, -1});
}

TEST_CASE("minimize_combo examples") {
  PrincipalComboQuantifier minimal(4, 1, {unary(4, {0, 1}), unary(4, {2, 3})}, {{1, -1}});
  CHECK(is_minimal(minimal));
  CHECK(minimize_combo(minimal).blocks() == minimal.blocks());
  PrincipalComboQuantifier fine(4, 1, {unary(4, {0}), unary(4, {1}), unary(4, {2, 3})}, {{1, 1, 1}, {1, 1, -1}});
  CHECK_FALSE(is_minimal(fine));
  auto merged = minimize_combo(fine);
  CHECK(merged.blocks() == std::vector<Relation>{unary(4, {0, 1}), unary(4, {2, 3})});
  CHECK(merged.signs() == std::vector<SignVector>{{1, 1}, {1, -1}});
}

TEST_CASE("combo_automorphisms examples") {
  PrincipalComboQuantifier one(4, 1, {unary(4, {0, 1}), unary(4, {2, 3})}, {{1, -1}});
  CHECK(combo_automorphisms(one).order() == 4);
  PrincipalComboQuantifier two(4, 1, {unary(4, {0, 1}), unary(4, {2, 3})}, {{1, -1}, {-1, 1}});
  CHECK(combo_automorphisms(two).order() == 8);
  PrincipalComboQuantifier whole(3, 2, {Relation::full(3, 2)}, {{1}});
  CHECK(combo_automorphisms(whole).order() == 6);
  PrincipalComboQuantifier fine(4, 1, {unary(4, {0}), unary(4, {1}), unary(4, {2, 3})}, {{1, 1, 1}, {1, 1, -1}});
  CHECK_THROWS_AS(combo_automorphisms(fine), DomainError);
}

TEST_CASE("support follows the definition and is order independent") {
  Rng rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    const Quantifier q = corpus::random_small_quantifier(rng);
    const Relation s = support(q);
    CHECK(s == oracle::support(q));
    CHECK(relevant_tuples(q) == s);
    CHECK(supports(q, s));
    for (std::size_t a : s.indices()) {
      Relation smaller = s;
      smaller.set(a, false);
      CHECK_FALSE(supports(q, smaller));
    }
    std::vector<std::size_t> order(s.slots());
    std::iota(order.begin(), order.end(), 0);
    for (int i = 0; i < 20; ++i) {
      rng.shuffle(order);
      CHECK(support(q, order) == s);
    }
    // Flip-wise and pairwise support agree, on both evaluation routes.
    const Limits tiny{1};
    for (int i = 0; i < 5; ++i) {
      const Relation candidate = rng.relation(q.universe(), q.arity());
      const bool pairwise = oracle::supports_pairwise(q, candidate);
      CHECK(supports(q, candidate) == pairwise);
      CHECK(supports(q, candidate, tiny) == pairwise);
    }
    CHECK(support(q, tiny) == s);
  }
}

TEST_CASE("conversion, automorphisms and downward closure match brute force") {
  Rng rng(202);
  for (int trial = 0; trial < 150; ++trial) {
    const Quantifier q = corpus::random_small_quantifier(rng);
    const Quantifier e = to_extensional(q);
    for (const auto& r : oracle::relations(q.universe(), q.arity())) CHECK(e.contains(r) == q.contains(r));
    const Group aut = automorphisms(q);
    CHECK(aut.elements() == sorted(oracle::automorphisms(q)));
    CHECK(automorphisms(e) == aut);
    CHECK(is_downward_closed(q) == oracle::downward_closed(q));
  }
}

TEST_CASE("compatibility and goodness match brute force") {
  Rng rng(303);
  int dc = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Quantifier q = corpus::random_small_quantifier(rng);
    if (!is_downward_closed(q)) {
      CHECK_FALSE(is_good(q));
      continue;
    }
    ++dc;
    for (int i = 0; i < 6; ++i) {
      const auto p = corpus::random_injection(rng, q.universe(), rng.between(0, q.universe()));
      CHECK(compatible(q, p) == oracle::compatible(q, p));
    }
    const Group aut = automorphisms(q);
    for (const auto& g : aut.elements()) {
      const int m = rng.between(0, q.universe());
      CHECK(compatible(q, PartialInjection(q.universe(), {g.images().begin(), g.images().begin() + m})));
    }
    CHECK(is_good(q) == oracle::is_good(q));
  }
  CHECK(dc > 50);
}

TEST_CASE("chain rule agrees with brute force on Q_G") {
  Rng rng(404);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      const Group g = corpus::random_group(rng, n, rng.between(0, 2));
      const Quantifier q = build_qg(g);
      CHECK(automorphisms(q) == g);
      CHECK(sorted(oracle::automorphisms(q)) == g.elements());
      CHECK(is_good(q));
    }
  }
  for (int trial = 0; trial < 10; ++trial) {
    const Group g = corpus::random_group(rng, 5, rng.between(0, 2));
    CHECK(automorphisms(build_qg(g)) == g);
    CHECK(is_good(build_qg(g)));
  }
}

TEST_CASE("combo minimization and automorphisms") {
  Rng rng(505);
  for (int trial = 0; trial < 120; ++trial) {
    const int d = trial % 4 == 0 ? 2 : 1;
    const int n = d == 2 ? rng.between(1, 2) : rng.between(1, 4);
    const auto q = corpus::random_combo(rng, n, d, 4, 4);
    const auto m = minimize_combo(q);
    CHECK(is_minimal(m));
    for (const auto& r : oracle::relations(n, d)) CHECK(q.contains(r) == m.contains(r));
    if (!is_minimal(q)) CHECK(std::is_sorted(m.signs().begin(), m.signs().end(), std::greater<>()));
    CHECK(combo_automorphisms(m).elements() == sorted(oracle::automorphisms(m)));
  }
}
