#include <algorithm>
#include <random>

#include "doctest.h"
#include "qw/error.hpp"
#include "qw/kernel/group.hpp"
#include "qw/kernel/orbits.hpp"

using namespace qw;

namespace {

Relation rel(int n, int k, std::vector<Tuple> ts) { return Relation::from_tuples(n, k, ts); }

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Element> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

Relation random_relation(int n, int k, std::mt19937_64& rng) {
  Relation r(n, k);
  for (std::size_t i = 0; i < r.slots(); ++i) {
    if (rng() & 1) r.set(i);
  }
  return r;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

}  // namespace

TEST_CASE("tuple_index is row-major") {
  CHECK(tuple_index({0, 0}, 3) == 0);
  CHECK(tuple_index({1, 2}, 3) == 5);
  CHECK(tuple_index({2}, 4) == 2);
  CHECK_THROWS_AS(tuple_index({3}, 3), InvalidInput);
  for (std::size_t i = 0; i < 64; ++i) CHECK(tuple_index(index_tuple(i, 4, 3), 4) == i);
}

TEST_CASE("relation basics") {
  Relation r = rel(3, 2, {{0, 1}, {2, 2}});
  CHECK(r.slots() == 9);
  CHECK(r.count() == 2);
  CHECK(r.contains({0, 1}));
  CHECK_FALSE(r.contains({1, 0}));
  CHECK(r.complement().count() == 7);
  CHECK((r | r.complement()) == Relation::full(3, 2));
  CHECK(rel(3, 2, {{0, 1}}).is_subset_of(r));
  CHECK_THROWS_AS(r.is_subset_of(Relation(3, 1)), InvalidInput);
  CHECK(r.tuples() == std::vector<Tuple>{{0, 1}, {2, 2}});
  // Wide relations span several words.
  Relation wide = Relation::full(5, 3);
  CHECK(wide.count() == 125);
  CHECK(wide.complement().empty());
}

TEST_CASE("apply_to_relation examples") {
  CHECK(apply_to_relation(Permutation::identity(3), rel(3, 2, {{0, 1}})) == rel(3, 2, {{0, 1}}));
  CHECK(apply_to_relation(Permutation({1, 0, 2}), rel(3, 2, {{0, 1}})) == rel(3, 2, {{1, 0}}));
  CHECK(apply_to_relation(Permutation({1, 2, 0}), rel(3, 2, {{0, 0}, {0, 1}})) ==
        rel(3, 2, {{1, 1}, {1, 2}}));
  CHECK_THROWS_AS(apply_to_relation(Permutation({1, 0}), rel(3, 1, {{0}})), InvalidInput);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidInput);
}

TEST_CASE("apply_to_relation is an action") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int k = 1 + static_cast<int>(rng() % 3);
    auto g = random_permutation(n, rng);
    auto h = random_permutation(n, rng);
    auto r = random_relation(n, k, rng);
    CHECK(apply_to_relation(g * h, r) == apply_to_relation(g, apply_to_relation(h, r)));
    CHECK(apply_to_relation(g, r).count() == r.count());
  }
}

TEST_CASE("group_from_generators examples") {
  CHECK(Group::generate(3, {}).order() == 1);
  CHECK(Group::generate(3, {Permutation({1, 0, 2}), Permutation({1, 2, 0})}).order() == 6);
  auto c3 = Group::generate(3, {Permutation({1, 2, 0})});
  CHECK(c3.order() == 3);
  CHECK(c3.contains(Permutation({2, 0, 1})));
  CHECK_FALSE(c3.contains(Permutation({1, 0, 2})));
  CHECK(Group::symmetric(4).order() == 24);
}

TEST_CASE("generated groups are closed and Lagrange holds") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<Permutation> gens;
    for (int i = 0, c = static_cast<int>(rng() % 3); i < c; ++i) gens.push_back(random_permutation(n, rng));
    auto g = Group::generate(n, gens);
    CHECK(factorial(n) % g.order() == 0);
    CHECK(g.contains(Permutation::identity(n)));
    for (const auto& x : g.elements()) {
      CHECK(g.contains(x.inverse()));
      for (const auto& y : gens) CHECK(g.contains(x * y));
    }
    auto rebuilt = Group::from_elements(n, g.elements());
    CHECK(rebuilt == g);
    CHECK(Group::generate(n, rebuilt.generators()) == g);
  }
}

TEST_CASE("orbit_of_tuple examples") {
  auto c3 = Group::generate(3, {Permutation({1, 2, 0})});
  CHECK(orbit_of_tuple(Group::trivial(3), {0, 1}) == std::set<Tuple>{{0, 1}});
  CHECK(orbit_of_tuple(c3, {0}) == std::set<Tuple>{{0}, {1}, {2}});
  CHECK(orbit_of_tuple(c3, {0, 1}) == std::set<Tuple>{{0, 1}, {1, 2}, {2, 0}});
}

TEST_CASE("orbit_equivalent examples") {
  auto c3 = Group::generate(3, {Permutation({1, 2, 0})});
  CHECK(orbit_equivalent(c3, {1, 1}, {1, 1}));
  CHECK_FALSE(orbit_equivalent(Group::trivial(3), {0}, {1}));
  CHECK(orbit_equivalent(c3, {0, 1}, {2, 0}));
  CHECK_THROWS_AS(orbit_equivalent(c3, {0}, {0, 1}), InvalidInput);
}

TEST_CASE("orbits partition and orbit-stabilizer") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    auto g = Group::generate(n, {random_permutation(n, rng), random_permutation(n, rng)});
    const int len = static_cast<int>(rng() % 3);
    Tuple a;
    for (int i = 0; i < len; ++i) a.push_back(static_cast<Element>(rng() % static_cast<unsigned>(n)));
    auto orbit = orbit_of_tuple(g, a);
    CHECK(orbit.count(a) == 1);
    CHECK(orbit.size() * stabilizer(g, a).size() == g.order());
    for (const auto& b : orbit) {
      CHECK(orbit_of_tuple(g, b) == orbit);
      CHECK(orbit_equivalent(g, a, b));
    }
  }
}

TEST_CASE("orbit_of_relation examples") {
  Relation r = rel(3, 2, {{0, 1}});
  CHECK(orbit_of_relation(Group::trivial(3), r) == std::set<Relation>{r});
  CHECK(orbit_of_relation(Group::symmetric(3), rel(3, 2, {{0, 0}})) ==
        std::set<Relation>{rel(3, 2, {{0, 0}}), rel(3, 2, {{1, 1}}), rel(3, 2, {{2, 2}})});
  CHECK(orbit_of_relation(Group::generate(3, {Permutation({1, 0, 2})}), r) ==
        std::set<Relation>{rel(3, 2, {{0, 1}}), rel(3, 2, {{1, 0}})});
}

TEST_CASE("downward_closure examples") {
  Relation empty(3, 2);
  CHECK(downward_closure({empty}) == std::set<Relation>{empty});
  CHECK(downward_closure({rel(3, 2, {{0, 0}, {0, 1}})}) ==
        std::set<Relation>{empty, rel(3, 2, {{0, 0}}), rel(3, 2, {{0, 1}}), rel(3, 2, {{0, 0}, {0, 1}})});
  CHECK(downward_closure({rel(3, 2, {{0, 0}}), rel(3, 2, {{1, 1}})}) ==
        std::set<Relation>{empty, rel(3, 2, {{0, 0}}), rel(3, 2, {{1, 1}})});
  CHECK_THROWS_AS(downward_closure({Relation(3, 1), Relation(3, 2)}), InvalidInput);
}

TEST_CASE("downward_closure is idempotent and monotone") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::set<Relation> f;
    for (int i = 0; i < 3; ++i) {
      Relation r(3, 1);
      for (std::size_t j = 0; j < 3; ++j) {
        if (rng() & 1) r.set(j);
      }
      f.insert(r);
    }
    auto closed = downward_closure(f);
    CHECK(downward_closure(closed) == closed);
    auto g = f;
    g.insert(Relation::full(3, 1));
    auto bigger = downward_closure(g);
    CHECK(std::includes(bigger.begin(), bigger.end(), closed.begin(), closed.end()));
  }
}

TEST_CASE("extend_partial_injection examples and property") {
  auto c3 = Group::generate(3, {Permutation({1, 2, 0})});
  CHECK(extend_partial_injection(PartialInjection(3, {}), c3).has_value());
  CHECK_FALSE(extend_partial_injection(PartialInjection(3, {1}), Group::trivial(3)).has_value());
  CHECK(extend_partial_injection(PartialInjection(3, {1, 2}), c3) == Permutation({1, 2, 0}));
  CHECK_THROWS_AS(PartialInjection(3, {1, 1}), InvalidInput);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    auto g = Group::generate(n, {random_permutation(n, rng)});
    for (const auto& p : all_partial_injections(n)) {
      auto ext = extend_partial_injection(p, g);
      const bool any = std::any_of(g.elements().begin(), g.elements().end(),
                                   [&](const Permutation& x) { return p.extended_by(x); });
      CHECK(ext.has_value() == any);
      if (ext) CHECK((g.contains(*ext) && p.extended_by(*ext)));
    }
  }
}

TEST_CASE("partial injections are enumerated completely") {
  // sum_{m<=n} n!/(n-m)!
  CHECK(all_partial_injections(1).size() == 2);
  CHECK(all_partial_injections(3).size() == 16);
  CHECK(all_partial_injections(4).size() == 65);
}
