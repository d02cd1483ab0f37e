#include "qw/kernel/group.hpp"

#include <algorithm>
#include <set>

#include "qw/error.hpp"

namespace qw {
namespace {

std::vector<Permutation> closure(int n, const std::vector<Permutation>& generators) {
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        Permutation y = g * x;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

Group::Group(int n, std::vector<Permutation> generators, std::vector<Permutation> elements)
    : n_(n),
      generators_(std::make_shared<const std::vector<Permutation>>(std::move(generators))),
      elements_(std::make_shared<const std::vector<Permutation>>(std::move(elements))) {}

Group Group::generate(int n, std::vector<Permutation> generators) {
  (void)Universe{n};
  for (const auto& g : generators) {
    if (g.universe() != n) throw InvalidInput("generator universe differs from group universe");
  }
  auto elements = closure(n, generators);
  return Group(n, std::move(generators), std::move(elements));
}

Group Group::trivial(int n) { return generate(n, {}); }

Group Group::symmetric(int n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Element> swap(static_cast<std::size_t>(n));
    std::vector<Element> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      swap[static_cast<std::size_t>(i)] = i;
      cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    }
    std::swap(swap[0], swap[1]);
    gens.emplace_back(swap);
    if (n >= 3) gens.emplace_back(cycle);
  }
  return Group(n, gens, all_permutations(n));
}

Group Group::from_elements(int n, std::vector<Permutation> elements) {
  (void)Universe{n};
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !std::binary_search(elements.begin(), elements.end(), Permutation::identity(n))) {
    throw InvalidInput("element set does not contain the identity");
  }
  std::vector<Permutation> gens;
  std::vector<Permutation> span = closure(n, gens);
  for (const auto& g : elements) {
    if (g.universe() != n) throw InvalidInput("element universe differs from group universe");
    if (!std::binary_search(span.begin(), span.end(), g)) {
      gens.push_back(g);
      span = closure(n, gens);
    }
  }
  if (span != elements) throw InvalidInput("element set is not closed under composition");
  return Group(n, std::move(gens), std::move(elements));
}

bool Group::contains(const Permutation& g) const {
  return std::binary_search(elements_->begin(), elements_->end(), g);
}

}  // namespace qw
