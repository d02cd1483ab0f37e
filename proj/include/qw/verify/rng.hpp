#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qw/kernel/permutation.hpp"
#include "qw/kernel/relation.hpp"

namespace qw {

// Seeded generator; every corpus and property test draws from one of these
// so runs are reproducible from the seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform enough for test generation; n must be positive.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return (engine_() & 1u) != 0; }

  Permutation permutation(int n) {
    std::vector<Element> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
      std::swap(images[static_cast<std::size_t>(i)], images[below(static_cast<std::uint64_t>(i) + 1)]);
    }
    return Permutation(std::move(images));
  }

  Relation relation(int n, int k) {
    Relation r(n, k);
    for (std::size_t i = 0; i < r.slots(); ++i) {
      if (coin()) r.set(i);
    }
    return r;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qw
