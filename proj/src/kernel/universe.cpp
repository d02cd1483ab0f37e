#include "qw/kernel/universe.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "qw/error.hpp"

namespace qw {

int max_universe() {
  static const int bound = [] {
    if (const char* env = std::getenv("QW_MAX_UNIVERSE")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 1 && v <= 64) return static_cast<int>(v);
    }
    return 8;
  }();
  return bound;
}

Universe::Universe(int n) : n_(n) {
  if (n < 1 || n > max_universe()) {
    throw InvalidInput("universe size " + std::to_string(n) + " outside 1.." +
                       std::to_string(max_universe()));
  }
}

std::size_t power(int n, int k) {
  if (n < 0 || k < 0) throw InvalidInput("negative base or exponent");
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (n != 0 && r > (std::numeric_limits<std::size_t>::max() >> 1) / static_cast<std::size_t>(n)) {
      throw InvalidInput("n^k overflows");
    }
    r *= static_cast<std::size_t>(n);
  }
  return r;
}

std::size_t tuple_index(const Tuple& t, int n) {
  std::size_t idx = 0;
  for (Element e : t) {
    if (e < 0 || e >= n) {
      throw InvalidInput("tuple entry " + std::to_string(e) + " outside universe of size " +
                         std::to_string(n));
    }
    idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(e);
  }
  return idx;
}

Tuple index_tuple(std::size_t index, int n, int k) {
  if (index >= power(n, k)) throw InvalidInput("tuple index out of range");
  Tuple t(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<Element>(index % static_cast<std::size_t>(n));
    index /= static_cast<std::size_t>(n);
  }
  return t;
}

std::vector<Tuple> all_tuples(int n, int k) {
  const std::size_t total = power(n, k);
  std::vector<Tuple> out;
  out.reserve(total);
  for (std::size_t i = 0; i < total; ++i) out.push_back(index_tuple(i, n, k));
  return out;
}

}  // namespace qw
