#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qw {

using Element = int;
using Tuple = std::vector<Element>;

// Upper bound on universe sizes accepted by constructors. Defaults to 8 and
// can be raised with the QW_MAX_UNIVERSE environment variable.
int max_universe();

// A universe {0, ..., n-1}.
class Universe {
 public:
  explicit Universe(int n);

  int size() const noexcept { return n_; }
  bool contains(Element e) const noexcept { return e >= 0 && e < n_; }

  friend bool operator==(Universe, Universe) = default;

 private:
  int n_;
};

// n^k, throwing InvalidInput when it does not fit in 63 bits.
std::size_t power(int n, int k);

// Row-major index sum t_i * n^(k-1-i).
std::size_t tuple_index(const Tuple& t, int n);
Tuple index_tuple(std::size_t index, int n, int k);

// Enumerates n^k in row-major order.
std::vector<Tuple> all_tuples(int n, int k);

}  // namespace qw
