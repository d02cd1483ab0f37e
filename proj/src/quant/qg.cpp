#include "qw/quant/qg.hpp"

#include "qw/error.hpp"

namespace qw {

Relation chain_relation(int universe, int j) {
  (void)Universe{universe};
  if (j < 0 || j >= universe) throw InvalidInput("chain index must lie in 0..n-1");
  Relation c(universe, 2);
  c.insert({0, 0});
  for (int i = 0; i < j; ++i) c.insert({i, i + 1});
  return c;
}

ChainGroupQuantifier build_qg(const Group& g) { return ChainGroupQuantifier(g); }

}  // namespace qw
