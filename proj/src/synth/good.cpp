#include "qw/synth/good.hpp"

#include "qw/error.hpp"
#include "qw/synth/common.hpp"

namespace qw {

Formula orbit_formula_good(const Quantifier& q, int m, const OrbitFormulaOptions& options, const Limits& limits) {
  const int n = q.universe();
  const int k = q.arity();
  if (m < 0 || m > n) throw InvalidInput("orbit formula arity must lie in 0..n");
  if (!is_good(q, limits)) throw DomainError("orbit formula needs a good quantifier");
  const std::size_t slots = power(m, k);
  if (!limits.enumerable(slots)) throw CapabilityError("too many subsets of m^k");

  const auto as = numbered_vars("a", m);
  const auto xs = numbered_vars("x", k);
  const auto x_terms = var_terms(xs);
  std::vector<Formula> conjuncts;
  if (options.distinct) {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        conjuncts.push_back(Formula::negate(Formula::eq(Term::var(as[i]), Term::var(as[j]))));
      }
    }
  }
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots); ++bits) {
    // I ⊆ m^k, read as a relation over n.
    Relation small = Relation::from_bits(m, k, bits);
    Relation lifted(n, k);
    std::vector<Formula> cases;
    for (const auto& t : small.tuples()) {
      lifted.insert(t);
      std::vector<Term> image;
      for (Element e : t) image.push_back(Term::var(as[static_cast<std::size_t>(e)]));
      cases.push_back(tuple_equal(x_terms, image));
    }
    Formula node = Formula::quant(options.quantifier_name, xs, Formula::disj(std::move(cases)));
    conjuncts.push_back(q.contains(lifted) ? std::move(node) : Formula::negate(std::move(node)));
  }
  return Formula::conj(std::move(conjuncts));
}

}  // namespace qw
