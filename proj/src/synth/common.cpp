#include "qw/synth/common.hpp"

namespace qw {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::no: return "false";
    case Verdict::yes: return "true";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict verdict_of(bool b) { return b ? Verdict::yes : Verdict::no; }

std::vector<std::string> numbered_vars(const std::string& prefix, int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Formula tuple_equal(const std::vector<Term>& xs, const std::vector<Term>& ys) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < xs.size(); ++i) parts.push_back(Formula::eq(xs[i], ys[i]));
  return parts.size() == 1 ? std::move(parts.front()) : Formula::conj(std::move(parts));
}

std::vector<Term> var_terms(const std::vector<std::string>& names) {
  std::vector<Term> out;
  for (const auto& n : names) out.push_back(Term::var(n));
  return out;
}

}  // namespace qw
