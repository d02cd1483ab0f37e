#include "qw/logic/structure.hpp"

#include <algorithm>

#include "qw/error.hpp"
#include "qw/logic/parser.hpp"

namespace qw {

Signature::Signature(std::map<std::string, int> arities) {
  for (const auto& [name, arity] : arities) add(name, arity);
}

void Signature::add(const std::string& name, int arity) {
  if (!is_identifier(name)) throw InvalidInput("invalid symbol name '" + name + "'");
  if (arity < 1) throw InvalidInput("symbol '" + name + "' needs arity at least 1");
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), name);
  if (it != symbols_.end() && *it == name) throw InvalidInput("duplicate symbol '" + name + "'");
  const auto pos = it - symbols_.begin();
  symbols_.insert(it, name);
  arities_.insert(arities_.begin() + pos, arity);
}

std::optional<std::size_t> Signature::index_of(const std::string& name) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), name);
  if (it == symbols_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

Structure::Structure(Signature signature, int universe) : signature_(std::move(signature)), n_(universe) {
  (void)Universe{universe};
  for (int a : signature_.arities()) relations_.emplace_back(n_, a);
}

Structure::Structure(Signature signature, int universe, std::vector<Relation> relations)
    : signature_(std::move(signature)), n_(universe), relations_(std::move(relations)) {
  (void)Universe{universe};
  if (relations_.size() != signature_.size()) throw InvalidInput("structure must interpret every symbol");
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (relations_[i].universe() != n_ || relations_[i].arity() != signature_.arities()[i]) {
      throw InvalidInput("relation for '" + signature_.symbols()[i] + "' has the wrong shape");
    }
  }
}

const Relation& Structure::relation(const std::string& name) const {
  auto i = signature_.index_of(name);
  if (!i) throw InvalidInput("unknown symbol '" + name + "'");
  return relations_[*i];
}

void Structure::set_relation(const std::string& name, Relation r) {
  auto i = signature_.index_of(name);
  if (!i) throw InvalidInput("unknown symbol '" + name + "'");
  if (r.universe() != n_ || r.arity() != signature_.arities()[*i]) {
    throw InvalidInput("relation for '" + name + "' has the wrong shape");
  }
  relations_[*i] = std::move(r);
}

std::strong_ordering operator<=>(const Structure& a, const Structure& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.signature_ <=> b.signature_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.relations_.begin(), a.relations_.end(), b.relations_.begin(),
                                                b.relations_.end());
}

Structure apply_to_structure(const Permutation& g, const Structure& m) {
  if (g.universe() != m.universe()) throw InvalidInput("permutation and structure universes differ");
  std::vector<Relation> moved;
  moved.reserve(m.relations().size());
  for (const auto& r : m.relations()) moved.push_back(apply_to_relation(g, r));
  return Structure(m.signature(), m.universe(), std::move(moved));
}

StructureSpace::StructureSpace(Signature signature, int universe)
    : signature_(std::move(signature)), n_(Universe{universe}.size()) {
  for (int a : signature_.arities()) bits_ += power(n_, a);
}

std::uint64_t StructureSpace::count() const {
  if (bits_ > 62) throw CapabilityError("structure space has 2^" + std::to_string(bits_) + " elements");
  return std::uint64_t{1} << bits_;
}

Structure StructureSpace::at(std::uint64_t index) const {
  if (index >= count()) throw InvalidInput("structure index out of range");
  std::vector<Relation> rels;
  for (int a : signature_.arities()) {
    const std::size_t slots = power(n_, a);
    const std::uint64_t mask = slots == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << slots) - 1;
    rels.push_back(Relation::from_bits(n_, a, index & mask));
    index >>= slots;
  }
  return Structure(signature_, n_, std::move(rels));
}

std::uint64_t StructureSpace::index_of(const Structure& m) const {
  if (m.signature() != signature_ || m.universe() != n_) throw InvalidInput("structure is outside this space");
  (void)count();
  std::uint64_t index = 0;
  std::size_t shift = 0;
  for (const auto& r : m.relations()) {
    index |= r.to_bits() << shift;
    shift += r.slots();
  }
  return index;
}

StructureClass StructureSpace::all(std::uint64_t limit) const {
  const std::uint64_t total = count();
  if (total > limit) {
    throw CapabilityError("structure space of size " + std::to_string(total) + " exceeds the enumeration limit");
  }
  StructureClass out;
  for (std::uint64_t i = 0; i < total; ++i) out.insert(at(i));
  return out;
}

}  // namespace qw
