#include "qw/kernel/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qw/error.hpp"

namespace qw {

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1 || n > max_universe()) {
    throw InvalidInput("permutation universe " + std::to_string(n) + " out of range");
  }
  std::vector<bool> seen(images_.size(), false);
  for (Element e : images_) {
    if (e < 0 || e >= n) throw InvalidInput("permutation image " + std::to_string(e) + " out of range");
    if (seen[static_cast<std::size_t>(e)]) throw InvalidInput("permutation images are not distinct");
    seen[static_cast<std::size_t>(e)] = true;
  }
}

Permutation Permutation::identity(int n) {
  (void)Universe{n};
  std::vector<Element> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<Element>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Element> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i])] = static_cast<Element>(i);
  }
  return Permutation(std::move(inv), Unchecked{});
}

Tuple Permutation::apply(const Tuple& t) const {
  Tuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0 || t[i] >= universe()) throw InvalidInput("tuple entry outside permutation universe");
    out[i] = images_[static_cast<std::size_t>(t[i])];
  }
  return out;
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  if (g.universe() != h.universe()) throw InvalidInput("composing permutations of different universes");
  std::vector<Element> out(h.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = g.images_[static_cast<std::size_t>(h.images_[i])];
  }
  return Permutation(std::move(out), Permutation::Unchecked{});
}

RelationAction::RelationAction(const Permutation& g, int arity)
    : n_(g.universe()), k_(arity), map_(power(g.universe(), arity)) {
  const std::size_t n = static_cast<std::size_t>(n_);
  for (std::size_t idx = 0; idx < map_.size(); ++idx) {
    std::size_t rest = idx;
    std::size_t out = 0;
    std::size_t scale = 1;
    for (int i = 0; i < k_; ++i) {
      const auto e = static_cast<Element>(rest % n);
      rest /= n;
      out += static_cast<std::size_t>(g(e)) * scale;
      scale *= n;
    }
    map_[idx] = static_cast<std::uint32_t>(out);
  }
}

Relation RelationAction::operator()(const Relation& r) const {
  if (r.universe() != n_ || r.arity() != k_) throw InvalidInput("relation shape does not match action");
  Relation out(n_, k_);
  for (std::size_t idx : r.indices()) out.set(map_[idx]);
  return out;
}

Relation apply_to_relation(const Permutation& g, const Relation& r) {
  if (g.universe() != r.universe()) throw InvalidInput("permutation and relation universes differ");
  return RelationAction(g, r.arity())(r);
}

std::vector<Permutation> all_permutations(int n) {
  (void)Universe{n};
  std::vector<Element> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace qw
