#include "qw/logic/eval.hpp"

#include <algorithm>

#include "qw/error.hpp"

namespace qw {

Evaluator::Evaluator(const Formula& f, const Signature& signature, int universe, const Environment& env,
                     std::vector<std::string> free_vars)
    : signature_(signature), n_(Universe{universe}.size()), free_(std::move(free_vars)) {
  std::vector<std::pair<std::string, int>> scope;
  for (const auto& v : free_) {
    if (std::any_of(scope.begin(), scope.end(), [&](const auto& s) { return s.first == v; })) {
      throw InvalidInput("variable '" + v + "' listed twice");
    }
    scope.emplace_back(v, slot_count_++);
  }
  quantifiers_ = env.quantifiers;
  fixed_ = env.fixed;
  root_ = compile(f, scope);
}

int Evaluator::compile(const Formula& f, std::vector<std::pair<std::string, int>>& scope) {
  Node node{f.kind, {}, {}, {}, 0, nullptr, nullptr};
  auto resolve = [&](const Term& t) {
    if (!t.is_variable()) {
      if (t.value < 0 || t.value >= n_) {
        throw InvalidInput("constant " + std::to_string(t.value) + " outside universe of size " + std::to_string(n_));
      }
      return Arg{-1, t.value};
    }
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      if (it->first == t.name) return Arg{it->second, 0};
    }
    throw InvalidInput("unbound variable '" + t.name + "'");
  };
  for (const auto& t : f.terms) node.args.push_back(resolve(t));
  switch (f.kind) {
    case FormulaKind::rel: {
      auto i = signature_.index_of(f.name);
      if (!i) throw InvalidInput("unknown relation symbol '" + f.name + "'");
      if (static_cast<int>(f.terms.size()) != signature_.arities()[*i]) {
        throw InvalidInput("relation '" + f.name + "' used with the wrong number of arguments");
      }
      node.symbol = *i;
      break;
    }
    case FormulaKind::fix: {
      auto it = fixed_.find(f.name);
      if (it == fixed_.end()) throw InvalidInput("unknown fixed symbol '" + f.name + "'");
      if (it->second.universe() != n_) throw InvalidInput("fixed symbol '" + f.name + "' has another universe");
      if (static_cast<int>(f.terms.size()) != it->second.arity()) {
        throw InvalidInput("fixed symbol '" + f.name + "' used with the wrong number of arguments");
      }
      node.fixed = &it->second;
      break;
    }
    case FormulaKind::quant: {
      auto it = quantifiers_.find(f.name);
      if (it == quantifiers_.end()) throw InvalidInput("unknown quantifier '" + f.name + "'");
      if (it->second.universe() != n_) throw InvalidInput("quantifier '" + f.name + "' has another universe");
      if (static_cast<int>(f.vars.size()) != it->second.arity()) {
        throw InvalidInput("quantifier '" + f.name + "' binds the wrong number of variables");
      }
      node.quantifier = &it->second;
      break;
    }
    case FormulaKind::eq:
      if (f.terms.size() != 2) throw InvalidInput("equality needs two terms");
      break;
    case FormulaKind::negation:
      if (f.children.size() != 1) throw InvalidInput("negation needs one operand");
      break;
    default:
      break;
  }
  for (const auto& v : f.vars) {
    node.slots.push_back(slot_count_++);
    scope.emplace_back(v, node.slots.back());
  }
  for (const auto& c : f.children) node.children.push_back(compile(c, scope));
  scope.resize(scope.size() - f.vars.size());
  nodes_.push_back(std::move(node));
  return static_cast<int>(nodes_.size()) - 1;
}

std::size_t Evaluator::index_of(const Node& node, const std::vector<Element>& values) const {
  std::size_t idx = 0;
  for (const auto& a : node.args) {
    idx = idx * static_cast<std::size_t>(n_) +
          static_cast<std::size_t>(a.slot < 0 ? a.value : values[static_cast<std::size_t>(a.slot)]);
  }
  return idx;
}

bool Evaluator::eval(int id, const Structure& m, std::vector<Element>& values) const {
  const Node& node = nodes_[static_cast<std::size_t>(id)];
  auto value = [&](const Arg& a) { return a.slot < 0 ? a.value : values[static_cast<std::size_t>(a.slot)]; };
  switch (node.kind) {
    case FormulaKind::truth: return true;
    case FormulaKind::falsity: return false;
    case FormulaKind::eq: return value(node.args[0]) == value(node.args[1]);
    case FormulaKind::rel: return m.relation(node.symbol).test(index_of(node, values));
    case FormulaKind::fix: return node.fixed->test(index_of(node, values));
    case FormulaKind::negation: return !eval(node.children[0], m, values);
    case FormulaKind::conjunction:
      return std::all_of(node.children.begin(), node.children.end(), [&](int c) { return eval(c, m, values); });
    case FormulaKind::disjunction:
      return std::any_of(node.children.begin(), node.children.end(), [&](int c) { return eval(c, m, values); });
    case FormulaKind::exists:
    case FormulaKind::forall: {
      const bool want = node.kind == FormulaKind::exists;
      auto& slot = values[static_cast<std::size_t>(node.slots[0])];
      for (Element x = 0; x < n_; ++x) {
        slot = x;
        if (eval(node.children[0], m, values) == want) return want;
      }
      return !want;
    }
    case FormulaKind::quant: {
      const int k = static_cast<int>(node.slots.size());
      Relation d(n_, k);
      const std::size_t total = d.slots();
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (int i = k - 1; i >= 0; --i) {
          values[static_cast<std::size_t>(node.slots[static_cast<std::size_t>(i)])] =
              static_cast<Element>(rest % static_cast<std::size_t>(n_));
          rest /= static_cast<std::size_t>(n_);
        }
        if (eval(node.children[0], m, values)) d.set(idx);
      }
      return node.quantifier->contains(d);
    }
  }
  return false;
}

bool Evaluator::operator()(const Structure& m, std::span<const Element> args) const {
  if (m.universe() != n_ || m.signature() != signature_) throw InvalidInput("structure does not match evaluator");
  if (args.size() != free_.size()) throw InvalidInput("wrong number of arguments");
  std::vector<Element> values(static_cast<std::size_t>(slot_count_), 0);
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] < 0 || args[i] >= n_) throw InvalidInput("argument outside the universe");
    values[i] = args[i];
  }
  return eval(root_, m, values);
}

Relation Evaluator::defined_set(const Structure& m) const {
  const int k = static_cast<int>(free_.size());
  Relation out(n_, k);
  Tuple t;
  for (std::size_t idx = 0; idx < out.slots(); ++idx) {
    t = index_tuple(idx, n_, k);
    if ((*this)(m, t)) out.set(idx);
  }
  return out;
}

bool evaluate(const Formula& f, const Structure& m, const Environment& env, const Assignment& asg) {
  std::vector<std::string> vars;
  std::vector<Element> values;
  for (const auto& [v, x] : asg) {
    vars.push_back(v);
    values.push_back(x);
  }
  return Evaluator(f, m.signature(), m.universe(), env, vars)(m, values);
}

Relation defined_set(const Formula& f, const Structure& m, const Environment& env,
                     const std::vector<std::string>& vars) {
  return Evaluator(f, m.signature(), m.universe(), env, vars).defined_set(m);
}

StructureClass defined_class(const Formula& f, const StructureSpace& space, const Environment& env,
                             const Limits& limits) {
  if (!free_variables(f).empty()) throw InvalidInput("defined_class needs a sentence");
  const std::uint64_t total = space.count();
  if (total > limits.max_enum) {
    throw CapabilityError("structure space of size " + std::to_string(total) + " exceeds the enumeration limit");
  }
  const Evaluator ev(f, space.signature(), space.universe(), env, {});
  StructureClass out;
  for (std::uint64_t i = 0; i < total; ++i) {
    Structure m = space.at(i);
    if (ev(m, {})) out.insert(std::move(m));
  }
  return out;
}

}  // namespace qw
