#pragma once

#include <set>
#include <string>
#include <vector>

#include "qw/error.hpp"
#include "qw/kernel/universe.hpp"

namespace qw {

struct Term {
  enum class Kind { variable, constant };

  Kind kind = Kind::variable;
  std::string name;  // variables only
  Element value = 0;  // constants only

  static Term var(std::string name) { return {Kind::variable, std::move(name), 0}; }
  static Term constant(Element value) { return {Kind::constant, {}, value}; }
  bool is_variable() const noexcept { return kind == Kind::variable; }

  friend bool operator==(const Term&, const Term&) = default;
};

enum class FormulaKind { truth, falsity, eq, rel, fix, negation, conjunction, disjunction, exists, forall, quant };

// One node type for the whole language. Fields that a kind does not use stay
// empty: `name` is the symbol of rel/fix/quant, `terms` the arguments of
// eq/rel/fix, `vars` the bound variables of exists/forall/quant.
struct Formula {
  FormulaKind kind = FormulaKind::truth;
  std::string name;
  std::vector<Term> terms;
  std::vector<std::string> vars;
  std::vector<Formula> children;
  SourcePos pos;

  static Formula truth() { return Formula{}; }
  static Formula falsity();
  static Formula eq(Term a, Term b);
  static Formula rel(std::string symbol, std::vector<Term> args);
  static Formula fix(std::string symbol, std::vector<Term> args);
  static Formula negate(Formula f);
  static Formula conj(std::vector<Formula> fs);
  static Formula disj(std::vector<Formula> fs);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);
  static Formula quant(std::string symbol, std::vector<std::string> vars, Formula body);

  const Formula& body() const { return children.front(); }

  // Structural equality; source positions are ignored.
  friend bool operator==(const Formula& a, const Formula& b);
};

std::set<std::string> free_variables(const Formula& f);
std::size_t formula_size(const Formula& f);

std::string render_formula(const Formula& f);

}  // namespace qw
