#include "qw/logic/formula.hpp"

#include <algorithm>

namespace qw {
namespace {

Formula node(FormulaKind kind) {
  Formula f;
  f.kind = kind;
  return f;
}

void collect_free(const Formula& f, std::multiset<std::string>& bound, std::set<std::string>& out) {
  auto term = [&](const Term& t) {
    if (t.is_variable() && bound.count(t.name) == 0) out.insert(t.name);
  };
  for (const auto& t : f.terms) term(t);
  for (const auto& v : f.vars) bound.insert(v);
  for (const auto& c : f.children) collect_free(c, bound, out);
  for (const auto& v : f.vars) bound.erase(bound.find(v));
}

void render_term(const Term& t, std::string& out) {
  out += t.is_variable() ? t.name : std::to_string(t.value);
}

void render(const Formula& f, std::string& out) {
  switch (f.kind) {
    case FormulaKind::truth: out += "true"; return;
    case FormulaKind::falsity: out += "false"; return;
    case FormulaKind::eq: out += "(="; break;
    case FormulaKind::rel: out += "(rel " + f.name; break;
    case FormulaKind::fix: out += "(fix " + f.name; break;
    case FormulaKind::negation: out += "(not"; break;
    case FormulaKind::conjunction: out += "(and"; break;
    case FormulaKind::disjunction: out += "(or"; break;
    case FormulaKind::exists: out += "(exists " + f.vars.front(); break;
    case FormulaKind::forall: out += "(forall " + f.vars.front(); break;
    case FormulaKind::quant: {
      out += "(Q " + f.name + " (";
      for (std::size_t i = 0; i < f.vars.size(); ++i) {
        if (i) out += ' ';
        out += f.vars[i];
      }
      out += ')';
      break;
    }
  }
  for (const auto& t : f.terms) {
    out += ' ';
    render_term(t, out);
  }
  for (const auto& c : f.children) {
    out += ' ';
    render(c, out);
  }
  out += ')';
}

}  // namespace

Formula Formula::falsity() { return node(FormulaKind::falsity); }

Formula Formula::eq(Term a, Term b) {
  Formula f = node(FormulaKind::eq);
  f.terms = {std::move(a), std::move(b)};
  return f;
}

Formula Formula::rel(std::string symbol, std::vector<Term> args) {
  Formula f = node(FormulaKind::rel);
  f.name = std::move(symbol);
  f.terms = std::move(args);
  return f;
}

Formula Formula::fix(std::string symbol, std::vector<Term> args) {
  Formula f = node(FormulaKind::fix);
  f.name = std::move(symbol);
  f.terms = std::move(args);
  return f;
}

Formula Formula::negate(Formula g) {
  Formula f = node(FormulaKind::negation);
  f.children.push_back(std::move(g));
  return f;
}

Formula Formula::conj(std::vector<Formula> fs) {
  Formula f = node(FormulaKind::conjunction);
  f.children = std::move(fs);
  return f;
}

Formula Formula::disj(std::vector<Formula> fs) {
  Formula f = node(FormulaKind::disjunction);
  f.children = std::move(fs);
  return f;
}

Formula Formula::exists(std::string var, Formula body) {
  Formula f = node(FormulaKind::exists);
  f.vars = {std::move(var)};
  f.children.push_back(std::move(body));
  return f;
}

Formula Formula::forall(std::string var, Formula body) {
  Formula f = node(FormulaKind::forall);
  f.vars = {std::move(var)};
  f.children.push_back(std::move(body));
  return f;
}

Formula Formula::quant(std::string symbol, std::vector<std::string> vars, Formula body) {
  Formula f = node(FormulaKind::quant);
  f.name = std::move(symbol);
  f.vars = std::move(vars);
  f.children.push_back(std::move(body));
  return f;
}

bool operator==(const Formula& a, const Formula& b) {
  return a.kind == b.kind && a.name == b.name && a.terms == b.terms && a.vars == b.vars && a.children == b.children;
}

std::set<std::string> free_variables(const Formula& f) {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::size_t formula_size(const Formula& f) {
  std::size_t size = 1;
  for (const auto& c : f.children) size += formula_size(c);
  return size;
}

std::string render_formula(const Formula& f) {
  std::string out;
  render(f, out);
  return out;
}

}  // namespace qw
