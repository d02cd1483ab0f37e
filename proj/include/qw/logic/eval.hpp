#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qw/logic/formula.hpp"
#include "qw/logic/structure.hpp"
#include "qw/quant/analysis.hpp"
#include "qw/quant/quantifier.hpp"

namespace qw {

// Interpretations that stay fixed across structures: named quantifiers and
// named relations (for example orbit relations).
struct Environment {
  std::map<std::string, Quantifier> quantifiers;
  std::map<std::string, Relation> fixed;
};

using Assignment = std::map<std::string, Element>;

// A formula resolved against a signature, universe and environment. Free
// variables become argument slots in the order given.
class Evaluator {
 public:
  Evaluator(const Formula& f, const Signature& signature, int universe, const Environment& env,
            std::vector<std::string> free_vars);
  // Nodes point into the owned maps, which survive a move but not a copy.
  Evaluator(const Evaluator&) = delete;
  Evaluator& operator=(const Evaluator&) = delete;
  Evaluator(Evaluator&&) noexcept = default;
  Evaluator& operator=(Evaluator&&) noexcept = default;

  int universe() const noexcept { return n_; }
  const std::vector<std::string>& free_vars() const noexcept { return free_; }

  bool operator()(const Structure& m, std::span<const Element> args) const;
  // Satisfying argument tuples, as a relation of arity |free_vars|.
  Relation defined_set(const Structure& m) const;

 private:
  struct Arg {
    int slot = -1;  // -1: constant
    Element value = 0;
  };
  struct Node {
    FormulaKind kind;
    std::vector<Arg> args;
    std::vector<int> children;
    std::vector<int> slots;
    std::size_t symbol = 0;
    const Relation* fixed = nullptr;
    const Quantifier* quantifier = nullptr;
  };

  int compile(const Formula& f, std::vector<std::pair<std::string, int>>& scope);
  bool eval(int node, const Structure& m, std::vector<Element>& values) const;
  std::size_t index_of(const Node& node, const std::vector<Element>& values) const;

  Signature signature_;
  int n_;
  std::vector<std::string> free_;
  std::vector<Node> nodes_;
  int root_ = 0;
  int slot_count_ = 0;
  // Environment entries are copied so the evaluator owns what it points to.
  std::map<std::string, Quantifier> quantifiers_;
  std::map<std::string, Relation> fixed_;
};

bool evaluate(const Formula& f, const Structure& m, const Environment& env, const Assignment& asg = {});

Relation defined_set(const Formula& f, const Structure& m, const Environment& env,
                     const std::vector<std::string>& vars);

// Structures of the space satisfying a sentence.
StructureClass defined_class(const Formula& f, const StructureSpace& space, const Environment& env,
                             const Limits& limits = {});

}  // namespace qw
