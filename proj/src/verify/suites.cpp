#include "qw/verify/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>

#include "qw/error.hpp"
#include "qw/logic/eval.hpp"
#include "qw/logic/invariance.hpp"
#include "qw/logic/parser.hpp"
#include "qw/quant/combo.hpp"
#include "qw/quant/qg.hpp"
#include "qw/synth/clopen.hpp"
#include "qw/synth/good.hpp"
#include "qw/synth/principal.hpp"
#include "qw/verify/corpus.hpp"
#include "qw/verify/oracles.hpp"

namespace qw::verify {
namespace {

using io::json;

class Tally {
 public:
  explicit Tally(SuiteReport& r) : r_(r) {}

  void check(bool ok, const std::function<json()>& payload) {
    ++r_.instances;
    if (ok) {
      ++r_.passed;
    } else {
      ++r_.failed;
      r_.failures.push_back(payload());
    }
  }
  void inconclusive() {
    ++r_.instances;
    ++r_.inconclusive;
  }

 private:
  SuiteReport& r_;
};

std::set<Tuple> tuples_of(const Relation& r) {
  std::set<Tuple> out;
  for (auto i : r.indices()) out.insert(index_tuple(i, r.universe(), r.arity()));
  return out;
}

Tuple iota(int m) {
  Tuple t;
  for (int i = 0; i < m; ++i) t.push_back(i);
  return t;
}

Tuple flatten(const std::vector<Tuple>& ts) {
  Tuple out;
  for (const auto& t : ts) out.insert(out.end(), t.begin(), t.end());
  return out;
}

json tuples_json(const std::vector<Tuple>& ts) {
  json out = json::array();
  for (const auto& t : ts) out.push_back(io::tuple_to_json(t));
  return out;
}

// Pair-generated subgroups for n <= min(bound, 4), then `trials` random
// 2-3 generator subgroups for each n from 5 to bound.
std::vector<Group> group_corpus(const SuiteConfig& c, int bound, json& details) {
  Rng rng(c.seed);
  std::vector<Group> out;
  for (int n = 1; n <= std::min(bound, 4); ++n) {
    auto gs = corpus::pair_generated_subgroups(n);
    details["groups_n" + std::to_string(n)] = gs.size();
    out.insert(out.end(), gs.begin(), gs.end());
  }
  for (int n = 5; n <= bound; ++n) {
    for (int i = 0; i < c.trials; ++i) out.push_back(corpus::random_group(rng, n, rng.between(2, 3)));
    details["groups_n" + std::to_string(n)] = c.trials;
  }
  return out;
}

void suite_qg(const SuiteConfig& c, SuiteReport& r) {
  Tally tally(r);
  for (const auto& g : group_corpus(c, c.n.value_or(6), r.details)) {
    const Group aut = automorphisms(build_qg(g), c.limits);
    tally.check(aut == g, [&] {
      return json{{"reason", "automorphisms(build_qg(G)) differs from G"},
                  {"group", io::group_to_json(g)},
                  {"automorphisms", io::group_to_json(aut)}};
    });
  }
}

void suite_goodness(const SuiteConfig& c, SuiteReport& r) {
  Tally tally(r);
  for (const auto& g : group_corpus(c, c.n.value_or(6), r.details)) {
    const Quantifier q = build_qg(g);
    const auto violation = goodness_violation(q, c.limits);
    tally.check(!violation, [&] {
      json images = json::array();
      for (int i = 0; i < violation->domain_size(); ++i) images.push_back((*violation)(i));
      return json{{"reason", "compatible injection without automorphism extension"},
                  {"group", io::group_to_json(g)},
                  {"injection", images}};
    });
  }
}

void suite_orbit_formula(const SuiteConfig& c, SuiteReport& r) {
  Tally tally(r);
  for (const auto& g : group_corpus(c, c.n.value_or(5), r.details)) {
    const Quantifier q = build_qg(g);
    Environment env;
    env.quantifiers.emplace("q", q);
    const Structure empty(Signature{}, g.universe());
    for (int m = 1; m <= std::min(g.universe(), 3); ++m) {
      const Formula f = orbit_formula_good(q, m, {}, c.limits);
      const auto got = tuples_of(defined_set(f, empty, env, numbered_vars("a", m)));
      const auto want = oracle::orbit(g.elements(), iota(m));
      tally.check(got == want, [&] {
        return json{{"reason", "defined set differs from the orbit"},
                    {"group", io::group_to_json(g)},
                    {"m", m},
                    {"formula", render_formula(f)}};
      });
    }
  }
}

void suite_support(const SuiteConfig& c, SuiteReport& r) {
  Tally tally(r);
  Rng rng(c.seed);
  const auto slots_bound = static_cast<std::size_t>(c.n.value_or(12));
  for (int trial = 0; trial < c.trials; ++trial) {
    const Quantifier q = corpus::random_quantifier(rng, slots_bound);
    const Relation base = support(q, c.limits);
    std::string reason;
    for (int o = 0; o < 20 && reason.empty(); ++o) {
      std::vector<std::size_t> idx(base.slots());
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      rng.shuffle(idx);
      if (support(q, idx, c.limits) != base) reason = "order-dependent support";
    }
    if (reason.empty() && !supports(q, base, c.limits)) reason = "support does not support";
    for (auto i : base.indices()) {
      if (!reason.empty()) break;
      Relation smaller = base;
      smaller.set(i, false);
      if (supports(q, smaller, c.limits)) reason = "support is not minimal";
    }
    if (reason.empty() && base != oracle::support(q)) reason = "differs from the flip-scan support";
    tally.check(reason.empty(), [&] {
      return json{{"reason", reason}, {"quantifier", io::quantifier_to_json(q)}, {"support", io::relation_to_json(base)}};
    });
  }
}

struct ClopenCase {
  Quantifier q;
  std::string corpus;
};

// k = 1, t cycling through 1..3, universe bound (default 8); k = 2, t = 2,
// universe min(bound, 5).
std::vector<ClopenCase> clopen_corpus(const SuiteConfig& c, json& details) {
  Rng rng(c.seed);
  const int n1 = c.n.value_or(8);
  const int n2 = std::min(n1, 5);
  std::vector<ClopenCase> out;
  for (int i = 0; i < c.trials; ++i) {
    out.push_back({corpus::random_clopen(rng, n1, 1, std::min(n1, 1 + i % 3)), "k1"});
  }
  for (int i = 0; i < c.trials; ++i) out.push_back({corpus::random_clopen(rng, n2, 2, std::min(n2, 2)), "k2"});
  details["k1_universe"] = n1;
  details["k2_universe"] = n2;
  return out;
}

// a ∈ support(q) by the definition: some A with A ∈ q and A △ {a} ∉ q. A
// clopen membership only reads A on the window W, so A ranges over subsets
// of W ∪ {a}.
bool direct_support_member(const ClopenQuantifier& c, const Quantifier& q, const Tuple& a) {
  std::vector<std::size_t> ground = c.window().indices();
  const std::size_t ai = tuple_index(a, q.universe());
  if (std::find(ground.begin(), ground.end(), ai) == ground.end()) ground.push_back(ai);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << ground.size()); ++bits) {
    Relation x(q.universe(), q.arity());
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if ((bits >> i) & 1u) x.set(ground[i]);
    }
    Relation y = x;
    y.set(ai, !x.test(ai));
    if (q.contains(x) != q.contains(y)) return true;
  }
  return false;
}

void suite_lemma17(const SuiteConfig& c, SuiteReport& r) {
  Tally tally(r);
  for (const auto& [q, name] : clopen_corpus(c, r.details)) {
    const auto& cl = *q.get_if<ClopenQuantifier>();
    for (const auto& a : all_tuples(q.universe(), q.arity())) {
      const bool want = direct_support_member(cl, q, a);
      const bool got = support_membership_formula_test(q, a);
      tally.check(got == want, [&] {
        return json{{"reason", "formula support test disagrees"},
                    {"corpus", name},
                    {"quantifier", io::quantifier_to_json(q)},
                    {"tuple", io::tuple_to_json(a)},
                    {"formula_test", got},
                    {"direct", want}};
      });
    }
  }
}

// Distinct tuples of length len over n.
std::vector<Tuple> injective_tuples(int n, int len) {
  std::vector<Tuple> out;
  for (auto& t : all_tuples(n, len)) {
    std::set<Element> seen(t.begin(), t.end());
    if (static_cast<int>(seen.size()) == len) out.push_back(std::move(t));
  }
  return out;
}

void suite_prop18(const SuiteConfig& c, SuiteReport& r) {
  Tally tally(r);
  std::map<std::string, std::size_t> inconclusive;
  for (const auto& [q, name] : clopen_corpus(c, r.details)) {
    // Unary automorphisms by full scan; binary ones from the pattern scan,
    // which the quant tests check against the full scan.
    const std::vector<Permutation> aut =
        q.arity() == 1 ? oracle::automorphisms(q) : automorphisms(q, c.limits).elements();
    for (int len = 1; len <= std::min(3, q.universe()); ++len) {
      const auto orbit = oracle::orbit(aut, iota(len));
      for (const auto& a : injective_tuples(q.universe(), len)) {
        const Verdict v = clopen_orbit_check(q, a, {}, c.limits);
        if (v == Verdict::inconclusive) {
          tally.inconclusive();
          ++inconclusive[name];
          continue;
        }
        const bool want = orbit.count(a) != 0;
        tally.check((v == Verdict::yes) == want, [&] {
          return json{{"reason", "orbit check disagrees with the orbit"},
                      {"corpus", name},
                      {"quantifier", io::quantifier_to_json(q)},
                      {"tuple", io::tuple_to_json(a)},
                      {"check", verdict_name(v)},
                      {"orbit_member", want}};
        });
      }
    }
  }
  r.details["inconclusive_by_corpus"] = inconclusive;
  r.details["inconclusive_rate"] = r.instances == 0 ? 0.0 : static_cast<double>(r.inconclusive) / static_cast<double>(r.instances);
}

// Lists of `len` tuples over n^d.
std::vector<std::vector<Tuple>> tuple_lists(int n, int d, int len) {
  const auto cells = all_tuples(n, d);
  std::vector<std::vector<Tuple>> out;
  for (const auto& idx : all_tuples(static_cast<int>(cells.size()), len)) {
    std::vector<Tuple> list;
    for (Element i : idx) list.push_back(cells[static_cast<std::size_t>(i)]);
    out.push_back(std::move(list));
  }
  return out;
}

void suite_combo(const SuiteConfig& c, SuiteReport& r) {
  Tally tally(r);
  Rng rng(c.seed);
  const int bound = c.n.value_or(6);
  std::vector<PrincipalComboQuantifier> cases;
  for (int i = 0; i < c.trials; ++i) {
    cases.push_back(minimize_combo(corpus::random_combo(rng, rng.between(1, bound), 1, 3, 4)));
  }
  const int smoke = std::min(5, c.trials);
  for (int i = 0; i < smoke; ++i) {
    cases.push_back(minimize_combo(corpus::random_combo(rng, rng.between(2, std::min(bound, 3)), 2, 3, 4)));
  }
  r.details["d1_instances"] = c.trials;
  r.details["d2_instances"] = smoke;
  for (const auto& q : cases) {
    const int n = q.universe();
    const int d = q.dimension();
    auto payload = [&](const std::string& reason, json extra) {
      extra["reason"] = reason;
      extra["quantifier"] = io::quantifier_to_json(q);
      return extra;
    };
    if (!is_minimal(q)) {
      tally.check(false, [&] { return payload("minimize_combo result is not minimal", json::object()); });
      continue;
    }
    const auto cells = all_tuples(n, d);
    bool chi_ok = true;
    json chi_bad;
    for (const auto& a : cells) {
      for (const auto& b : cells) {
        const bool same = q.block_of(tuple_index(a, n)) == q.block_of(tuple_index(b, n));
        if (chi_ok && chi_check(q, a, b, c.limits) != same) {
          chi_ok = false;
          chi_bad = {{"a", a}, {"b", b}};
        }
      }
    }
    tally.check(chi_ok, [&] { return payload("chi_check differs from same-block", chi_bad); });

    const auto brute = oracle::automorphisms(q);
    const Group aut = combo_automorphisms(q);
    tally.check(aut == Group::from_elements(n, brute), [&] {
      return payload("combo_automorphisms differs from the brute-force group", json::object());
    });

    bool orbit_ok = true;
    json orbit_bad;
    for (int len = 1; len <= 2 && orbit_ok; ++len) {
      const auto lists = tuple_lists(n, d, len);
      for (const auto& a : lists) {
        const auto orbit = oracle::orbit(brute, flatten(a));
        for (const auto& b : lists) {
          if (combo_orbit_check(q, a, b, c.limits) != (orbit.count(flatten(b)) != 0)) {
            orbit_ok = false;
            orbit_bad = {{"a", tuples_json(a)}, {"b", tuples_json(b)}};
            break;
          }
        }
        if (!orbit_ok) break;
      }
    }
    tally.check(orbit_ok, [&] { return payload("combo_orbit_check differs from orbit equivalence", orbit_bad); });
  }
}

struct Shape {
  Signature signature;
  int universe;
};

// Signatures and universes 2..bound with at most 9 relation bits.
std::vector<Shape> class_shapes(int bound) {
  std::vector<Shape> out;
  auto add = [&](std::map<std::string, int> sig, int n) {
    if (n >= 2 && n <= bound) out.push_back({Signature(std::move(sig)), n});
  };
  for (int n = 1; n <= 5; ++n) add({{"P", 1}}, n);
  for (int n = 1; n <= 3; ++n) add({{"E", 2}}, n);
  for (int n = 1; n <= 2; ++n) add({{"P", 1}, {"E", 2}}, n);
  for (int n = 1; n <= 4; ++n) add({{"P", 1}, {"S", 1}}, n);
  if (out.empty()) throw InvalidInput("class suites need a universe bound of at least 2");
  return out;
}

json class_payload(const Group& g, const StructureSpace& space, const StructureClass& a) {
  return {{"group", io::group_to_json(g)}, {"class", io::class_to_json(a, space.signature(), space.universe())}};
}

void suite_vaught(const SuiteConfig& c, SuiteReport& r) {
  Tally tally(r);
  Rng rng(c.seed);
  const auto shapes = class_shapes(c.n.value_or(5));
  std::size_t invariant_count = 0;
  for (int trial = 0; trial < c.trials; ++trial) {
    const Shape& s = shapes[rng.below(shapes.size())];
    const StructureSpace space(s.signature, s.universe);
    const Group g = corpus::random_group(rng, s.universe, rng.between(1, 3));
    StructureClass a = corpus::random_class(rng, space, rng.between(2, 5));
    if (rng.coin()) a = corpus::close_under(g, a);
    const bool invariant = oracle::invariant(g.elements(), a);
    invariant_count += invariant ? 1 : 0;
    const bool fixed = vaught_transform(g, space, a, {}, c.limits) == a;
    tally.check(invariant == fixed, [&] {
      json p = class_payload(g, space, a);
      p["reason"] = "vaught fixed point differs from invariance";
      p["invariant"] = invariant;
      return p;
    });
  }
  r.details["invariant_classes"] = invariant_count;
}

void suite_invariant_formula(const SuiteConfig& c, SuiteReport& r) {
  Tally tally(r);
  Rng rng(c.seed);
  const auto shapes = class_shapes(std::min(c.n.value_or(4), 4));
  for (int trial = 0; trial < c.trials; ++trial) {
    const Shape& s = shapes[rng.below(shapes.size())];
    const StructureSpace space(s.signature, s.universe);
    const Group g = corpus::random_group(rng, s.universe, rng.between(0, 3));
    const StructureClass a = corpus::close_under(g, corpus::random_class(rng, space, rng.between(2, 6)));
    const InvariantFormula f = invariant_class_formula(g, space, a, c.limits);
    const bool ok = defined_class(f.sentence, space, f.environment(), c.limits) == a;
    tally.check(ok, [&] {
      json p = class_payload(g, space, a);
      p["reason"] = "defined class differs from the input class";
      p["formula"] = render_formula(f.sentence);
      return p;
    });
  }
}

corpus::FormulaShape formula_shape(Rng& rng) {
  corpus::FormulaShape shape;
  shape.signature = Signature({{"E", 2}, {"P", 1}});
  shape.universe = rng.between(1, 4);
  shape.quantifiers = {{"q", 1}, {"r", 2}};
  shape.fixed = {{"O", 2}};
  return shape;
}

void suite_parser(const SuiteConfig& c, SuiteReport& r) {
  Tally tally(r);
  Rng rng(c.seed);
  for (int trial = 0; trial < c.trials; ++trial) {
    const auto shape = formula_shape(rng);
    const Formula f = corpus::random_formula(rng, shape, rng.between(0, 4), {"a", "b"});
    const std::string text = render_formula(f);
    std::string reason;
    try {
      const Formula g = parse_formula(text);
      if (!(g == f)) reason = "reparsed AST differs";
      else if (render_formula(g) != text) reason = "render is not stable";
    } catch (const ParseError& e) {
      reason = std::string("parse error: ") + e.what();
    }
    tally.check(reason.empty(), [&] { return json{{"reason", reason}, {"text", text}}; });
  }
}

// Every exists node replaced by the nonempty quantifier q.
Formula exists_as_q(const Formula& f) {
  Formula out = f;
  for (auto& child : out.children) child = exists_as_q(child);
  if (out.kind == FormulaKind::exists) {
    out.kind = FormulaKind::quant;
    out.name = "q";
  }
  return out;
}

void suite_semantics(const SuiteConfig& c, SuiteReport& r) {
  Tally tally(r);
  Rng rng(c.seed);
  for (int trial = 0; trial < c.trials; ++trial) {
    corpus::FormulaShape shape = formula_shape(rng);
    shape.quantifiers.clear();
    shape.fixed.clear();
    const Formula f = corpus::random_formula(rng, shape, rng.between(1, 4), {"a"});
    const Formula g = exists_as_q(f);
    const Structure m = corpus::random_structure(rng, shape.signature, shape.universe);
    Environment env;
    env.quantifiers.emplace("q", nonempty_quantifier(shape.universe, 1));
    const bool ok = defined_set(f, m, env, {"a"}) == defined_set(g, m, env, {"a"});
    tally.check(ok, [&] {
      return json{{"reason", "Q-node differs from exists"},
                  {"formula", render_formula(f)},
                  {"structure", io::structure_to_json(m)}};
    });
  }
  const std::size_t formula_failed = r.failed;
  for (int trial = 0; trial < c.trials; ++trial) {
    const Quantifier q = corpus::random_quantifier(rng, 16);
    const Quantifier e = to_extensional(q, c.limits);
    const auto all = all_relations(q.universe(), q.arity(), c.limits);
    const bool ok = std::all_of(all.begin(), all.end(), [&](const Relation& x) { return q.contains(x) == e.contains(x); });
    tally.check(ok, [&] {
      return json{{"reason", "extensional conversion changes membership"}, {"quantifier", io::quantifier_to_json(q)}};
    });
  }
  r.details["formula"] = {{"instances", c.trials}, {"failed", formula_failed}};
  r.details["conversion"] = {{"instances", c.trials}, {"failed", r.failed - formula_failed}};
}

using SuiteFn = void (*)(const SuiteConfig&, SuiteReport&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"qg", suite_qg},
      {"goodness", suite_goodness},
      {"orbit-formula", suite_orbit_formula},
      {"support", suite_support},
      {"lemma17", suite_lemma17},
      {"prop18", suite_prop18},
      {"combo", suite_combo},
      {"vaught", suite_vaught},
      {"invariant-formula", suite_invariant_formula},
      {"parser", suite_parser},
      {"semantics", suite_semantics},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport r;
  r.suite = name;
  if (name == "all") {
    // Universe bounds differ per suite, so each part keeps its default.
    SuiteConfig part = config;
    part.n.reset();
    for (const auto& [sub, fn] : registry()) {
      SuiteReport p = run_suite(sub, part);
      r.instances += p.instances;
      r.passed += p.passed;
      r.failed += p.failed;
      r.inconclusive += p.inconclusive;
      r.parts.push_back(std::move(p));
    }
  } else {
    auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& e) { return e.first == name; });
    if (it == registry().end()) throw InvalidInput("unknown suite '" + name + "'");
    it->second(config, r);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

json report_to_json(const SuiteReport& r, bool timing) {
  json out = {{"suite", r.suite},
              {"instances", r.instances},
              {"passed", r.passed},
              {"failed", r.failed},
              {"inconclusive", r.inconclusive},
              {"failures", r.failures},
              {"details", r.details}};
  if (!r.parts.empty()) {
    json parts = json::array();
    for (const auto& p : r.parts) parts.push_back(report_to_json(p, timing));
    out["parts"] = parts;
  }
  if (timing) out["seconds"] = r.seconds;
  return out;
}

}  // namespace qw::verify
