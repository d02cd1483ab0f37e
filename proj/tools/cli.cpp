#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "qw/io/formats.hpp"
#include "qw/kernel/orbits.hpp"
#include "qw/logic/eval.hpp"
#include "qw/logic/invariance.hpp"
#include "qw/logic/parser.hpp"
#include "qw/quant/qg.hpp"
#include "qw/synth/good.hpp"
#include "qw/verify/suites.hpp"

namespace qw::cli {
namespace {

using io::json;

// Bad flag values discovered after CLI parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

Tuple parse_tuple(const std::string& text, const char* flag) {
  Tuple out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError(std::string(flag) + " expects comma-separated non-negative integers");
    }
  }
  return out;
}

class Runner {
 public:
  explicit Runner(const RunConfig& c) : c_(c) {}

  int run(std::ostream& out) {
    static const std::map<std::string, std::function<json(Runner&)>> commands = {
        {"eval", &Runner::eval},
        {"defined-set", &Runner::defined},
        {"aut", &Runner::aut},
        {"support", &Runner::support_cmd},
        {"good", &Runner::good},
        {"qg", &Runner::qg},
        {"orbit-formula", &Runner::orbit_formula},
        {"orbits", &Runner::orbits},
        {"vaught", &Runner::vaught},
        {"invariant-formula", &Runner::invariant_formula},
        {"verify", &Runner::verify},
    };
    const json result = commands.at(c_.command)(*this);
    if (c_.out_path.empty()) {
      out << result.dump(2) << '\n';
    } else {
      io::write_json(c_.out_path, result);
    }
    return failed_ ? exit_failure : exit_ok;
  }

 private:
  // Rejects a universe beyond the bound before any constructor sees it.
  json load(const std::string& path, const char* flag) const {
    if (path.empty()) throw UsageError(std::string(flag) + " is required");
    json j = io::load_json(path);
    if (j.is_object() && j.contains("universe") && j["universe"].is_number_integer() &&
        j["universe"].get<long long>() > c_.universe_bound) {
      throw UsageError(std::string(flag) + ": universe " + std::to_string(j["universe"].get<long long>()) +
                       " exceeds the bound " + std::to_string(c_.universe_bound) +
                       " (set QW_MAX_UNIVERSE to raise it)");
    }
    return j;
  }

  Group group() const { return io::group_from_json(load(c_.group_path, "--group")); }
  Quantifier quantifier() const { return io::quantifier_from_json(load(c_.quantifier_path, "--quantifier")); }
  Structure structure() const { return io::structure_from_json(load(c_.structure_path, "--structure")); }
  Environment environment(int universe) const {
    if (c_.env_path.empty()) return {};
    const std::filesystem::path path(c_.env_path);
    return io::environment_from_json(io::load_json(path), universe, path.parent_path());
  }
  StructureClass structure_class(Signature& sig, int& universe) const {
    return io::class_from_json(load(c_.class_path, "--class"), &sig, &universe);
  }
  Formula formula() const {
    if (c_.formula.empty()) throw UsageError("--formula is required");
    try {
      return parse_formula(c_.formula);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--formula: ") + e.what());
    }
  }

  json eval() {
    const Structure m = structure();
    return {{"value", qw::evaluate(formula(), m, environment(m.universe()))}};
  }

  json defined() {
    const Structure m = structure();
    const Formula f = formula();
    std::vector<std::string> vars = c_.vars;
    if (vars.empty()) {
      const auto free = free_variables(f);
      vars.assign(free.begin(), free.end());
    }
    const Relation r = defined_set(f, m, environment(m.universe()), vars);
    return {{"vars", vars}, {"tuples", io::relation_to_json(r)}};
  }

  json aut() {
    const Group g = automorphisms(quantifier(), c_.limits);
    return {{"group", io::group_to_json(g)}, {"order", g.order()}};
  }

  json support_cmd() {
    const Quantifier q = quantifier();
    return {{"support", io::relation_to_json(support(q, c_.limits))}};
  }

  json good() {
    const Quantifier q = quantifier();
    const bool closed = is_downward_closed(q, c_.limits);
    json out = {{"downward_closed", closed}, {"good", false}, {"violation", nullptr}};
    if (!closed) return out;
    const auto v = goodness_violation(q, c_.limits);
    out["good"] = !v;
    if (v) {
      json images = json::array();
      for (int i = 0; i < v->domain_size(); ++i) images.push_back((*v)(i));
      out["violation"] = images;
    }
    return out;
  }

  json qg() { return io::quantifier_to_json(build_qg(group())); }

  json orbit_formula() {
    const Quantifier q = quantifier();
    OrbitFormulaOptions options;
    options.distinct = !c_.literal;
    const Formula f = orbit_formula_good(q, c_.m, options, c_.limits);
    return {{"formula", render_formula(f)}, {"free_variables", numbered_vars("a", c_.m)}, {"quantifier", "q"}};
  }

  json orbits() {
    const Tuple t = parse_tuple(c_.tuple, "--tuple");
    Group g = !c_.group_path.empty() ? group() : automorphisms(quantifier(), c_.limits);
    for (Element e : t) {
      if (e >= g.universe()) throw UsageError("--tuple entry outside the universe");
    }
    json orbit = json::array();
    for (const auto& u : orbit_of_tuple(g, t)) orbit.push_back(io::tuple_to_json(u));
    return {{"tuple", io::tuple_to_json(t)}, {"orbit", orbit}};
  }

  json vaught() {
    const Group g = group();
    Signature sig;
    int n = 0;
    const StructureClass a = structure_class(sig, n);
    if (g.universe() != n) throw UsageError("group and class universes differ");
    const Tuple anchor = c_.anchor.empty() ? Tuple{} : parse_tuple(c_.anchor, "--anchor");
    const StructureClass v = vaught_transform(g, StructureSpace(sig, n), a, anchor, c_.limits);
    return io::class_to_json(v, sig, n);
  }

  json invariant_formula() {
    const Group g = group();
    Signature sig;
    int n = 0;
    const StructureClass a = structure_class(sig, n);
    if (g.universe() != n) throw UsageError("group and class universes differ");
    const InvariantFormula f = invariant_class_formula(g, StructureSpace(sig, n), a, c_.limits);
    return {{"formula", render_formula(f.sentence)}, {"env", io::environment_to_json(f.environment())}};
  }

  json verify() {
    if (!verify::is_suite(c_.suite)) throw UsageError("unknown suite '" + c_.suite + "'");
    verify::SuiteConfig sc;
    sc.n = c_.n;
    sc.trials = c_.trials;
    sc.seed = c_.seed;
    sc.limits = c_.limits;
    const verify::SuiteReport r = verify::run_suite(c_.suite, sc);
    failed_ = !r.ok();
    return verify::report_to_json(r, c_.timing);
  }

  const RunConfig& c_;
  bool failed_ = false;
};

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Finite generalized quantifier workbench"};
  app.require_subcommand(1);
  std::string format = "json";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", c.out_path, "Write the JSON result to this file");
    sub->add_option("--max-enum", c.limits.max_enum, "Cap on exhaustive relation scans")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));
    return sub;
  };
  auto* eval = common(app.add_subcommand("eval", "Evaluate a sentence on a structure"));
  auto* defined = common(app.add_subcommand("defined-set", "Tuples satisfying a formula"));
  for (auto* sub : {eval, defined}) {
    sub->add_option("--structure", c.structure_path)->required();
    sub->add_option("--env", c.env_path);
    sub->add_option("--formula", c.formula)->required();
  }
  defined->add_option("--vars", c.vars, "Free variables in output order")->delimiter(',');

  auto* aut = common(app.add_subcommand("aut", "Automorphism group of a quantifier"));
  auto* sup = common(app.add_subcommand("support", "Support of a quantifier"));
  auto* good = common(app.add_subcommand("good", "Goodness of a quantifier"));
  auto* of = common(app.add_subcommand("orbit-formula", "Orbit-defining formula of a good quantifier"));
  for (auto* sub : {aut, sup, good, of}) sub->add_option("--quantifier", c.quantifier_path)->required();
  of->add_option("--m", c.m, "Tuple length")->check(CLI::NonNegativeNumber);
  of->add_flag("--literal", c.literal, "Omit the distinctness conjuncts");

  auto* qg = common(app.add_subcommand("qg", "Chain quantifier of a group"));
  qg->add_option("--group", c.group_path)->required();

  auto* orbits = common(app.add_subcommand("orbits", "Orbit of a tuple under a group or Aut(Q)"));
  auto* og = orbits->add_option("--group", c.group_path);
  auto* oq = orbits->add_option("--quantifier", c.quantifier_path);
  og->excludes(oq);
  orbits->add_option("--tuple", c.tuple, "Comma-separated elements")->required();

  auto* vaught = common(app.add_subcommand("vaught", "Vaught transform of a structure class"));
  auto* inv = common(app.add_subcommand("invariant-formula", "Sentence defining an invariant class"));
  for (auto* sub : {vaught, inv}) {
    sub->add_option("--group", c.group_path)->required();
    sub->add_option("--class", c.class_path)->required();
  }
  vaught->add_option("--anchor", c.anchor, "Comma-separated anchor elements");

  auto* verify = common(app.add_subcommand("verify", "Run a verification suite"));
  verify->add_option("--suite", c.suite)->required();
  verify->add_option("--n", c.n, "Universe bound for generated instances")->check(CLI::PositiveNumber);
  verify->add_option("--trials", c.trials)->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", c.seed);
  verify->add_flag("--no-timing", [&](std::int64_t) { c.timing = false; }, "Leave durations out of the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }
  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();

  if (const char* env = std::getenv("QW_MAX_UNIVERSE")) {
    // The kernel falls back to its default on a bad value; the CLI refuses it.
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 64) {
      err << "QW_MAX_UNIVERSE must be an integer in 1..64\n";
      return exit_usage;
    }
  }
  c.universe_bound = max_universe();

  try {
    return Runner(c).run(out);
  } catch (const io::FormatError& e) {
    err << "malformed input: " << e.what() << '\n';
    return exit_input;
  } catch (const Error& e) {
    // Usage problems, inputs outside an operation's domain, and scans past
    // --max-enum all reject the request as posed.
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace qw::cli
