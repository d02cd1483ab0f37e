#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "qw/io/formats.hpp"
#include "qw/quant/qg.hpp"
#include "qw/verify/corpus.hpp"

using namespace qw;
using io::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qw");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_command(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("qw_cli_test_" + std::to_string(counter_++))) {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("io round trips") {
  Rng rng(91);
  for (int trial = 0; trial < 100; ++trial) {
    const Quantifier q = corpus::random_small_quantifier(rng);
    const Quantifier back = io::quantifier_from_json(json::parse(io::quantifier_to_json(q).dump()));
    CHECK(io::quantifier_to_json(back) == io::quantifier_to_json(q));
    const Relation x = rng.relation(q.universe(), q.arity());
    CHECK(back.contains(x) == q.contains(x));
  }
  const Group g = corpus::random_group(rng, 5, 2);
  CHECK(io::group_from_json(io::group_to_json(g)) == g);
  const Signature sig({{"E", 2}, {"P", 1}});
  const Structure m = corpus::random_structure(rng, sig, 3);
  CHECK(io::structure_from_json(io::structure_to_json(m)) == m);
  const StructureSpace space(sig, 2);
  const StructureClass a = corpus::random_class(rng, space, 3);
  Signature sig_back;
  int n_back = 0;
  CHECK(io::class_from_json(io::class_to_json(a, sig, 2), &sig_back, &n_back) == a);
  CHECK(sig_back == sig);
  CHECK(n_back == 2);
}

TEST_CASE("io rejects malformed documents") {
  CHECK_THROWS_AS(io::group_from_json(json{{"universe", 3}}), io::FormatError);
  CHECK_THROWS_AS(io::group_from_json(json::parse(R"({"universe": 3, "generators": [[0, 0, 1]]})")), io::FormatError);
  CHECK_THROWS_AS(io::quantifier_from_json(json::parse(R"({"kind": "blob", "universe": 2, "arity": 1})")),
                  io::FormatError);
  CHECK_THROWS_AS(io::quantifier_from_json(json::parse(
                      R"({"kind": "principal", "universe": 2, "arity": 1, "mode": "superset", "base": [[0, 1]]})")),
                  io::FormatError);
  CHECK_THROWS_AS(io::structure_from_json(json::parse(
                      R"({"universe": 2, "signature": {"P": 1}, "relations": {"Q": [[0]]}})")),
                  io::FormatError);
  const Environment env = io::environment_from_json(
      json::parse(R"({"fixed": {"O": [[0, 1]], "Z": {"arity": 2, "tuples": []}}})"), 3);
  CHECK(env.fixed.at("O").arity() == 2);
  CHECK(env.fixed.at("Z").empty());
  CHECK_THROWS_AS(io::environment_from_json(json::parse(R"({"fixed": {"Z": []}})"), 3), io::FormatError);
}

TEST_CASE("combo blocks use bare elements when unary") {
  const PrincipalComboQuantifier q(4, 1, {Relation::from_tuples(4, 1, std::vector<Tuple>{{0}, {1}}),
                                          Relation::from_tuples(4, 1, std::vector<Tuple>{{2}, {3}})},
                                   {{1, -1}});
  const json j = io::quantifier_to_json(q);
  CHECK(j["blocks"] == json::parse("[[0, 1], [2, 3]]"));
  CHECK(j["signs"] == json::parse("[[1, -1]]"));
  CHECK(io::quantifier_to_json(io::quantifier_from_json(j)) == j);
}

TEST_CASE("qg, aut and good commands") {
  TempDir dir;
  const auto g = dir.write("g.json", R"({"universe": 3, "generators": [[1, 2, 0]]})");
  const auto q = dir.file("q.json");
  Run r = run({"qg", "--group", g, "--out", q});
  REQUIRE(r.code == 0);
  CHECK(io::load_json(q)["kind"] == "chain_group");
  r = run({"aut", "--quantifier", q});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["order"] == 3);
  r = run({"good", "--quantifier", q});
  CHECK(json::parse(r.out)["good"] == true);
  r = run({"support", "--quantifier", q});
  CHECK(r.code == 0);
  r = run({"orbits", "--group", g, "--tuple", "0,1"});
  CHECK(json::parse(r.out)["orbit"] == json::parse("[[0,1],[1,2],[2,0]]"));
  r = run({"orbit-formula", "--quantifier", q, "--m", "1"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["free_variables"] == json::parse(R"(["a0"])"));
}

TEST_CASE("eval and defined-set commands") {
  TempDir dir;
  const auto m = dir.write("m.json", R"({"universe": 3, "signature": {"E": 2, "P": 1},
                                         "relations": {"E": [[0, 1]], "P": [[0]]}})");
  const auto e = dir.write("e.json", R"({"quantifiers": {"q": "q.json"}, "fixed": {"O": [[2]]}})");
  dir.write("q.json", R"({"kind": "principal", "universe": 3, "arity": 1, "mode": "superset", "base": [[0]]})");
  Run r = run({"eval", "--structure", m, "--env", e, "--formula", "(exists x (rel P x))"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out) == json{{"value", true}});
  r = run({"eval", "--structure", m, "--env", e, "--formula", "(Q q (x) (rel P x))"});
  CHECK(json::parse(r.out)["value"] == true);
  r = run({"defined-set", "--structure", m, "--env", e, "--formula", "(or (rel P x) (fix O x))"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["tuples"] == json::parse("[[0],[2]]"));
  r = run({"defined-set", "--structure", m, "--formula", "(rel E x y)", "--vars", "y,x"});
  CHECK(json::parse(r.out)["tuples"] == json::parse("[[1,0]]"));
}

TEST_CASE("vaught and invariant-formula commands") {
  TempDir dir;
  const auto g = dir.write("g.json", R"({"universe": 2, "generators": [[1, 0]]})");
  const auto c = dir.write("c.json", R"({"universe": 2, "signature": {"P": 1},
                                         "structures": [{"P": [[0]]}, {"P": [[1]]}]})");
  Run r = run({"vaught", "--group", g, "--class", c});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["structures"].size() == 2);
  r = run({"invariant-formula", "--group", g, "--class", c});
  REQUIRE(r.code == 0);
  const json out = json::parse(r.out);
  const auto env = dir.write("env.json", out["env"].dump());
  const auto one = dir.write("one.json", R"({"universe": 2, "signature": {"P": 1}, "relations": {"P": [[1]]}})");
  const auto both = dir.write("both.json", R"({"universe": 2, "signature": {"P": 1}, "relations": {"P": [[0], [1]]}})");
  CHECK(json::parse(run({"eval", "--structure", one, "--env", env, "--formula", out["formula"]}).out)["value"] == true);
  CHECK(json::parse(run({"eval", "--structure", both, "--env", env, "--formula", out["formula"]}).out)["value"] == false);
  const auto lone = dir.write("lone.json", R"({"universe": 2, "signature": {"P": 1}, "structures": [{"P": [[0]]}]})");
  CHECK(run({"invariant-formula", "--group", g, "--class", lone}).code == 2);
}

TEST_CASE("verify command") {
  Run a = run({"verify", "--suite", "parser", "--trials", "40", "--seed", "7", "--no-timing"});
  Run b = run({"verify", "--suite", "parser", "--trials", "40", "--seed", "7", "--no-timing"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const json report = json::parse(a.out);
  CHECK(report["instances"] == 40);
  CHECK(report["passed"] == 40);
  CHECK_FALSE(report.contains("seconds"));
  const json empty = json::parse(run({"verify", "--suite", "support", "--trials", "0"}).out);
  CHECK(empty["instances"] == 0);
  CHECK(empty.contains("seconds"));
  Run qg = run({"verify", "--suite", "qg", "--n", "4", "--trials", "5", "--seed", "7"});
  CHECK(qg.code == 0);
  CHECK(json::parse(qg.out)["instances"] == 39);
}

TEST_CASE("exit codes") {
  TempDir dir;
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"aut"}).code == 2);
  CHECK(run({"qg", "--group", dir.file("missing.json")}).code == 3);
  CHECK(run({"qg", "--group", dir.write("bad.json", "{not json")}).code == 3);
  CHECK(run({"qg", "--group", dir.write("short.json", R"({"universe": 3})")}).code == 3);
  CHECK(run({"qg", "--group", dir.write("big.json", R"({"universe": 9, "generators": []})")}).code == 2);
  const auto m = dir.write("m.json", R"({"universe": 2, "signature": {"P": 1}, "relations": {}})");
  CHECK(run({"eval", "--structure", m, "--formula", "(rel P"}).code == 2);
  CHECK(run({"eval", "--structure", m, "--formula", "(rel P x)"}).code == 2);
  CHECK(run({"aut", "--quantifier", dir.write("q.json", R"({"kind": "principal", "universe": 2, "arity": 1,
                                                           "mode": "subset", "base": []})"),
             "--format", "xml"})
            .code == 2);
  CHECK(run({"verify", "--help"}).code == 0);
}
