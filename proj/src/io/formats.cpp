#include "qw/io/formats.hpp"

#include <fstream>

#include "qw/kernel/universe.hpp"

namespace qw::io {
namespace {

// Runs a decoder, mapping library and constructor errors to FormatError.
template <class F>
auto decoding(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  } catch (const Error& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw FormatError(std::string("expected an object with field '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) throw FormatError(std::string("missing field '") + name + "'");
  return *it;
}

std::vector<Relation> relations_from_json(const json& j, int n, int k) {
  std::vector<Relation> out;
  for (const auto& r : j) out.push_back(relation_from_json(r, n, k));
  return out;
}

json relations_to_json(const auto& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(relation_to_json(r));
  return out;
}

}  // namespace

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw FormatError("write failed for " + path.string());
}

json tuple_to_json(const Tuple& t) { return json(t); }

Tuple tuple_from_json(const json& j) {
  return decoding("tuple", [&] {
    if (j.is_number_integer()) return Tuple{j.get<Element>()};
    return j.get<Tuple>();
  });
}

json relation_to_json(const Relation& r) {
  json out = json::array();
  for (const auto& t : r.tuples()) out.push_back(tuple_to_json(t));
  return out;
}

Relation relation_from_json(const json& j, int universe, int arity) {
  return decoding("relation", [&] {
    if (!j.is_array()) throw FormatError("relation must be a list of tuples");
    Relation r(universe, arity);
    for (const auto& t : j) {
      const Tuple tup = tuple_from_json(t);
      if (static_cast<int>(tup.size()) != arity) throw FormatError("tuple length differs from arity");
      r.insert(tup);
    }
    return r;
  });
}

json permutation_to_json(const Permutation& p) { return json(p.images()); }

json group_to_json(const Group& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(permutation_to_json(p));
  return {{"universe", g.universe()}, {"generators", gens}};
}

Group group_from_json(const json& j) {
  return decoding("group", [&] {
    const int n = field(j, "universe").get<int>();
    std::vector<Permutation> gens;
    for (const auto& p : field(j, "generators")) gens.emplace_back(p.get<std::vector<Element>>());
    for (const auto& p : gens) {
      if (p.universe() != n) throw FormatError("generator size differs from universe");
    }
    return Group::generate(n, std::move(gens));
  });
}

json quantifier_to_json(const Quantifier& q) {
  json out = {{"kind", std::string(kind_name(q.kind()))}, {"universe", q.universe()}, {"arity", q.arity()}};
  std::visit(
      [&](const auto& rep) {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, ExtensionalQuantifier>) {
          out["members"] = relations_to_json(rep.members());
        } else if constexpr (std::is_same_v<T, ClopenQuantifier>) {
          out["bound"] = rep.bound();
          out["traces"] = relations_to_json(rep.traces());
        } else if constexpr (std::is_same_v<T, PrincipalQuantifier>) {
          out["mode"] = rep.mode() == PrincipalMode::superset ? "superset" : "subset";
          out["base"] = relation_to_json(rep.base());
        } else if constexpr (std::is_same_v<T, PrincipalComboQuantifier>) {
          out["dimension"] = rep.dimension();
          json blocks = json::array();
          for (const auto& b : rep.blocks()) {
            json block = json::array();
            for (const auto& t : b.tuples()) block.push_back(rep.dimension() == 1 ? json(t[0]) : tuple_to_json(t));
            blocks.push_back(block);
          }
          out["blocks"] = blocks;
          out["signs"] = rep.signs();
        } else if constexpr (std::is_same_v<T, ChainGroupQuantifier>) {
          out["group"] = group_to_json(rep.group());
        } else {
          out["generators"] = relations_to_json(rep.generators());
        }
      },
      q.representation());
  return out;
}

Quantifier quantifier_from_json(const json& j) {
  return decoding("quantifier", [&]() -> Quantifier {
    const QuantifierKind kind = kind_from_name(field(j, "kind").get<std::string>());
    const int n = field(j, "universe").get<int>();
    auto arity = [&] { return field(j, "arity").get<int>(); };
    switch (kind) {
      case QuantifierKind::extensional: {
        const auto members = relations_from_json(field(j, "members"), n, arity());
        return ExtensionalQuantifier(n, arity(), std::set<Relation>(members.begin(), members.end()));
      }
      case QuantifierKind::clopen: {
        const int t = field(j, "bound").get<int>();
        const auto traces = relations_from_json(field(j, "traces"), t, arity());
        return ClopenQuantifier(n, arity(), t, std::set<Relation>(traces.begin(), traces.end()));
      }
      case QuantifierKind::principal: {
        const std::string mode = field(j, "mode").get<std::string>();
        if (mode != "superset" && mode != "subset") throw FormatError("principal mode must be superset or subset");
        return PrincipalQuantifier(relation_from_json(field(j, "base"), n, arity()),
                                   mode == "superset" ? PrincipalMode::superset : PrincipalMode::subset);
      }
      case QuantifierKind::combo: {
        const int d = j.contains("dimension") ? j["dimension"].get<int>() : arity();
        std::vector<Relation> blocks;
        for (const auto& b : field(j, "blocks")) blocks.push_back(relation_from_json(b, n, d));
        return PrincipalComboQuantifier(n, d, std::move(blocks), field(j, "signs").get<std::vector<SignVector>>());
      }
      case QuantifierKind::chain_group: {
        Group g = group_from_json(field(j, "group"));
        if (g.universe() != n) throw FormatError("group universe differs from quantifier universe");
        return ChainGroupQuantifier(std::move(g));
      }
      case QuantifierKind::downward_generated:
        return DownwardGeneratedQuantifier(n, arity(), relations_from_json(field(j, "generators"), n, arity()));
    }
    throw FormatError("unknown quantifier kind");
  });
}

json signature_to_json(const Signature& s) {
  json out = json::object();
  for (std::size_t i = 0; i < s.size(); ++i) out[s.symbols()[i]] = s.arities()[i];
  return out;
}

Signature signature_from_json(const json& j) {
  return decoding("signature", [&] {
    if (!j.is_object()) throw FormatError("signature must be an object of arities");
    return Signature(j.get<std::map<std::string, int>>());
  });
}

json structure_to_json(const Structure& m) {
  json rels = json::object();
  const auto& sig = m.signature();
  for (std::size_t i = 0; i < sig.size(); ++i) rels[sig.symbols()[i]] = relation_to_json(m.relation(i));
  return {{"universe", m.universe()}, {"signature", signature_to_json(sig)}, {"relations", rels}};
}

namespace {

Structure structure_body(const json& rels, const Signature& sig, int n) {
  Structure m(sig, n);
  if (!rels.is_object()) throw FormatError("relations must be an object");
  for (const auto& [name, r] : rels.items()) {
    const auto i = sig.index_of(name);
    if (!i) throw FormatError("relation '" + name + "' not in the signature");
    m.set_relation(name, relation_from_json(r, n, sig.arities()[*i]));
  }
  return m;
}

}  // namespace

Structure structure_from_json(const json& j) {
  return decoding("structure", [&] {
    const int n = field(j, "universe").get<int>();
    const Signature sig = signature_from_json(field(j, "signature"));
    return structure_body(j.contains("relations") ? j["relations"] : json::object(), sig, n);
  });
}

json environment_to_json(const Environment& env) {
  json qs = json::object();
  for (const auto& [name, q] : env.quantifiers) qs[name] = quantifier_to_json(q);
  json fixed = json::object();
  for (const auto& [name, r] : env.fixed) fixed[name] = relation_to_json(r);
  return {{"quantifiers", qs}, {"fixed", fixed}};
}

Environment environment_from_json(const json& j, int universe, const std::filesystem::path& base) {
  return decoding("environment", [&] {
    if (!j.is_object()) throw FormatError("environment must be an object");
    Environment env;
    if (j.contains("quantifiers")) {
      for (const auto& [name, q] : j["quantifiers"].items()) {
        const json body = q.is_string() ? load_json(base / q.get<std::string>()) : q;
        env.quantifiers.emplace(name, quantifier_from_json(body));
      }
    }
    if (j.contains("fixed")) {
      for (const auto& [name, r] : j["fixed"].items()) {
        // A bare tuple list, or {"arity": k, "tuples": [...]} when the list may be empty.
        const json& tuples = r.is_object() ? field(r, "tuples") : r;
        int arity = r.is_object() ? field(r, "arity").get<int>() : -1;
        if (arity < 0) {
          if (!tuples.is_array() || tuples.empty()) throw FormatError("fixed relation '" + name + "' needs an arity");
          arity = static_cast<int>(tuple_from_json(tuples.front()).size());
        }
        env.fixed.emplace(name, relation_from_json(tuples, universe, arity));
      }
    }
    return env;
  });
}

json class_to_json(const StructureClass& c, const Signature& s, int universe) {
  json members = json::array();
  for (const auto& m : c) {
    json rels = json::object();
    for (std::size_t i = 0; i < s.size(); ++i) rels[s.symbols()[i]] = relation_to_json(m.relation(i));
    members.push_back(rels);
  }
  return {{"universe", universe}, {"signature", signature_to_json(s)}, {"structures", members}};
}

StructureClass class_from_json(const json& j, Signature* signature, int* universe) {
  return decoding("class", [&] {
    const int n = field(j, "universe").get<int>();
    const Signature sig = signature_from_json(field(j, "signature"));
    StructureClass out;
    for (const auto& rels : field(j, "structures")) out.insert(structure_body(rels, sig, n));
    if (signature) *signature = sig;
    if (universe) *universe = n;
    return out;
  });
}

json report_to_json(const SynthesisReport& r) {
  return {{"construction", r.construction},
          {"instance", r.instance},
          {"formula", r.formula ? json(*r.formula) : json(nullptr)},
          {"construction_verdict", verdict_name(r.construction_verdict)},
          {"oracle_verdict", verdict_name(r.oracle_verdict)},
          {"agree", r.agree()}};
}

}  // namespace qw::io
