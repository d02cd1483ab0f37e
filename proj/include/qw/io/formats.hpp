#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "qw/error.hpp"
#include "qw/kernel/group.hpp"
#include "qw/logic/eval.hpp"
#include "qw/logic/structure.hpp"
#include "qw/quant/quantifier.hpp"
#include "qw/synth/common.hpp"

// JSON file formats for groups, quantifiers, structures, environments and
// structure classes.
namespace qw::io {

using nlohmann::json;

// Malformed document: bad JSON, missing fields, or contents rejected by a
// constructor.
class FormatError : public Error {
 public:
  using Error::Error;
};

json load_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);

json tuple_to_json(const Tuple& t);
Tuple tuple_from_json(const json& j);

// Sorted list of tuples.
json relation_to_json(const Relation& r);
Relation relation_from_json(const json& j, int universe, int arity);

json permutation_to_json(const Permutation& p);

// {"universe": n, "generators": [[images...], ...]}
json group_to_json(const Group& g);
Group group_from_json(const json& j);

json quantifier_to_json(const Quantifier& q);
Quantifier quantifier_from_json(const json& j);

json signature_to_json(const Signature& s);
Signature signature_from_json(const json& j);

// {"universe": n, "signature": {...}, "relations": {"E": [[0,1]], ...}}
json structure_to_json(const Structure& m);
Structure structure_from_json(const json& j);

// Quantifier entries may be objects or paths, resolved against `base`.
// Fixed relations are read over `universe`.
json environment_to_json(const Environment& env);
Environment environment_from_json(const json& j, int universe, const std::filesystem::path& base = {});

// {"universe": n, "signature": {...}, "structures": [{"E": [...]}, ...]}
json class_to_json(const StructureClass& c, const Signature& s, int universe);
StructureClass class_from_json(const json& j, Signature* signature = nullptr, int* universe = nullptr);

json report_to_json(const SynthesisReport& r);

}  // namespace qw::io
