#pragma once

// JSON corpus files, groupoid serialisation, and report output.
//
// A corpus file holds one object:
//   {"name": ..., "kind": "table", "elements": [...], "table": [[...]],
//    "inverse": [...]?, "congruences": {"name": [["a", "b"], ...]}?}
//   {"name": ..., "kind": "partial_bijections", "degree": m,
//    "generators": [[1, 0, -1], ...], "congruences": {...}?}
//   {"name": ..., "kind": "presented", "presented": "fcis", "alphabet": "xy"}
//   {"name": ..., "kind": "presented", "presented": "cuntz", "n": 2}
// Undefined images of partial bijections are -1. Congruence pairs use
// element names and are closed to the least congruence containing them.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "gf/congruence.hpp"
#include "gf/core.hpp"
#include "gf/groupoid.hpp"
#include "gf/verify.hpp"

namespace gf {

  using json = nlohmann::json;

  //! Throws ParseError naming the offending field, or ValidationError.
  Instance parse_instance(json const& j, std::string const& origin = "<json>");
  Instance load_instance(std::filesystem::path const& file);

  //! A directory loads every *.json file in it, sorted by file name.
  std::vector<Instance> load_corpus(std::filesystem::path const& path);

  //! The named congruence of \p instance. Throws UnknownCongruenceName.
  Congruence const& find_congruence(Instance const& instance, std::string const& name);

  json semigroup_to_json(FiniteInverseSemigroup const& S);
  json partition_to_json(FiniteInverseSemigroup const& S, Congruence const& c);

  //! {"arrows": [{"label", "unit", "source", "range", "inverse"}],
  //!  "compose": [[a, b, ab], ...]}
  json           groupoid_to_json(FiniteGroupoid const& G);
  FiniteGroupoid groupoid_from_json(json const& j);

  json        report_to_json(TheoremReport const& r);
  std::string report_to_text(TheoremReport const& r);

}  // namespace gf
