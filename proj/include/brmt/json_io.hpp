#pragma once

#include "brmt/boolean_model.hpp"
#include "brmt/cumulants.hpp"
#include "brmt/partitions.hpp"

#include <json.hpp>

#include <string>

namespace brmt {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings (also accepted: integers, [num, den]).
Json rational_to_json(const Rational& v);
Rational rational_from_json(const Json& j);

Json partition_to_json(const IntervalPartition& p);  // array of endpoints
IntervalPartition partition_from_json(const Json& j);

// {"alpha": [...], "beta": [...], "max_order": 64}
BDiagonalLaw law_from_json(const Json& j);
Json law_to_json(const BDiagonalLaw& law);

// {"kind": "bdiag_family", "a": [...], "b": [...]}
// {"kind": "selfadjoint_family", "alpha": ..., "beta": ...}
// {"kind": "general", "moments": [["xx*", num, den], ...]}
EntryModel entry_model_from_json(const Json& j);

// {"alphabet": [...], "involution": [["a","a*"], ...], "tags": {...},
//  "max_order": k, "moments": [[["a","b"], num, den], ...]}
MomentFunctional moment_functional_from_json(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace brmt
