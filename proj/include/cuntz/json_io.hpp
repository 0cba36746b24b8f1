#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "cuntz/endomorphism.hpp"
#include "cuntz/masa.hpp"

namespace cuntz {

using json = nlohmann::json;

// Element schema shared by all tools:
// {"n": 2, "terms": [{"re": .., "im": .., "alpha": [..], "beta": [..]}, ...]}
json element_to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const json& j);

// {"n": 2, "k": 2, "pairs": [[[1,1],[1,1]], ...]}  (source -> target)
json permutation_to_json(const PermutationMap& p);
PermutationMap permutation_from_json(const json& j);

json decision_report_to_json(const DecisionReport& r);

json cylinder_map_to_json(const CylinderMap& m);

// File helpers; parse failures surface as usage_error with context.
AlgebraElement load_element(const std::string& path);
void save_json(const json& j, const std::string& path);
json load_json(const std::string& path);

} // namespace cuntz
