#pragma once

#include <string>

#include "json.hpp"

#include "nsmax/matroid.hpp"
#include "nsmax/visibility.hpp"

namespace nsmax {

// Scenario schema: broadcasters[{id, profile:{period, breakpoints, values}}],
// feeds[{id, profile}], candidate_edges[[i, j]], budgets{"i": c_i}, K, t0, tf.
// Ids may be sparse; they are remapped to dense indices in id order.
BroadcastScenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const BroadcastScenario& scenario);

// Loads a scenario file; failures carry the offending path.
BroadcastScenario load_scenario(const std::string& path);
void save_scenario(const BroadcastScenario& scenario, const std::string& path);

// Matroid schema: {kind: "uniform", n, k} | {kind: "partition", blocks,
// capacities} | {kind: "graphic", n_vertices, edges[[a, b]]}.
Matroid matroid_from_json(const nlohmann::json& doc);
nlohmann::json matroid_to_json(const Matroid& m);

nlohmann::json load_json_file(const std::string& path);

}  // namespace nsmax
