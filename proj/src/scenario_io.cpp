#include "nsmax/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

namespace nsmax {

namespace {

using nlohmann::json;

IntensityProfile profile_from_json(const json& doc) {
  return IntensityProfile(doc.at("period").get<double>(),
                          doc.at("breakpoints").get<std::vector<double>>(),
                          doc.at("values").get<std::vector<double>>());
}

json profile_to_json(const IntensityProfile& profile) {
  return json{{"period", profile.period()},
              {"breakpoints", profile.breakpoints()},
              {"values", profile.values()}};
}

}  // namespace

BroadcastScenario scenario_from_json(const json& doc) {
  BroadcastScenario sc;
  std::map<int, int> broadcaster_index, feed_index;
  std::vector<std::pair<int, IntensityProfile>> broadcasters, feeds;
  for (const json& b : doc.at("broadcasters")) {
    broadcasters.emplace_back(b.at("id").get<int>(), profile_from_json(b.at("profile")));
  }
  for (const json& f : doc.at("feeds")) {
    feeds.emplace_back(f.at("id").get<int>(), profile_from_json(f.at("profile")));
  }
  auto by_id = [](const auto& a, const auto& b) { return a.first < b.first; };
  std::sort(broadcasters.begin(), broadcasters.end(), by_id);
  std::sort(feeds.begin(), feeds.end(), by_id);
  for (auto& [id, profile] : broadcasters) {
    if (!broadcaster_index.emplace(id, static_cast<int>(sc.broadcaster_profiles.size())).second) {
      throw std::invalid_argument("scenario: duplicate broadcaster id " + std::to_string(id));
    }
    sc.broadcaster_profiles.push_back(std::move(profile));
  }
  for (auto& [id, profile] : feeds) {
    if (!feed_index.emplace(id, static_cast<int>(sc.feed_profiles.size())).second) {
      throw std::invalid_argument("scenario: duplicate feed id " + std::to_string(id));
    }
    sc.feed_profiles.push_back(std::move(profile));
  }

  for (const json& e : doc.at("candidate_edges")) {
    int i = e.at(0).get<int>(), j = e.at(1).get<int>();
    if (!broadcaster_index.count(i)) throw std::invalid_argument("scenario: edge references unknown broadcaster");
    if (!feed_index.count(j)) throw std::invalid_argument("scenario: edge references unknown feed");
    sc.candidate_edges.emplace_back(broadcaster_index[i], feed_index[j]);
  }

  sc.budgets.assign(sc.broadcaster_profiles.size(), 0);
  for (const auto& [key, value] : doc.at("budgets").items()) {
    int id = std::stoi(key);
    if (!broadcaster_index.count(id)) throw std::invalid_argument("scenario: budget for unknown broadcaster");
    sc.budgets[broadcaster_index[id]] = value.get<int>();
  }

  sc.top_k = doc.at("K").get<int>();
  sc.t_start = doc.at("t0").get<double>();
  sc.t_end = doc.at("tf").get<double>();
  sc.validate();
  return sc;
}

json scenario_to_json(const BroadcastScenario& sc) {
  json broadcasters = json::array();
  for (int i = 0; i < sc.num_broadcasters(); ++i) {
    broadcasters.push_back({{"id", i}, {"profile", profile_to_json(sc.broadcaster_profiles[i])}});
  }
  json feeds = json::array();
  for (int j = 0; j < sc.num_feeds(); ++j) {
    feeds.push_back({{"id", j}, {"profile", profile_to_json(sc.feed_profiles[j])}});
  }
  json edges = json::array();
  for (auto [i, j] : sc.candidate_edges) edges.push_back({i, j});
  json budgets = json::object();
  for (int i = 0; i < sc.num_broadcasters(); ++i) budgets[std::to_string(i)] = sc.budgets[i];
  return json{{"broadcasters", broadcasters}, {"feeds", feeds},          {"candidate_edges", edges},
              {"budgets", budgets},           {"K", sc.top_k},           {"t0", sc.t_start},
              {"tf", sc.t_end}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("cannot parse " + path + ": " + e.what());
  }
  return doc;
}

BroadcastScenario load_scenario(const std::string& path) {
  return scenario_from_json(load_json_file(path));
}

void save_scenario(const BroadcastScenario& scenario, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << scenario_to_json(scenario).dump(2) << "\n";
}

Matroid matroid_from_json(const json& doc) {
  std::string kind = doc.at("kind").get<std::string>();
  if (kind == "uniform") {
    return Matroid::uniform(doc.at("n").get<int>(), doc.at("k").get<int>());
  }
  if (kind == "partition") {
    return Matroid::partition(doc.at("blocks").get<std::vector<int>>(),
                              doc.at("capacities").get<std::vector<int>>());
  }
  if (kind == "graphic") {
    std::vector<std::pair<int, int>> edges;
    for (const json& e : doc.at("edges")) {
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return Matroid::graphic(doc.at("n_vertices").get<int>(), std::move(edges));
  }
  throw std::invalid_argument("matroid_from_json: unknown kind '" + kind + "'");
}

json matroid_to_json(const Matroid& m) {
  switch (m.kind()) {
    case Matroid::Kind::kUniform:
      return json{{"kind", "uniform"}, {"n", m.ground_size()}, {"k", m.uniform_k()}};
    case Matroid::Kind::kPartition:
      return json{{"kind", "partition"},
                  {"blocks", m.partition_blocks()},
                  {"capacities", m.partition_capacities()}};
    case Matroid::Kind::kGraphic: {
      json edges = json::array();
      for (auto [a, b] : m.graphic_edges()) edges.push_back({a, b});
      return json{{"kind", "graphic"}, {"n_vertices", m.graphic_vertices()}, {"edges", edges}};
    }
  }
  throw std::logic_error("matroid_to_json: unknown kind");
}

}  // namespace nsmax
