#include "irsplan/plan_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace irsplan {

namespace {

using nlohmann::json;

void read_group(const json& j, const char* key, const Scenario& sc, std::set<int>& cells,
                std::map<int, int>& tiles) {
  if (!j.contains(key)) return;
  const json& g = j.at(key);
  if (!g.is_object()) throw ScenarioError(std::string("plan: '") + key + "' must be an object");
  for (auto it = g.begin(); it != g.end(); ++it) {
    int cell = 0;
    try {
      cell = std::stoi(it.key());
    } catch (const std::exception&) {
      throw ScenarioError(std::string("plan: non-integer cell key '") + it.key() + "'");
    }
    if (!it.value().is_number_integer())
      throw ScenarioError("plan: tile count for cell " + it.key() + " must be an integer");
    const int t = it.value().get<int>();
    if (!sc.is_candidate(cell))
      throw ScenarioError("plan: cell " + std::to_string(cell) + " is not a candidate");
    if (t < 1 || t > sc.max_tiles)
      throw ScenarioError("plan: tile count " + std::to_string(t) + " for cell " +
                          std::to_string(cell) + " outside [1, " +
                          std::to_string(sc.max_tiles) + "]");
    if (tiles.count(cell))
      throw ScenarioError("plan: cell " + std::to_string(cell) + " assigned twice");
    cells.insert(cell);
    tiles[cell] = t;
  }
}

}  // namespace

DeploymentPlan load_plan(const std::string& text, const Scenario& sc) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("plan: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ScenarioError("plan: document must be an object");
  DeploymentPlan plan;
  read_group(j, "passive", sc, plan.passive_cells, plan.tiles);
  read_group(j, "active", sc, plan.active_cells, plan.tiles);
  plan.validate(sc);
  return plan;
}

DeploymentPlan load_plan_file(const std::string& path, const Scenario& sc) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("plan: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_plan(ss.str(), sc);
}

std::string plan_to_json(const DeploymentPlan& plan) {
  nlohmann::json j;
  j["passive"] = nlohmann::json::object();
  j["active"] = nlohmann::json::object();
  for (int c : plan.passive_cells) j["passive"][std::to_string(c)] = plan.tiles_at(c);
  for (int c : plan.active_cells) j["active"][std::to_string(c)] = plan.tiles_at(c);
  return j.dump(2);
}

}  // namespace irsplan
