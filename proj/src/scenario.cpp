#include "irsplan/scenario.hpp"

#include <fstream>
#include <sstream>

#include "irsplan/units.hpp"
#include "json.hpp"

namespace irsplan {

using nlohmann::json;

Vec3 Scenario::node_pos(int i) const {
  if (i == 0) return bs_pos;
  auto it = candidate_pos.find(i);
  if (it == candidate_pos.end()) throw ScenarioError("unknown node " + std::to_string(i));
  return it->second;
}

bool Scenario::nodes_have_los(int i, int ip) const {
  if (i == ip) return false;
  auto p = std::minmax(i, ip);
  return los_node_pairs.count({p.first, p.second}) > 0;
}

namespace {

bool in_rect(const CellRect& r, double x, double y) {
  constexpr double eps = 1e-9;
  return x >= r.x0 - eps && x <= r.x1 + eps && y >= r.y0 - eps && y <= r.y1 + eps;
}

void validate(const Scenario& sc) {
  const int J = sc.num_cells();
  if (sc.bs_cell < 0 || sc.bs_cell >= J) throw ScenarioError("bs.cell out of range");
  if (sc.max_tiles < 1) throw ScenarioError("max_tiles must be >= 1");

  const auto& r = sc.radio;
  if (r.tx_power_w <= 0 || r.noise_power_w <= 0 || r.amp_power_per_element_w <= 0)
    throw ScenarioError("radio: powers must be > 0");
  if (r.bs_antennas < 1 || r.elements_per_tile_dim < 1)
    throw ScenarioError("radio: m and n must be >= 1");
  if (r.ref_path_gain <= 0 || r.ref_path_gain > 1)
    throw ScenarioError("radio.beta0_db must map to (0, 1]");
  if (r.pathloss_exponent < 0) throw ScenarioError("radio.alpha must be >= 0");
  if (r.wavelength_m <= 0) throw ScenarioError("radio.wavelength_m must be > 0");
  if (r.spacing() <= 0) throw ScenarioError("radio.spacing_m must be > 0");
  if (!std::isfinite(r.c0()) || r.c0() <= 0 || !std::isfinite(r.ca()) || r.ca() <= 0)
    throw ScenarioError("radio: derived C0/C_A not finite positive");

  const auto& c = sc.costs;
  if (c.cell_use_passive < 0 || c.cell_use_active < 0 || c.per_tile_passive < 0 ||
      c.per_tile_active < 0)
    throw ScenarioError("costs must be >= 0");

  for (int i : sc.candidate_cells) {
    if (i < 0 || i >= J) throw ScenarioError("candidates: cell " + std::to_string(i) + " out of range");
    if (i == sc.bs_cell) throw ScenarioError("candidates: cell " + std::to_string(i) + " hosts the BS");
    const Vec3 p = sc.candidate_pos.at(i);
    if (!in_rect(sc.cells[i], p.x, p.y))
      throw ScenarioError("candidates: node " + std::to_string(i) + " lies outside cell " +
                          std::to_string(i));
  }
  if (!in_rect(sc.cells[sc.bs_cell], sc.bs_pos.x, sc.bs_pos.y))
    throw ScenarioError("bs.pos lies outside bs.cell");

  for (const auto& [i, ip] : sc.los_node_pairs) {
    if (i == ip) throw ScenarioError("los_nodes: self pair on node " + std::to_string(i));
    for (int n : {i, ip})
      if (!sc.is_node(n))
        throw ScenarioError("los_nodes: node " + std::to_string(n) + " is not declared");
  }
  for (const auto& [i, j] : sc.los_user_pairs) {
    if (!sc.is_node(i)) throw ScenarioError("los_users: node " + std::to_string(i) + " is not declared");
    if (j < 0 || j >= J) throw ScenarioError("los_users: cell " + std::to_string(j) + " out of range");
  }
  // local coverage: every node covers its own cell
  if (!sc.covers_cell(0, sc.bs_cell))
    throw ScenarioError("los_users: BS must cover its own cell " + std::to_string(sc.bs_cell));
  for (int i : sc.candidate_cells)
    if (!sc.covers_cell(i, i))
      throw ScenarioError("los_users: node " + std::to_string(i) + " must cover its own cell");
  for (const auto& [key, d] : sc.dmax_overrides) {
    if (!sc.covers_cell(key.first, key.second))
      throw ScenarioError("dmax_overrides: pair (" + std::to_string(key.first) + "," +
                          std::to_string(key.second) + ") is not in los_users");
    if (d <= 0) throw ScenarioError("dmax_overrides: distance must be > 0");
  }
}

Vec3 parse_pos(const json& a, const std::string& field) {
  if (!a.is_array() || a.size() != 3) throw ScenarioError(field + ": expected [x,y,z]");
  return {a[0].get<double>(), a[1].get<double>(), a[2].get<double>()};
}

}  // namespace

Scenario load_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("invalid JSON: ") + e.what());
  }
  try {
    Scenario sc;
    const auto& grid = doc.at("grid");
    sc.rows = grid.at("rows").get<int>();
    sc.cols = grid.at("cols").get<int>();
    sc.cell_size_m = grid.at("cell_size_m").get<double>();
    sc.user_height_m = grid.value("user_height_m", 0.0);
    if (sc.rows < 1 || sc.cols < 1 || sc.cell_size_m <= 0)
      throw ScenarioError("grid: rows/cols >= 1 and cell_size_m > 0 required");
    for (int r = 0; r < sc.rows; ++r)
      for (int c = 0; c < sc.cols; ++c)
        sc.cells.push_back({c * sc.cell_size_m, r * sc.cell_size_m, (c + 1) * sc.cell_size_m,
                            (r + 1) * sc.cell_size_m});

    sc.bs_cell = doc.at("bs").at("cell").get<int>();
    sc.bs_pos = parse_pos(doc.at("bs").at("pos"), "bs.pos");

    for (const auto& cand : doc.value("candidates", json::array())) {
      const int id = cand.at("id").get<int>();
      const int cell = cand.at("cell").get<int>();
      if (id != cell)
        throw ScenarioError("candidates: node id " + std::to_string(id) +
                            " must equal its cell index " + std::to_string(cell));
      if (sc.candidate_pos.count(id))
        throw ScenarioError("candidates: duplicate candidate in cell " + std::to_string(id));
      sc.candidate_pos[id] = parse_pos(cand.at("pos"), "candidates.pos");
      sc.candidate_cells.push_back(id);
    }
    std::sort(sc.candidate_cells.begin(), sc.candidate_cells.end());

    for (const auto& pr : doc.value("los_nodes", json::array())) {
      if (!pr.is_array() || pr.size() != 2) throw ScenarioError("los_nodes: expected [i, i']");
      int i = pr[0].get<int>(), ip = pr[1].get<int>();
      sc.los_node_pairs.insert({std::min(i, ip), std::max(i, ip)});
    }
    for (const auto& pr : doc.value("los_users", json::array())) {
      if (!pr.is_array() || pr.size() != 2) throw ScenarioError("los_users: expected [i, j]");
      sc.los_user_pairs.insert({pr[0].get<int>(), pr[1].get<int>()});
    }
    for (const auto& ov : doc.value("dmax_overrides", json::array())) {
      if (!ov.is_array() || ov.size() != 3)
        throw ScenarioError("dmax_overrides: expected [i, j, meters]");
      sc.dmax_overrides[{ov[0].get<int>(), ov[1].get<int>()}] = ov[2].get<double>();
    }

    const auto& radio = doc.at("radio");
    sc.radio.tx_power_w = dbm_to_watts(radio.at("p0_dbm").get<double>());
    sc.radio.amp_power_per_element_w = dbm_to_watts(radio.at("pa_dbm").get<double>());
    sc.radio.noise_power_w = dbm_to_watts(radio.at("noise_dbm").get<double>());
    sc.radio.bs_antennas = radio.at("m").get<int>();
    sc.radio.elements_per_tile_dim = radio.at("n").get<int>();
    sc.radio.ref_path_gain = db_to_linear(radio.at("beta0_db").get<double>());
    sc.radio.pathloss_exponent = radio.at("alpha").get<double>();
    sc.radio.wavelength_m = radio.at("wavelength_m").get<double>();
    sc.radio.element_spacing_m = radio.value("spacing_m", 0.0);

    const auto& costs = doc.at("costs");
    sc.costs.cell_use_passive = costs.at("cp0").get<double>();
    sc.costs.cell_use_active = costs.at("ca0").get<double>();
    sc.costs.per_tile_passive = costs.at("cp").get<double>();
    sc.costs.per_tile_active = costs.at("ca").get<double>();
    sc.max_tiles = doc.at("max_tiles").get<int>();

    validate(sc);
    return sc;
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("schema violation: ") + e.what());
  }
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_scenario(ss.str());
}

double worst_case_distance(const Scenario& sc, int node, int cell) {
  if (!sc.covers_cell(node, cell))
    throw ScenarioError("pair (" + std::to_string(node) + "," + std::to_string(cell) +
                        ") is not LoS-covered");
  auto ov = sc.dmax_overrides.find({node, cell});
  if (ov != sc.dmax_overrides.end()) return ov->second;
  const Vec3 p = sc.node_pos(node);
  const CellRect& r = sc.cells[cell];
  double best = 0;
  for (double x : {r.x0, r.x1})
    for (double y : {r.y0, r.y1})
      best = std::max(best, distance(p, {x, y, sc.user_height_m}));
  return best;
}

LosGraph build_los_graph(const Scenario& sc) {
  LosGraph g;
  g.J = sc.num_cells();
  g.node_vertices.push_back(0);
  for (int i : sc.candidate_cells) g.node_vertices.push_back(i);
  g.out_edges.assign(2 * g.J, {});

  auto add_edge = [&](int from, int to, double dist) {
    g.out_edges[from].push_back(static_cast<int>(g.edges.size()));
    g.edges.push_back({from, to, dist});
  };

  for (const auto& [i, ip] : sc.los_node_pairs) {
    const double d = distance(sc.node_pos(i), sc.node_pos(ip));
    if (d <= 0) throw ScenarioError("coincident node positions on pair {" + std::to_string(i) +
                                    "," + std::to_string(ip) + "}");
    if (ip != 0) add_edge(i, ip, d);
    if (i != 0) add_edge(ip, i, d);  // downlink: nothing enters vertex 0
  }
  for (const auto& [i, j] : sc.los_user_pairs)
    add_edge(i, g.J + j, worst_case_distance(sc, i, j));
  return g;
}

}  // namespace irsplan
