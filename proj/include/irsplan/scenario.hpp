#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace irsplan {

/// Input-document or consistency error; `what()` names the offending field.
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

inline double distance(const Vec3& a, const Vec3& b) {
  const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

/// Axis-aligned cell footprint on the ground plane.
struct CellRect {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

struct RadioParams {
  double tx_power_w = 1.0;              // P0
  double amp_power_per_element_w = 0;   // P_A
  double noise_power_w = 1e-9;          // sigma^2
  int bs_antennas = 1;                  // M
  int elements_per_tile_dim = 1;        // N
  double ref_path_gain = 1.0;           // beta0, linear
  double pathloss_exponent = 2.0;       // alpha
  double wavelength_m = 0.087;
  double element_spacing_m = 0;         // d; 0 means lambda/2 default

  double spacing() const { return element_spacing_m > 0 ? element_spacing_m : wavelength_m / 2.0; }
  double c0() const { return tx_power_w * bs_antennas / noise_power_w; }
  double ca() const { return amp_power_per_element_w / noise_power_w; }
  int elements_per_tile() const { return elements_per_tile_dim * elements_per_tile_dim; }
};

struct CostModel {
  double cell_use_passive = 0;  // c_{P,0}
  double cell_use_active = 0;   // c_{A,0}
  double per_tile_passive = 0;  // c_P
  double per_tile_active = 0;   // c_A
};

/// Region model: cells, BS node 0, candidate nodes (node id == cell id),
/// LoS adjacency and radio/cost parameters. Immutable after load.
struct Scenario {
  int rows = 1, cols = 1;
  double cell_size_m = 10.0;
  double user_height_m = 0.0;
  std::vector<CellRect> cells;

  int bs_cell = 0;
  Vec3 bs_pos;
  std::vector<int> candidate_cells;       // I0, sorted
  std::map<int, Vec3> candidate_pos;      // keyed by node id (== cell id)
  std::set<std::pair<int, int>> los_node_pairs;   // normalized i < i'
  std::set<std::pair<int, int>> los_user_pairs;   // (node, cell)
  std::map<std::pair<int, int>, double> dmax_overrides;

  RadioParams radio;
  CostModel costs;
  int max_tiles = 1;  // T0^max

  int num_cells() const { return static_cast<int>(cells.size()); }
  bool is_candidate(int node) const {
    return std::binary_search(candidate_cells.begin(), candidate_cells.end(), node);
  }
  bool is_node(int i) const { return i == 0 || is_candidate(i); }
  Vec3 node_pos(int i) const;
  bool nodes_have_los(int i, int ip) const;
  bool covers_cell(int node, int cell) const {
    return los_user_pairs.count({node, cell}) > 0;
  }
};

Scenario load_scenario(const std::string& text);
Scenario load_scenario_file(const std::string& path);

/// Distance from a node to the farthest user location of a cell
/// (override-aware; corner geometry on the user plane otherwise).
double worst_case_distance(const Scenario& sc, int node, int cell);

/// Directed LoS graph over node vertices {0} ∪ I0 and virtual user
/// vertices J..2J-1. No edge enters vertex 0, none leaves a user vertex.
struct LosGraph {
  struct Edge {
    int from = 0, to = 0;
    double dist = 0;
  };
  int J = 0;
  std::vector<int> node_vertices;  // I, sorted, 0 first
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out_edges;  // vertex -> edge indices, size 2J

  int num_vertices() const { return static_cast<int>(node_vertices.size()) + J; }
  bool is_user_vertex(int v) const { return v >= J; }
};

LosGraph build_los_graph(const Scenario& sc);

}  // namespace irsplan
