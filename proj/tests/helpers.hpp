#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "irsplan/routing.hpp"
#include "irsplan/scenario.hpp"
#include "irsplan/snr_core.hpp"
#include "irsplan/units.hpp"

namespace testutil {

using namespace irsplan;

// Section-VI radio and costs on an empty rows x cols grid.
inline Scenario base_scenario(int rows, int cols, double cell_size) {
  Scenario sc;
  sc.rows = rows;
  sc.cols = cols;
  sc.cell_size_m = cell_size;
  sc.user_height_m = 0.0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      sc.cells.push_back({c * cell_size, r * cell_size, (c + 1) * cell_size, (r + 1) * cell_size});
  sc.radio.tx_power_w = dbm_to_watts(30.0);
  sc.radio.amp_power_per_element_w = dbm_to_watts(-5.0);
  sc.radio.noise_power_w = dbm_to_watts(-60.0);
  sc.radio.bs_antennas = 10;
  sc.radio.elements_per_tile_dim = 10;
  sc.radio.ref_path_gain = db_to_linear(-43.0);
  sc.radio.pathloss_exponent = 2.0;
  sc.radio.wavelength_m = 0.087;
  sc.costs = {5.0, 12.0, 1.0, 3.0};
  sc.max_tiles = 9;
  return sc;
}

// Shortest inter-node distance that keeps every reflection factor below one
// (no negative cycles at T0^max).
inline double safe_pair_distance(const Scenario& sc) {
  return std::sqrt(sc.radio.ref_path_gain) * sc.radio.elements_per_tile() * sc.max_tiles * 1.05;
}

struct Chain {
  Scenario sc;
  std::vector<int> path;  // 0, b1..bL, J + user cell
  DeploymentPlan plan;
  std::optional<int> airs_vertex;
  std::vector<double> hop_gains_sq;  // L+1 entries
  std::vector<int> tiles;            // L entries
  int airs_position = -1;            // 1-based, -1 when all passive
};

// A strip of 1 m cells holding an L-intermediate relay chain with exact hop
// distances in [5, 30] m; the terminal hop distance is pinned by override.
inline Chain make_chain(std::mt19937& rng, int num_hops, int airs_position) {
  const int L = num_hops - 1;
  Chain ch;
  ch.sc = base_scenario(1, 140, 1.0);
  std::uniform_real_distribution<double> dist_d(5.0, 30.0);
  std::uniform_real_distribution<double> dy(-0.7, 0.7), dz(-2.0, 2.0);
  std::uniform_real_distribution<double> y0(0.15, 0.85), z0(2.0, 5.0);
  std::uniform_int_distribution<int> tiles_d(1, ch.sc.max_tiles);

  Vec3 pos{0.5, y0(rng), z0(rng)};
  ch.sc.bs_cell = 0;
  ch.sc.bs_pos = pos;
  ch.sc.los_user_pairs.insert({0, 0});
  ch.path.push_back(0);

  int prev = 0;
  for (int k = 1; k <= L; ++k) {
    const double d = dist_d(rng);
    double ddy = dy(rng), ddz = dz(rng);
    double ny = pos.y + ddy, nz = pos.z + ddz;
    if (ny < 0.1 || ny > 0.9) { ny = pos.y - ddy; }
    if (nz < 0.5) { nz = pos.z + std::abs(ddz); }
    const double dx = std::sqrt(d * d - (ny - pos.y) * (ny - pos.y) - (nz - pos.z) * (nz - pos.z));
    pos = {pos.x + dx, ny, nz};
    const int cell = static_cast<int>(pos.x);
    ch.sc.candidate_cells.push_back(cell);
    ch.sc.candidate_pos[cell] = pos;
    ch.sc.los_node_pairs.insert({std::min(prev, cell), std::max(prev, cell)});
    ch.sc.los_user_pairs.insert({cell, cell});
    ch.hop_gains_sq.push_back(path_gain_sq(d, ch.sc.radio));
    const int t = tiles_d(rng);
    ch.tiles.push_back(t);
    if (k == airs_position) {
      ch.plan.active_cells.insert(cell);
      ch.airs_vertex = cell;
      ch.airs_position = airs_position;
    } else {
      ch.plan.passive_cells.insert(cell);
    }
    ch.plan.tiles[cell] = t;
    ch.path.push_back(cell);
    prev = cell;
  }

  const int user_cell = std::min(static_cast<int>(pos.x) + 3, ch.sc.cols - 1);
  const double d_last = dist_d(rng);
  ch.sc.los_user_pairs.insert({prev, user_cell});
  ch.sc.dmax_overrides[{prev, user_cell}] = d_last;
  ch.hop_gains_sq.push_back(path_gain_sq(d_last, ch.sc.radio));
  ch.path.push_back(ch.sc.num_cells() + user_cell);
  return ch;
}

struct RandomScenarioCfg {
  int rows = 1, cols = 4;
  double cell_size = 12.0;
  int n_candidates = 3;
  double p_pair = 0.7;
  double p_cover = 0.4;
  int max_tiles = 9;
  bool ensure_coverage = false;  // every cell covered by some node
};

// worst-case distance without requiring coverage (selection helper)
inline double worst_case_distance_free(const Scenario& sc, int node, int cell) {
  const Vec3 p = sc.node_pos(node);
  const CellRect& r = sc.cells[cell];
  double best = 0;
  for (double x : {r.x0, r.x1})
    for (double y : {r.y0, r.y1})
      best = std::max(best, distance(p, {x, y, sc.user_height_m}));
  return best;
}

inline Scenario random_scenario(std::mt19937& rng, const RandomScenarioCfg& cfg) {
  Scenario sc = base_scenario(cfg.rows, cfg.cols, cfg.cell_size);
  sc.max_tiles = cfg.max_tiles;
  const int J = sc.num_cells();
  std::uniform_real_distribution<double> frac(0.1, 0.9), z(2.0, 6.0), coin(0.0, 1.0);

  auto place = [&](int cell) {
    const CellRect& r = sc.cells[cell];
    return Vec3{r.x0 + frac(rng) * (r.x1 - r.x0), r.y0 + frac(rng) * (r.y1 - r.y0), z(rng)};
  };
  sc.bs_cell = 0;
  sc.bs_pos = place(0);

  std::vector<int> pool;
  for (int j = 1; j < J; ++j) pool.push_back(j);
  std::shuffle(pool.begin(), pool.end(), rng);
  for (int k = 0; k < cfg.n_candidates && k < static_cast<int>(pool.size()); ++k) {
    sc.candidate_cells.push_back(pool[k]);
    sc.candidate_pos[pool[k]] = place(pool[k]);
  }
  std::sort(sc.candidate_cells.begin(), sc.candidate_cells.end());

  const double dmin = safe_pair_distance(sc);
  std::vector<int> nodes{0};
  for (int c : sc.candidate_cells) nodes.push_back(c);
  for (size_t a = 0; a < nodes.size(); ++a)
    for (size_t b = a + 1; b < nodes.size(); ++b) {
      const double d = distance(sc.node_pos(nodes[a]), sc.node_pos(nodes[b]));
      if (d <= dmin) continue;
      const bool connect_spanning = (a == 0 || b == a + 1);
      if (coin(rng) < cfg.p_pair || connect_spanning)
        sc.los_node_pairs.insert({nodes[a], nodes[b]});
    }

  sc.los_user_pairs.insert({0, 0});
  for (int c : sc.candidate_cells) sc.los_user_pairs.insert({c, c});
  for (int i : nodes)
    for (int j = 0; j < J; ++j)
      if (coin(rng) < cfg.p_cover) sc.los_user_pairs.insert({i, j});
  if (cfg.ensure_coverage)
    for (int j = 0; j < J; ++j) {
      bool covered = false;
      for (int i : nodes) covered = covered || sc.covers_cell(i, j);
      if (!covered) {
        double best = 1e18;
        int pick = 0;
        for (int i : nodes) {
          const double d = worst_case_distance_free(sc, i, j);
          if (d < best) { best = d; pick = i; }
        }
        sc.los_user_pairs.insert({pick, j});
      }
    }
  return sc;
}

inline DeploymentPlan random_plan(std::mt19937& rng, const Scenario& sc) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> tiles(1, sc.max_tiles);
  DeploymentPlan plan;
  for (int c : sc.candidate_cells) {
    const double u = coin(rng);
    if (u < 0.45) {
      plan.passive_cells.insert(c);
      plan.tiles[c] = tiles(rng);
    } else if (u < 0.75) {
      plan.active_cells.insert(c);
      plan.tiles[c] = tiles(rng);
    }
  }
  return plan;
}

inline bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace testutil
