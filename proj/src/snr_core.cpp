#include "irsplan/snr_core.hpp"

#include <cmath>
#include <stdexcept>

#include "irsplan/units.hpp"

namespace irsplan {

void DeploymentPlan::validate(const Scenario& sc) const {
  for (int c : passive_cells)
    if (active_cells.count(c))
      throw std::invalid_argument("plan: cell " + std::to_string(c) + " in both P and A");
  for (const auto& cells : {passive_cells, active_cells})
    for (int c : cells)
      if (!sc.is_candidate(c))
        throw std::invalid_argument("plan: cell " + std::to_string(c) + " is not a candidate");
  if (tiles.size() != passive_cells.size() + active_cells.size())
    throw std::invalid_argument("plan: tiles keys must be exactly P union A");
  for (const auto& [c, t] : tiles) {
    if (!deployed(c)) throw std::invalid_argument("plan: tiles on undeployed cell " + std::to_string(c));
    if (t < 1 || t > sc.max_tiles)
      throw std::invalid_argument("plan: tile count " + std::to_string(t) + " out of [1, T0max]");
  }
}

DeploymentPlan DeploymentPlan::uniform(const std::set<int>& passive, const std::set<int>& active,
                                       int tiles_passive, int tiles_active) {
  DeploymentPlan p;
  p.passive_cells = passive;
  p.active_cells = active;
  for (int c : passive) p.tiles[c] = tiles_passive;
  for (int c : active) p.tiles[c] = tiles_active;
  return p;
}

Cost total_cost(const DeploymentPlan& plan, const CostModel& costs) {
  Cost c;
  c.cell_use = costs.cell_use_passive * static_cast<double>(plan.passive_cells.size()) +
               costs.cell_use_active * static_cast<double>(plan.active_cells.size());
  double passive_tiles = 0, active_tiles = 0;
  for (int p : plan.passive_cells) passive_tiles += plan.tiles_at(p);
  for (int a : plan.active_cells) active_tiles += plan.tiles_at(a);
  c.hardware = costs.per_tile_passive * passive_tiles + costs.per_tile_active * active_tiles;
  c.total = c.cell_use + c.hardware;
  return c;
}

const char* to_string(PathKind k) {
  switch (k) {
    case PathKind::direct: return "direct";
    case PathKind::hybrid: return "hybrid";
    case PathKind::all_passive: return "all_passive";
    case PathKind::unreachable: return "unreachable";
  }
  return "?";
}

bool snr_less(const PathSolution& a, const PathSolution& b) {
  if (!a.reachable()) return b.reachable();
  if (!b.reachable()) return false;
  return a.snr_linear < b.snr_linear;
}

double path_gain_sq(double distance_m, const RadioParams& radio) {
  if (distance_m <= 0) throw std::invalid_argument("path_gain_sq: distance must be > 0");
  return radio.ref_path_gain / std::pow(distance_m, radio.pathloss_exponent);
}

std::optional<double> direct_snr(const Scenario& sc, int cell) {
  if (!sc.covers_cell(0, cell)) return std::nullopt;
  return sc.radio.c0() * path_gain_sq(worst_case_distance(sc, 0, cell), sc.radio);
}

double hybrid_path_snr(const RadioParams& radio, std::span<const double> hop_gains_sq,
                       std::span<const int> tiles_on_path, int airs_position) {
  const int L = static_cast<int>(tiles_on_path.size());
  if (L < 1 || hop_gains_sq.size() != static_cast<size_t>(L) + 1)
    throw std::invalid_argument("hybrid_path_snr: need L >= 1 hops and L+1 gains");
  if (airs_position < 1 || airs_position > L)
    throw std::invalid_argument("hybrid_path_snr: airs_position out of range");
  const double n2 = radio.elements_per_tile();
  const double n4 = n2 * n2;
  // upstream: BS hop plus CPB gains before the active surface
  double x = hop_gains_sq[0];
  for (int m = 1; m < airs_position; ++m) {
    if (tiles_on_path[m - 1] < 1) throw std::invalid_argument("hybrid_path_snr: zero tiles on path");
    const double t = tiles_on_path[m - 1];
    x *= hop_gains_sq[m] * n4 * t * t;
  }
  // downstream: active surface's own hop onward
  double y = 1.0;
  for (int m = airs_position; m <= L; ++m) {
    if (tiles_on_path[m - 1] < 1) throw std::invalid_argument("hybrid_path_snr: zero tiles on path");
    const double t = tiles_on_path[m - 1];
    y *= hop_gains_sq[m] * n4 * t * t;
  }
  const double c0 = radio.c0(), ca = radio.ca();
  const double t_airs = tiles_on_path[airs_position - 1];
  const double inv = 1.0 / (c0 * n2 * t_airs * x) + 1.0 / (ca * y) + 1.0 / (c0 * ca * x * y);
  return 1.0 / inv;
}

double all_passive_path_snr(const RadioParams& radio, std::span<const double> hop_gains_sq,
                            std::span<const int> tiles_on_path) {
  const int L = static_cast<int>(tiles_on_path.size());
  if (L < 1 || hop_gains_sq.size() != static_cast<size_t>(L) + 1)
    throw std::invalid_argument("all_passive_path_snr: need L >= 1 hops and L+1 gains");
  const double n2 = radio.elements_per_tile();
  double snr = radio.c0() * hop_gains_sq[0];
  for (int m = 1; m <= L; ++m) {
    const double t = tiles_on_path[m - 1];
    snr *= hop_gains_sq[m] * n2 * n2 * t * t;
  }
  return snr;
}

double tradeoff_ratio(int L, int l, double d0, int T0, double cost_ratio,
                      const RadioParams& radio) {
  if (l < 1 || l > L) throw std::invalid_argument("tradeoff_ratio: l out of [1, L]");
  const double kappa0 = std::sqrt(path_gain_sq(d0, radio));
  const double n0 = radio.elements_per_tile() * static_cast<double>(T0);
  const double c0 = radio.c0(), ca = radio.ca(), cp = cost_ratio;
  const double kn = kappa0 * n0;
  const double denom = ca * cp * n0 * std::pow(kn, 2.0 * (L + 1 - l)) +
                       c0 * std::pow(kn, 2.0 * l) + n0 * n0;
  return ca * cp * cp * n0 * n0 / denom;
}

}  // namespace irsplan
