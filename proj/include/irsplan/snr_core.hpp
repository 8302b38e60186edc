#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "irsplan/scenario.hpp"

namespace irsplan {

/// Selected cells and per-cell tile counts. Keys of `tiles` are exactly
/// passive_cells ∪ active_cells, each in [1, T0^max].
struct DeploymentPlan {
  std::set<int> passive_cells;
  std::set<int> active_cells;
  std::map<int, int> tiles;

  bool is_passive(int cell) const { return passive_cells.count(cell) > 0; }
  bool is_active(int cell) const { return active_cells.count(cell) > 0; }
  bool deployed(int cell) const { return is_passive(cell) || is_active(cell); }
  int tiles_at(int cell) const {
    auto it = tiles.find(cell);
    return it == tiles.end() ? 0 : it->second;
  }
  void validate(const Scenario& sc) const;

  static DeploymentPlan uniform(const std::set<int>& passive, const std::set<int>& active,
                                int tiles_passive, int tiles_active);
};

struct Cost {
  double total = 0;
  double cell_use = 0;
  double hardware = 0;
};

Cost total_cost(const DeploymentPlan& plan, const CostModel& costs);

enum class PathKind { direct, hybrid, all_passive, unreachable };

const char* to_string(PathKind k);

/// Per-cell outcome of path/type selection.
struct PathSolution {
  int cell = -1;
  PathKind kind = PathKind::unreachable;
  std::vector<int> path;            // vertex sequence 0 .. J+cell
  std::optional<int> airs_vertex;   // hybrid only
  double snr_linear = 0;            // meaningless when unreachable
  double snr_db = 0;

  bool reachable() const { return kind != PathKind::unreachable; }
};

/// Unreachable compares below any real SNR.
bool snr_less(const PathSolution& a, const PathSolution& b);

/// kappa^2 = beta0 / d^alpha.
double path_gain_sq(double distance_m, const RadioParams& radio);

/// Eq.-(9)-style direct worst-case SNR; nullopt without direct LoS.
std::optional<double> direct_snr(const Scenario& sc, int cell);

/// Closed-form hybrid SNR over a concrete L-hop path. `hop_gains_sq` has
/// L+1 entries (kappa^2 per hop), `tiles_on_path` L entries, and
/// `airs_position` is 1-based among the intermediates.
double hybrid_path_snr(const RadioParams& radio, std::span<const double> hop_gains_sq,
                       std::span<const int> tiles_on_path, int airs_position);

/// Closed-form all-passive SNR over a concrete L-hop path.
double all_passive_path_snr(const RadioParams& radio, std::span<const double> hop_gains_sq,
                            std::span<const int> tiles_on_path);

/// gamma_A / gamma_P for the equal-spacing chain comparison: L reflections
/// spaced d0 apart, T0 tiles each, the l-th surface swapped for an active
/// one holding T0 * cost_ratio tiles.
double tradeoff_ratio(int L, int l, double d0, int T0, double cost_ratio,
                      const RadioParams& radio);

}  // namespace irsplan
