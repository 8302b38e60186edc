#pragma once

#include <map>
#include <set>
#include <vector>

#include "irsplan/routing.hpp"
#include "irsplan/scenario.hpp"
#include "irsplan/snr_core.hpp"

namespace irsplan {

/// Per-cell path frozen at minimum tiles, with the constants that make the
/// tile subproblem convex. Constants are carried in log form.
struct FrozenCell {
  PathKind kind = PathKind::unreachable;
  std::vector<int> path;
  int airs_vertex = -1;
  double direct_snr_linear = 0;           // direct kind
  double log_cbar0 = 0, log_cbar_a = 0;   // hybrid kind
  double log_ctilde0 = 0;                 // all_passive kind
  std::map<int, int> up_count;            // surfaces strictly before the AIRS
  std::map<int, int> dn_count;            // AIRS onward
  std::map<int, int> path_count;          // all_passive surfaces
};

struct FrozenPathSet {
  std::vector<FrozenCell> cells;  // indexed by cell id
};

/// (P2) feasibility gate: full path selection at T^max meets gamma0 everywhere.
bool check_feasibility(const Scenario& sc, const LosGraph& g, const std::set<int>& passive,
                       const std::set<int>& active, double gamma0);

/// Select one path per cell at the given uniform tile level (1 for the
/// standard freeze, T^max for the fallback re-freeze) and compute the
/// convex-subproblem constants.
FrozenPathSet freeze_paths(const Scenario& sc, const LosGraph& g, const std::set<int>& passive,
                           const std::set<int>& active, int freeze_tiles = 1);

enum class SolveStatus { ok, infeasible, no_convergence };

struct RelaxedSolution {
  std::map<int, double> x;  // cell -> ln(tile count), continuous
  double objective = 0;     // full continuous cost incl. cell-use
  double kkt_residual = 0;
  int iterations = 0;
  std::vector<double> central_objectives;  // cost at each barrier stage
};

struct SolverOptions {
  double duality_tol = 1e-9;
  int max_newton_iters = 200;
};

struct RelaxOutcome {
  SolveStatus status = SolveStatus::infeasible;
  RelaxedSolution solution;
};

/// Barrier-method solve of the frozen convex relaxation over the free
/// cells; `fixed` pins chosen cells to exact values, `lo`/`hi` bound the
/// rest (defaults [0, ln T0^max]).
RelaxOutcome solve_relaxation(const Scenario& sc, const FrozenPathSet& frozen,
                              const std::set<int>& passive, const std::set<int>& active,
                              double gamma0, const std::map<int, double>& fixed = {},
                              const std::map<int, std::pair<double, double>>& bounds = {},
                              const SolverOptions& opts = {});

/// Integer tiles from a continuous solution: ceil(e^x), clamped to [1, T0^max].
std::map<int, int> reconstruct_tiles(const Scenario& sc, const RelaxedSolution& solution);

struct TileResult {
  bool feasible = false;
  std::map<int, int> tiles;
  Cost cost;
};

/// Relax-reconstruct-refine tile optimizer for fixed surface locations.
TileResult sequential_refine(const Scenario& sc, const LosGraph& g, const std::set<int>& passive,
                             const std::set<int>& active, double gamma0,
                             const SolverOptions& opts = {});

/// Full tile enumeration against the true (path-selecting) SNR;
/// (T0^max)^(|P|+|A|) must stay within 1e7.
TileResult brute_force_tiles(const Scenario& sc, const LosGraph& g, const std::set<int>& passive,
                             const std::set<int>& active, double gamma0);

}  // namespace irsplan
