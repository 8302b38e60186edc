#pragma once

#include <set>
#include <vector>

#include "irsplan/scenario.hpp"
#include "irsplan/snr_core.hpp"
#include "irsplan/tile_opt.hpp"

namespace irsplan {

/// Joint search over cell assignments, or one of the paper's benchmark
/// restrictions (PIRS-only with/without tile optimization, joint with
/// fixed tile counts).
enum class Benchmark { none, all_pirs_optimized, all_pirs_equal, joint_equal };

struct SearchConfig {
  double gamma0_linear = 1.0;
  Benchmark benchmark = Benchmark::none;
  int equal_tiles_passive = 4;
  int equal_tiles_active = 1;
  int workers = 1;
  long max_examined = 0;  // 0 = unlimited
  SolverOptions solver;
};

struct SolveReport {
  bool feasible = false;
  DeploymentPlan plan;
  Cost cost;
  std::vector<PathSolution> per_cell;
  long total_combos = 0;
  long examined = 0;
  long pruned_infeasible = 0;
  long pruned_bound = 0;
  bool truncated = false;
  double wall_ms = 0;
};

/// Cost-sorted enumeration of (P, A) assignments with lower-bound and
/// infeasibility pruning.
SolveReport optimize_deployment(const Scenario& sc, const LosGraph& g, const SearchConfig& cfg);

/// Exhaustive reference without pruning; 3^|I0| capped at 2000 combos.
SolveReport full_enumeration(const Scenario& sc, const LosGraph& g, const SearchConfig& cfg);

}  // namespace irsplan
