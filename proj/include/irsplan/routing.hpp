#pragma once

#include <vector>

#include "irsplan/scenario.hpp"
#include "irsplan/snr_core.hpp"

namespace irsplan {

/// A reachable negative cycle would mean unbounded SNR through passive
/// loops; surfaced as a scenario-consistency error.
class NegativeCycleError : public std::runtime_error {
 public:
  explicit NegativeCycleError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class ViewMode { hybrid, all_passive };

/// Plan-dependent weighted subgraph in natural-log units. Excluded edges
/// (undeployed origin, wrong AIRS, direct user edge in all-passive mode)
/// are dropped rather than carried at infinite weight.
struct WeightedView {
  struct WEdge {
    int from = 0, to = 0;
    double w = 0;
  };
  ViewMode mode = ViewMode::all_passive;
  int airs_vertex = -1;  // hybrid only
  int num_vertices = 0;  // |I| + J, for relaxation rounds
  int vertex_space = 0;  // 2J
  std::vector<WEdge> edges;
};

WeightedView make_hybrid_view(const Scenario& sc, const LosGraph& g, const DeploymentPlan& plan,
                              int airs_vertex);
WeightedView make_all_passive_view(const Scenario& sc, const LosGraph& g,
                                   const DeploymentPlan& plan);

struct ShortestPathResult {
  bool reachable = false;
  double weight = 0;
  std::vector<int> path;
};

/// Bellman-Ford single-source shortest paths (weights may be negative
/// once T^2 N^4 kappa^2 exceeds one).
std::vector<ShortestPathResult> shortest_paths(const WeightedView& view, int source);

PathSolution best_hybrid(const Scenario& sc, const LosGraph& g, const DeploymentPlan& plan,
                         int cell);
PathSolution best_all_passive(const Scenario& sc, const LosGraph& g, const DeploymentPlan& plan,
                              int cell);
PathSolution overall_snr(const Scenario& sc, const LosGraph& g, const DeploymentPlan& plan,
                         int cell);

/// All cells at once; shares the shortest-path runs across cells.
std::vector<PathSolution> evaluate_plan(const Scenario& sc, const LosGraph& g,
                                        const DeploymentPlan& plan);

/// Per-type variants over all cells (used by path freezing).
std::vector<PathSolution> direct_solutions(const Scenario& sc);
std::vector<PathSolution> all_passive_solutions(const Scenario& sc, const LosGraph& g,
                                                const DeploymentPlan& plan);
std::vector<PathSolution> hybrid_solutions(const Scenario& sc, const LosGraph& g,
                                           const DeploymentPlan& plan);

/// Exhaustive simple-path oracle, |I| + J <= 12.
PathSolution brute_force_best_path(const Scenario& sc, const LosGraph& g,
                                   const DeploymentPlan& plan, int cell);

}  // namespace irsplan
