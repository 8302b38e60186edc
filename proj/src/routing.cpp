#include "irsplan/routing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "irsplan/units.hpp"

namespace irsplan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ln kappa^{-2} for a hop of the given length
double log_inv_gain(double dist, const RadioParams& r) {
  return r.pathloss_exponent * std::log(dist) - std::log(r.ref_path_gain);
}

// ln(T^2 N^4) aggregated reflection gain of a surface
double reflect_gain_log(int tiles, const RadioParams& r) {
  const double n2 = r.elements_per_tile();
  return 2.0 * std::log(static_cast<double>(tiles)) + 2.0 * std::log(n2);
}

double log_sum_exp3(double a, double b, double c) {
  const double m = std::max({a, b, c});
  return m + std::log(std::exp(a - m) + std::exp(b - m) + std::exp(c - m));
}

// Eq.-(25)-style composition of the two hybrid sub-path weights
double compose_hybrid_snr(double lambda1, double lambda2, const RadioParams& r, int tiles_airs) {
  const double n2 = r.elements_per_tile();
  const double t1 = lambda1 - std::log(r.c0() * n2 * tiles_airs);
  const double t2 = lambda2 - std::log(r.ca());
  const double t3 = lambda1 + lambda2 - std::log(r.c0() * r.ca());
  return std::exp(-log_sum_exp3(t1, t2, t3));
}

WeightedView make_view(const Scenario& sc, const LosGraph& g, const DeploymentPlan& plan,
                       ViewMode mode, int airs_vertex) {
  WeightedView v;
  v.mode = mode;
  v.airs_vertex = airs_vertex;
  v.num_vertices = g.num_vertices();
  v.vertex_space = 2 * g.J;
  for (const auto& e : g.edges) {
    double w;
    if (e.from == 0) {
      if (mode == ViewMode::all_passive && g.is_user_vertex(e.to)) continue;  // direct handled as Type 1
      w = log_inv_gain(e.dist, sc.radio);
    } else if (mode == ViewMode::hybrid && e.from == airs_vertex) {
      w = log_inv_gain(e.dist, sc.radio) - reflect_gain_log(plan.tiles_at(e.from), sc.radio);
    } else if (plan.is_passive(e.from)) {
      w = log_inv_gain(e.dist, sc.radio) - reflect_gain_log(plan.tiles_at(e.from), sc.radio);
    } else {
      continue;  // other AIRS or undeployed candidate origin
    }
    v.edges.push_back({e.from, e.to, w});
  }
  return v;
}

PathSolution make_unreachable(int cell) {
  PathSolution s;
  s.cell = cell;
  s.kind = PathKind::unreachable;
  return s;
}

PathSolution finish(PathSolution s) {
  if (s.reachable()) s.snr_db = linear_to_db(s.snr_linear);
  return s;
}

}  // namespace

std::vector<PathSolution> direct_solutions(const Scenario& sc) {
  std::vector<PathSolution> out;
  for (int j = 0; j < sc.num_cells(); ++j) {
    PathSolution s = make_unreachable(j);
    if (auto snr = direct_snr(sc, j)) {
      s.kind = PathKind::direct;
      s.path = {0, sc.num_cells() + j};
      s.snr_linear = *snr;
    }
    out.push_back(finish(s));
  }
  return out;
}

std::vector<PathSolution> all_passive_solutions(const Scenario& sc, const LosGraph& g,
                                                const DeploymentPlan& plan) {
  const auto view = make_all_passive_view(sc, g, plan);
  const auto sp = shortest_paths(view, 0);
  std::vector<PathSolution> out;
  for (int j = 0; j < g.J; ++j) {
    PathSolution s = make_unreachable(j);
    const auto& r = sp[g.J + j];
    if (r.reachable) {
      s.kind = PathKind::all_passive;
      s.path = r.path;
      s.snr_linear = std::exp(std::log(sc.radio.c0()) - r.weight);
    }
    out.push_back(finish(s));
  }
  return out;
}

std::vector<PathSolution> hybrid_solutions(const Scenario& sc, const LosGraph& g,
                                           const DeploymentPlan& plan) {
  std::vector<PathSolution> out;
  for (int j = 0; j < g.J; ++j) out.push_back(make_unreachable(j));
  for (int bl : plan.active_cells) {
    const auto view = make_hybrid_view(sc, g, plan, bl);
    const auto from_bs = shortest_paths(view, 0);
    if (!from_bs[bl].reachable) continue;
    const auto from_airs = shortest_paths(view, bl);
    for (int j = 0; j < g.J; ++j) {
      const auto& down = from_airs[g.J + j];
      if (!down.reachable) continue;
      PathSolution cand;
      cand.cell = j;
      cand.kind = PathKind::hybrid;
      cand.airs_vertex = bl;
      cand.snr_linear = compose_hybrid_snr(from_bs[bl].weight, down.weight, sc.radio,
                                           plan.tiles_at(bl));
      cand.path = from_bs[bl].path;
      cand.path.insert(cand.path.end(), down.path.begin() + 1, down.path.end());
      if (snr_less(out[j], cand)) out[j] = cand;  // ties keep the smaller b_l
    }
  }
  for (auto& s : out) s = finish(s);
  return out;
}

namespace {

// kind priority for exact SNR ties: hybrid > all_passive > direct
int kind_rank(PathKind k) {
  switch (k) {
    case PathKind::hybrid: return 3;
    case PathKind::all_passive: return 2;
    case PathKind::direct: return 1;
    default: return 0;
  }
}

PathSolution pick_best(const PathSolution& a, const PathSolution& b) {
  if (snr_less(a, b)) return b;
  if (snr_less(b, a)) return a;
  return kind_rank(b.kind) > kind_rank(a.kind) ? b : a;
}

}  // namespace

WeightedView make_hybrid_view(const Scenario& sc, const LosGraph& g, const DeploymentPlan& plan,
                              int airs_vertex) {
  return make_view(sc, g, plan, ViewMode::hybrid, airs_vertex);
}

WeightedView make_all_passive_view(const Scenario& sc, const LosGraph& g,
                                   const DeploymentPlan& plan) {
  return make_view(sc, g, plan, ViewMode::all_passive, -1);
}

std::vector<ShortestPathResult> shortest_paths(const WeightedView& view, int source) {
  const int n = view.vertex_space;
  std::vector<double> dist(n, kInf);
  std::vector<int> pred(n, -1);
  dist[source] = 0;
  for (int round = 0; round + 1 < view.num_vertices; ++round) {
    bool changed = false;
    for (const auto& e : view.edges) {
      if (dist[e.from] == kInf) continue;
      const double cand = dist[e.from] + e.w;
      if (cand < dist[e.to]) {
        dist[e.to] = cand;
        pred[e.to] = e.from;
        changed = true;
      }
    }
    if (!changed) break;
  }
  for (const auto& e : view.edges)
    if (dist[e.from] != kInf && dist[e.from] + e.w < dist[e.to] - 1e-12)
      throw NegativeCycleError("negative cycle reachable from vertex " + std::to_string(source) +
                               ": passive loop with unbounded gain");

  std::vector<ShortestPathResult> out(n);
  for (int v = 0; v < n; ++v) {
    if (dist[v] == kInf) continue;
    auto& r = out[v];
    r.reachable = true;
    r.weight = dist[v];
    for (int u = v; u != -1; u = pred[u]) r.path.push_back(u);
    std::reverse(r.path.begin(), r.path.end());
  }
  return out;
}

PathSolution best_hybrid(const Scenario& sc, const LosGraph& g, const DeploymentPlan& plan,
                         int cell) {
  return hybrid_solutions(sc, g, plan)[cell];
}

PathSolution best_all_passive(const Scenario& sc, const LosGraph& g, const DeploymentPlan& plan,
                              int cell) {
  return all_passive_solutions(sc, g, plan)[cell];
}

PathSolution overall_snr(const Scenario& sc, const LosGraph& g, const DeploymentPlan& plan,
                         int cell) {
  return evaluate_plan(sc, g, plan)[cell];
}

std::vector<PathSolution> evaluate_plan(const Scenario& sc, const LosGraph& g,
                                        const DeploymentPlan& plan) {
  plan.validate(sc);
  auto direct = direct_solutions(sc);
  auto passive = all_passive_solutions(sc, g, plan);
  auto hybrid = hybrid_solutions(sc, g, plan);
  std::vector<PathSolution> out;
  for (int j = 0; j < g.J; ++j)
    out.push_back(pick_best(pick_best(direct[j], passive[j]), hybrid[j]));
  return out;
}

PathSolution brute_force_best_path(const Scenario& sc, const LosGraph& g,
                                   const DeploymentPlan& plan, int cell) {
  if (g.num_vertices() > 12)
    throw std::invalid_argument("brute_force_best_path: vertex budget exceeded");
  plan.validate(sc);

  const int target = g.J + cell;
  PathSolution best = make_unreachable(cell);

  // Type 1
  best = pick_best(best, direct_solutions(sc)[cell]);

  // Type 3: simple paths through passive surfaces only
  {
    std::vector<int> path{0};
    std::vector<double> gains;
    std::vector<int> tiles;
    std::vector<bool> used(2 * g.J, false);
    used[0] = true;
    auto dfs = [&](auto&& self, int v) -> void {
      for (int ei : g.out_edges[v]) {
        const auto& e = g.edges[ei];
        if (e.to == target && !path.empty() && path.size() >= 2) {
          // terminal hop from a passive surface
          gains.push_back(path_gain_sq(e.dist, sc.radio));
          PathSolution cand;
          cand.cell = cell;
          cand.kind = PathKind::all_passive;
          cand.path = path;
          cand.path.push_back(target);
          cand.snr_linear = all_passive_path_snr(sc.radio, gains, tiles);
          cand.snr_db = linear_to_db(cand.snr_linear);
          best = pick_best(best, cand);
          gains.pop_back();
        }
        if (!g.is_user_vertex(e.to) && plan.is_passive(e.to) && !used[e.to]) {
          used[e.to] = true;
          path.push_back(e.to);
          gains.push_back(path_gain_sq(e.dist, sc.radio));
          tiles.push_back(plan.tiles_at(e.to));
          self(self, e.to);
          tiles.pop_back();
          gains.pop_back();
          path.pop_back();
          used[e.to] = false;
        }
      }
    };
    dfs(dfs, 0);
  }

  // Type 2: per designated AIRS, best upstream and downstream sub-paths
  // enumerated independently (vertex reuse across, not within, the halves)
  for (int bl : plan.active_cells) {
    // upstream: maximize X = kappa^2_{0,b1} * prod(kappa^2 T^2 N^4) over 0 -> bl
    double best_x = 0;
    std::vector<int> best_up;
    {
      std::vector<int> path{0};
      std::vector<bool> used(2 * g.J, false);
      used[0] = true;
      auto dfs = [&](auto&& self, int v, double x) -> void {
        for (int ei : g.out_edges[v]) {
          const auto& e = g.edges[ei];
          if (g.is_user_vertex(e.to) || used[e.to]) continue;
          const double hop = path_gain_sq(e.dist, sc.radio);
          double x2;
          if (v == 0) {
            x2 = hop;
          } else {
            const double n2 = sc.radio.elements_per_tile();
            const double t = plan.tiles_at(v);
            x2 = x * hop * n2 * n2 * t * t;
          }
          if (e.to == bl) {
            if (x2 > best_x) {
              best_x = x2;
              best_up = path;
              best_up.push_back(bl);
            }
            continue;
          }
          if (!plan.is_passive(e.to)) continue;
          used[e.to] = true;
          path.push_back(e.to);
          self(self, e.to, x2);
          path.pop_back();
          used[e.to] = false;
        }
      };
      dfs(dfs, 0, 1.0);
    }
    if (best_x == 0) continue;

    // downstream: maximize Y = prod_{m>=l}(kappa^2 T^2 N^4) over bl -> J+cell
    double best_y = 0;
    std::vector<int> best_down;
    {
      std::vector<int> path{bl};
      std::vector<bool> used(2 * g.J, false);
      used[bl] = true;
      auto dfs = [&](auto&& self, int v, double y) -> void {
        for (int ei : g.out_edges[v]) {
          const auto& e = g.edges[ei];
          if (used[e.to]) continue;
          const double n2 = sc.radio.elements_per_tile();
          const double t = plan.tiles_at(v);
          const double y2 = y * path_gain_sq(e.dist, sc.radio) * n2 * n2 * t * t;
          if (e.to == target) {
            if (y2 > best_y) {
              best_y = y2;
              best_down = path;
              best_down.push_back(target);
            }
            continue;
          }
          if (g.is_user_vertex(e.to) || !plan.is_passive(e.to)) continue;
          used[e.to] = true;
          path.push_back(e.to);
          self(self, e.to, y2);
          path.pop_back();
          used[e.to] = false;
        }
      };
      dfs(dfs, bl, 1.0);
    }
    if (best_y == 0) continue;

    const double c0 = sc.radio.c0(), ca = sc.radio.ca();
    const double n2 = sc.radio.elements_per_tile();
    PathSolution cand;
    cand.cell = cell;
    cand.kind = PathKind::hybrid;
    cand.airs_vertex = bl;
    cand.snr_linear = 1.0 / (1.0 / (c0 * n2 * plan.tiles_at(bl) * best_x) + 1.0 / (ca * best_y) +
                             1.0 / (c0 * ca * best_x * best_y));
    cand.snr_db = linear_to_db(cand.snr_linear);
    cand.path = best_up;
    cand.path.insert(cand.path.end(), best_down.begin() + 1, best_down.end());
    best = pick_best(best, cand);
  }
  return best;
}

}  // namespace irsplan
