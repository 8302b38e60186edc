#include "irsplan/tile_opt.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace irsplan {

namespace {

// relative slack applied to every gamma0 comparison
bool meets_target(double snr_linear, double gamma0) {
  return snr_linear >= gamma0 * (1.0 - 1e-9);
}

double safe_exp(double v) { return std::exp(std::clamp(v, -700.0, 700.0)); }

double log_inv_gain(double dist, const RadioParams& r) {
  return r.pathloss_exponent * std::log(dist) - std::log(r.ref_path_gain);
}

double hop_distance(const Scenario& sc, int from, int to_vertex) {
  if (to_vertex >= sc.num_cells()) return worst_case_distance(sc, from, to_vertex - sc.num_cells());
  return distance(sc.node_pos(from), sc.node_pos(to_vertex));
}

// ---- frozen convex subproblem ----------------------------------------

// sum_k exp(logc_k - a_k . x) <= limit
struct ExpCon {
  std::vector<std::pair<double, Eigen::VectorXd>> terms;
  double limit = 0;
};

// a . x >= rhs
struct LinCon {
  Eigen::VectorXd a;
  double rhs = 0;
};

struct Subproblem {
  std::vector<int> free_cells;     // variable order
  Eigen::VectorXd cost;            // per-tile cost per free cell
  Eigen::VectorXd lo, hi;
  std::vector<LinCon> lin;
  std::vector<ExpCon> exp_cons;
  double fixed_cost = 0;           // cell-use + hardware of fixed cells
  bool infeasible_constant = false;
};

double exp_con_value(const ExpCon& c, const Eigen::VectorXd& x) {
  double s = 0;
  for (const auto& [logc, a] : c.terms) s += safe_exp(logc - a.dot(x));
  return s;
}

// Assemble the variable-space problem for given frozen paths, fixing some
// cells at exact values.
Subproblem build_subproblem(const Scenario& sc, const FrozenPathSet& frozen,
                            const std::set<int>& passive, const std::set<int>& active,
                            double gamma0, const std::map<int, double>& fixed,
                            const std::map<int, std::pair<double, double>>& bounds) {
  Subproblem sp;
  std::vector<int> all_cells;
  for (int c : passive) all_cells.push_back(c);
  for (int c : active) all_cells.push_back(c);
  std::sort(all_cells.begin(), all_cells.end());

  std::map<int, int> var_index;
  const double log_tmax = std::log(static_cast<double>(sc.max_tiles));
  for (int c : all_cells) {
    if (fixed.count(c)) continue;
    var_index[c] = static_cast<int>(sp.free_cells.size());
    sp.free_cells.push_back(c);
  }
  const int n = static_cast<int>(sp.free_cells.size());
  sp.cost.resize(n);
  sp.lo.resize(n);
  sp.hi.resize(n);
  for (int k = 0; k < n; ++k) {
    const int c = sp.free_cells[k];
    sp.cost[k] = active.count(c) ? sc.costs.per_tile_active : sc.costs.per_tile_passive;
    auto b = bounds.find(c);
    sp.lo[k] = b == bounds.end() ? 0.0 : b->second.first;
    sp.hi[k] = b == bounds.end() ? log_tmax : b->second.second;
  }
  sp.fixed_cost = sc.costs.cell_use_passive * static_cast<double>(passive.size()) +
                  sc.costs.cell_use_active * static_cast<double>(active.size());
  for (const auto& [c, xv] : fixed)
    sp.fixed_cost +=
        (active.count(c) ? sc.costs.per_tile_active : sc.costs.per_tile_passive) * std::exp(xv);

  const double n2 = sc.radio.elements_per_tile();
  auto coeff_vec = [&](const std::map<int, int>& counts, double scale, int extra_cell,
                       double extra) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
    double fixed_shift = 0;  // contribution of fixed variables to a . x
    for (const auto& [c, cnt] : counts) {
      auto it = var_index.find(c);
      if (it != var_index.end())
        a[it->second] += scale * cnt;
      else
        fixed_shift += scale * cnt * fixed.at(c);
    }
    if (extra_cell >= 0) {
      auto it = var_index.find(extra_cell);
      if (it != var_index.end())
        a[it->second] += extra;
      else
        fixed_shift += extra * fixed.at(extra_cell);
    }
    return std::make_pair(a, fixed_shift);
  };

  for (const auto& fc : frozen.cells) {
    switch (fc.kind) {
      case PathKind::direct:
        if (!meets_target(fc.direct_snr_linear, gamma0)) sp.infeasible_constant = true;
        break;
      case PathKind::all_passive: {
        auto [a, shift] = coeff_vec(fc.path_count, 2.0, -1, 0);
        const double rhs = fc.log_ctilde0 + std::log(gamma0) - shift;
        if (a.isZero(0)) {
          if (rhs > 1e-9) sp.infeasible_constant = true;
        } else if (rhs > 0) {
          sp.lin.push_back({a, rhs});
        }
        break;
      }
      case PathKind::hybrid: {
        ExpCon c;
        c.limit = 1.0 / gamma0;
        auto [a1, s1] = coeff_vec(fc.up_count, 2.0, fc.airs_vertex, 1.0);
        auto [a2, s2] = coeff_vec(fc.dn_count, 2.0, -1, 0);
        c.terms.push_back({fc.log_cbar0 - std::log(n2) - s1, a1});
        c.terms.push_back({fc.log_cbar_a - s2, a2});
        c.terms.push_back({fc.log_cbar0 + fc.log_cbar_a - s1 - s2, a1 + a2});
        sp.exp_cons.push_back(std::move(c));
        break;
      }
      case PathKind::unreachable:
        sp.infeasible_constant = true;
        break;
    }
  }
  return sp;
}

bool strictly_feasible(const Subproblem& sp, const Eigen::VectorXd& x, double margin) {
  for (int k = 0; k < x.size(); ++k)
    if (x[k] <= sp.lo[k] + margin || x[k] >= sp.hi[k] - margin) return false;
  for (const auto& c : sp.lin)
    if (c.a.dot(x) - c.rhs <= margin) return false;
  for (const auto& c : sp.exp_cons)
    if (c.limit - exp_con_value(c, x) <= margin * c.limit) return false;
  return true;
}

bool feasible_at(const Subproblem& sp, const Eigen::VectorXd& x) {
  for (const auto& c : sp.lin)
    if (c.a.dot(x) < c.rhs - 1e-9) return false;
  for (const auto& c : sp.exp_cons)
    if (exp_con_value(c, x) > c.limit * (1 + 1e-9)) return false;
  return true;
}

struct BarrierEval {
  double value = 0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
  bool interior = true;
};

BarrierEval eval_barrier(const Subproblem& sp, const Eigen::VectorXd& x, double t) {
  const int n = static_cast<int>(x.size());
  BarrierEval e;
  e.grad = Eigen::VectorXd::Zero(n);
  e.hess = Eigen::MatrixXd::Zero(n, n);

  for (int k = 0; k < n; ++k) {
    const double ex = std::exp(x[k]);
    e.value += t * sp.cost[k] * ex;
    e.grad[k] += t * sp.cost[k] * ex;
    e.hess(k, k) += t * sp.cost[k] * ex;
    const double dl = x[k] - sp.lo[k], dh = sp.hi[k] - x[k];
    if (dl <= 0 || dh <= 0) {
      e.interior = false;
      return e;
    }
    e.value += -std::log(dl) - std::log(dh);
    e.grad[k] += -1.0 / dl + 1.0 / dh;
    e.hess(k, k) += 1.0 / (dl * dl) + 1.0 / (dh * dh);
  }
  for (const auto& c : sp.lin) {
    const double slack = c.a.dot(x) - c.rhs;
    if (slack <= 0) {
      e.interior = false;
      return e;
    }
    e.value += -std::log(slack);
    e.grad += -c.a / slack;
    e.hess += (c.a * c.a.transpose()) / (slack * slack);
  }
  for (const auto& c : sp.exp_cons) {
    double s = 0;
    Eigen::VectorXd ds = Eigen::VectorXd::Zero(n);
    Eigen::MatrixXd d2s = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [logc, a] : c.terms) {
      const double w = safe_exp(logc - a.dot(x));
      s += w;
      ds -= w * a;
      d2s += w * (a * a.transpose());
    }
    const double slack = c.limit - s;
    if (slack <= 0) {
      e.interior = false;
      return e;
    }
    e.value += -std::log(slack);
    e.grad += ds / slack;
    e.hess += (ds * ds.transpose()) / (slack * slack) + d2s / slack;
  }
  return e;
}

// KKT stationarity residual, relative to the objective gradient scale, with
// least-squares multipliers over the near-active constraint set
double kkt_residual(const Subproblem& sp, const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  Eigen::VectorXd gf(n);
  for (int k = 0; k < n; ++k) gf[k] = sp.cost[k] * std::exp(x[k]);

  std::vector<Eigen::VectorXd> cols;
  auto consider = [&](const Eigen::VectorXd& grad, double rel_slack) {
    if (rel_slack <= 1e-2) cols.push_back(grad);
  };
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[k] = -1.0;
    consider(e, x[k] - sp.lo[k]);
    e[k] = 1.0;
    consider(e, sp.hi[k] - x[k]);
  }
  for (const auto& c : sp.lin)
    consider(-c.a, (c.a.dot(x) - c.rhs) / std::max(1.0, std::abs(c.rhs)));
  for (const auto& c : sp.exp_cons) {
    Eigen::VectorXd ds = Eigen::VectorXd::Zero(n);
    double s = 0;
    for (const auto& [logc, a] : c.terms) {
      const double w = safe_exp(logc - a.dot(x));
      s += w;
      ds -= w * a;
    }
    consider(ds / c.limit, (c.limit - s) / c.limit);
  }

  const double gf_scale = std::max(1.0, gf.norm());
  std::vector<int> keep(cols.size());
  std::iota(keep.begin(), keep.end(), 0);
  while (!keep.empty()) {
    Eigen::MatrixXd A(n, static_cast<int>(keep.size()));
    for (size_t k = 0; k < keep.size(); ++k) A.col(static_cast<int>(k)) = cols[keep[k]];
    Eigen::VectorXd lambda = A.colPivHouseholderQr().solve(-gf);
    int worst = -1;
    for (int k = 0; k < lambda.size(); ++k)
      if (lambda[k] < -1e-9 && (worst < 0 || lambda[k] < lambda[worst])) worst = k;
    if (worst < 0) {
      for (int k = 0; k < lambda.size(); ++k) lambda[k] = std::max(0.0, lambda[k]);
      return (gf + A * lambda).norm() / gf_scale;
    }
    keep.erase(keep.begin() + worst);
  }
  return gf.norm() / gf_scale;
}

RelaxOutcome solve_subproblem(const Subproblem& sp, const SolverOptions& opts) {
  RelaxOutcome out;
  if (sp.infeasible_constant) return out;

  const int n = static_cast<int>(sp.free_cells.size());
  if (n == 0) {
    Eigen::VectorXd empty(0);
    if (!feasible_at(sp, empty)) return out;
    out.status = SolveStatus::ok;
    out.solution.objective = sp.fixed_cost;
    return out;
  }
  if (!feasible_at(sp, sp.hi)) return out;  // monotone SNR: upper corner decides

  auto finish = [&](const Eigen::VectorXd& x, double t, int iters) {
    out.status = SolveStatus::ok;
    for (int k = 0; k < n; ++k) out.solution.x[sp.free_cells[k]] = x[k];
    double obj = sp.fixed_cost;
    for (int k = 0; k < n; ++k) obj += sp.cost[k] * std::exp(x[k]);
    out.solution.objective = obj;
    out.solution.kkt_residual = kkt_residual(sp, x);
    (void)t;
    out.solution.iterations = iters;
  };

  // strictly feasible start just inside the upper corner
  Eigen::VectorXd x = sp.hi;
  double delta = 1e-6;
  bool interior = false;
  while (delta > 1e-14) {
    Eigen::VectorXd cand = sp.hi.array() - (sp.hi - sp.lo).array().min(delta);
    if (strictly_feasible(sp, cand, 0)) {
      x = cand;
      interior = true;
      break;
    }
    delta /= 1000;
  }
  if (!interior) {
    // feasible only on (or numerically at) the upper corner
    finish(sp.hi, 0, 0);
    return out;
  }

  const int m = 2 * n + static_cast<int>(sp.lin.size()) + static_cast<int>(sp.exp_cons.size());
  auto cost_at = [&](const Eigen::VectorXd& xv) {
    double obj = sp.fixed_cost;
    for (int k = 0; k < n; ++k) obj += sp.cost[k] * std::exp(xv[k]);
    return obj;
  };
  double t = 1.0;
  int iters = 0;
  while (true) {
    // center for the current barrier parameter
    for (int stage_iters = 0;; ++stage_iters) {
      if (stage_iters >= opts.max_newton_iters) {
        finish(x, t, iters);
        out.status = SolveStatus::no_convergence;
        return out;
      }
      BarrierEval e = eval_barrier(sp, x, t);
      Eigen::VectorXd step = -e.hess.ldlt().solve(e.grad);
      double decrement = -e.grad.dot(step);
      if (!std::isfinite(decrement) || decrement < 0) {
        // fall back to damped gradient if the factorization misbehaved
        step = -e.grad;
        decrement = e.grad.squaredNorm();
      }
      // decrement in cost units is decrement / (2t); push to the noise floor
      // and let the line search break once progress stalls
      if (decrement / 2 <= 1e-14 * std::max(1.0, t)) break;
      double alpha = 1.0;
      bool moved = false;
      for (int ls = 0; ls < 60; ++ls) {
        const BarrierEval trial = eval_barrier(sp, x + alpha * step, t);
        // strict decrease so a step below the value's rounding floor stalls out
        if (trial.interior && trial.value < e.value - 0.25 * alpha * decrement) {
          moved = true;
          break;
        }
        alpha /= 2;
      }
      if (!moved) break;  // at numerical precision for this stage
      x += alpha * step;
      ++iters;
    }
    out.solution.central_objectives.push_back(cost_at(x));
    if (m / t <= opts.duality_tol) break;
    t *= 10;
  }
  finish(x, t, iters);
  return out;
}

}  // namespace

bool check_feasibility(const Scenario& sc, const LosGraph& g, const std::set<int>& passive,
                       const std::set<int>& active, double gamma0) {
  const auto plan = DeploymentPlan::uniform(passive, active, sc.max_tiles, sc.max_tiles);
  for (const auto& s : evaluate_plan(sc, g, plan))
    if (!s.reachable() || !meets_target(s.snr_linear, gamma0)) return false;
  return true;
}

FrozenPathSet freeze_paths(const Scenario& sc, const LosGraph& g, const std::set<int>& passive,
                           const std::set<int>& active, int freeze_tiles) {
  const auto plan = DeploymentPlan::uniform(passive, active, freeze_tiles, freeze_tiles);
  const auto direct = direct_solutions(sc);
  const auto all_passive = all_passive_solutions(sc, g, plan);
  const auto hybrid = hybrid_solutions(sc, g, plan);

  const double log_n4 = 4.0 * std::log(static_cast<double>(sc.radio.elements_per_tile_dim));
  const double log_c0 = std::log(sc.radio.c0());
  const double log_ca = std::log(sc.radio.ca());

  FrozenPathSet out;
  for (int j = 0; j < sc.num_cells(); ++j) {
    FrozenCell fc;
    const auto& d = direct[j];
    const auto& p = all_passive[j];
    const auto& h = hybrid[j];
    // Eq.-(42) tie rules: hybrid wins non-strict ties, all-passive needs a
    // strict win, direct otherwise
    if (h.reachable() && !snr_less(h, d) && !snr_less(h, p)) {
      fc.kind = PathKind::hybrid;
      fc.path = h.path;
      fc.airs_vertex = *h.airs_vertex;
      const int L = static_cast<int>(h.path.size()) - 2;
      int airs_pos = 0;
      for (int m = 1; m <= L; ++m)
        if (h.path[m] == fc.airs_vertex) airs_pos = m;
      double lambda1 = log_inv_gain(hop_distance(sc, 0, h.path[1]), sc.radio);
      for (int m = 1; m < airs_pos; ++m) {
        lambda1 += log_inv_gain(hop_distance(sc, h.path[m], h.path[m + 1]), sc.radio) - log_n4;
        fc.up_count[h.path[m]] += 1;
      }
      double lambda2 = 0;
      for (int m = airs_pos; m <= L; ++m) {
        lambda2 += log_inv_gain(hop_distance(sc, h.path[m], h.path[m + 1]), sc.radio) - log_n4;
        fc.dn_count[h.path[m]] += 1;
      }
      fc.log_cbar0 = lambda1 - log_c0;
      fc.log_cbar_a = lambda2 - log_ca;
    } else if (p.reachable() && snr_less(d, p) && snr_less(h, p)) {
      fc.kind = PathKind::all_passive;
      fc.path = p.path;
      const int L = static_cast<int>(p.path.size()) - 2;
      double lambda = log_inv_gain(hop_distance(sc, 0, p.path[1]), sc.radio);
      for (int m = 1; m <= L; ++m) {
        lambda += log_inv_gain(hop_distance(sc, p.path[m], p.path[m + 1]), sc.radio) - log_n4;
        fc.path_count[p.path[m]] += 1;
      }
      fc.log_ctilde0 = lambda - log_c0;
    } else if (d.reachable()) {
      fc.kind = PathKind::direct;
      fc.path = d.path;
      fc.direct_snr_linear = d.snr_linear;
    }
    out.cells.push_back(std::move(fc));
  }
  return out;
}

RelaxOutcome solve_relaxation(const Scenario& sc, const FrozenPathSet& frozen,
                              const std::set<int>& passive, const std::set<int>& active,
                              double gamma0, const std::map<int, double>& fixed,
                              const std::map<int, std::pair<double, double>>& bounds,
                              const SolverOptions& opts) {
  auto sp = build_subproblem(sc, frozen, passive, active, gamma0, fixed, bounds);
  auto out = solve_subproblem(sp, opts);
  if (out.status != SolveStatus::infeasible)
    for (const auto& [c, xv] : fixed) out.solution.x[c] = xv;
  return out;
}

std::map<int, int> reconstruct_tiles(const Scenario& sc, const RelaxedSolution& solution) {
  std::map<int, int> tiles;
  for (const auto& [c, xv] : solution.x) {
    const int t = static_cast<int>(std::ceil(std::exp(xv) - 1e-9));
    tiles[c] = std::clamp(t, 1, sc.max_tiles);
  }
  return tiles;
}

namespace {

Cost plan_cost(const Scenario& sc, const std::set<int>& passive, const std::set<int>& active,
               const std::map<int, int>& tiles) {
  DeploymentPlan plan;
  plan.passive_cells = passive;
  plan.active_cells = active;
  plan.tiles = tiles;
  return total_cost(plan, sc.costs);
}

// greedy removal: drop tiles one cell at a time as long as the full path
// selection still meets the target, sweeping until nothing more comes off
void prune_tiles(const Scenario& sc, const LosGraph& g, const std::set<int>& passive,
                 const std::set<int>& active, double gamma0, std::map<int, int>& tiles) {
  auto feasible = [&](const std::map<int, int>& trial) {
    DeploymentPlan plan;
    plan.passive_cells = passive;
    plan.active_cells = active;
    plan.tiles = trial;
    try {
      for (const auto& s : evaluate_plan(sc, g, plan))
        if (!s.reachable() || !meets_target(s.snr_linear, gamma0)) return false;
    } catch (const NegativeCycleError&) {
      return false;
    }
    return true;
  };
  bool improved = true;
  while (improved) {
    improved = false;
    for (auto& [c, t] : tiles) {
      while (t > 1) {
        --t;
        if (feasible(tiles)) {
          improved = true;
        } else {
          ++t;
          break;
        }
      }
    }
  }
}

}  // namespace

TileResult sequential_refine(const Scenario& sc, const LosGraph& g, const std::set<int>& passive,
                             const std::set<int>& active, double gamma0,
                             const SolverOptions& opts) {
  TileResult res;
  if (passive.empty() && active.empty()) {
    res.feasible = check_feasibility(sc, g, passive, active, gamma0);
    res.cost = plan_cost(sc, passive, active, {});
    return res;
  }
  if (!check_feasibility(sc, g, passive, active, gamma0)) return res;

  auto frozen = freeze_paths(sc, g, passive, active, 1);
  auto relax = solve_relaxation(sc, frozen, passive, active, gamma0, {}, {}, opts);
  if (relax.status == SolveStatus::infeasible) {
    // freezing at T^min may shrink the feasible set; retry with the paths
    // that carried the T^max feasibility gate
    frozen = freeze_paths(sc, g, passive, active, sc.max_tiles);
    relax = solve_relaxation(sc, frozen, passive, active, gamma0, {}, {}, opts);
  }
  if (relax.status == SolveStatus::infeasible) {
    // gate passed, so the all-T^max plan is feasible under full selection
    res.feasible = true;
    std::map<int, int> tiles;
    for (int c : passive) tiles[c] = sc.max_tiles;
    for (int c : active) tiles[c] = sc.max_tiles;
    prune_tiles(sc, g, passive, active, gamma0, tiles);
    res.tiles = std::move(tiles);
    res.cost = plan_cost(sc, passive, active, res.tiles);
    return res;
  }
  if (relax.status == SolveStatus::no_convergence)
    throw std::runtime_error("tile relaxation did not converge (kkt residual " +
                             std::to_string(relax.solution.kkt_residual) + ")");

  auto best_tiles = reconstruct_tiles(sc, relax.solution);
  Cost best_cost = plan_cost(sc, passive, active, best_tiles);
  std::map<int, double> delta;
  for (const auto& [c, xv] : relax.solution.x) delta[c] = best_tiles.at(c) - std::exp(xv);

  std::vector<int> all_cells;
  for (const auto& [c, xv] : relax.solution.x) all_cells.push_back(c);

  std::set<int> refined;
  const double log_tmax = std::log(static_cast<double>(sc.max_tiles));
  while (refined.size() < all_cells.size()) {
    int s = -1;
    for (int c : all_cells)
      if (!refined.count(c) && (s < 0 || delta.at(c) > delta.at(s))) s = c;
    const int ts_start = best_tiles.at(s);
    for (int t = 1; t <= ts_start - 1; ++t) {
      std::map<int, double> fixed;
      for (int c : refined) fixed[c] = std::log(static_cast<double>(best_tiles.at(c)));
      fixed[s] = std::log(static_cast<double>(ts_start - t));
      auto step = solve_relaxation(sc, frozen, passive, active, gamma0, fixed, {}, opts);
      if (step.status == SolveStatus::infeasible) break;
      if (step.status == SolveStatus::no_convergence)
        throw std::runtime_error("tile refinement relaxation did not converge");
      auto tiles = reconstruct_tiles(sc, step.solution);
      const Cost cost = plan_cost(sc, passive, active, tiles);
      if (cost.total < best_cost.total) {
        best_tiles = tiles;
        best_cost = cost;
        for (const auto& [c, xv] : step.solution.x) delta[c] = tiles.at(c) - std::exp(xv);
      } else {
        break;
      }
    }
    refined.insert(s);
  }
  prune_tiles(sc, g, passive, active, gamma0, best_tiles);
  res.feasible = true;
  res.cost = plan_cost(sc, passive, active, best_tiles);
  res.tiles = std::move(best_tiles);
  return res;
}

TileResult brute_force_tiles(const Scenario& sc, const LosGraph& g, const std::set<int>& passive,
                             const std::set<int>& active, double gamma0) {
  TileResult res;
  std::vector<int> cells;
  for (int c : passive) cells.push_back(c);
  for (int c : active) cells.push_back(c);
  std::sort(cells.begin(), cells.end());
  const int n = static_cast<int>(cells.size());
  if (std::pow(static_cast<double>(sc.max_tiles), n) > 1e7)
    throw std::invalid_argument("brute_force_tiles: enumeration budget exceeded");

  std::vector<int> counts(n, 1);
  while (true) {
    DeploymentPlan plan;
    plan.passive_cells = passive;
    plan.active_cells = active;
    for (int k = 0; k < n; ++k) plan.tiles[cells[k]] = counts[k];
    const Cost cost = total_cost(plan, sc.costs);
    if (!res.feasible || cost.total < res.cost.total) {
      bool ok = true;
      for (const auto& s : evaluate_plan(sc, g, plan))
        if (!s.reachable() || !meets_target(s.snr_linear, gamma0)) {
          ok = false;
          break;
        }
      if (ok) {
        res.feasible = true;
        res.tiles = plan.tiles;
        res.cost = cost;
      }
    }
    int k = n - 1;
    while (k >= 0 && counts[k] == sc.max_tiles) counts[k--] = 1;
    if (k < 0) break;
    ++counts[k];
  }
  return res;
}

}  // namespace irsplan
