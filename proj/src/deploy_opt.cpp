#include "irsplan/deploy_opt.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "irsplan/routing.hpp"

namespace irsplan {

namespace {

bool meets_target(double snr_linear, double gamma0) {
  return snr_linear >= gamma0 * (1.0 - 1e-9);
}

struct Combo {
  std::set<int> passive;
  std::set<int> active;
  double lb = 0;
};

bool combo_order(const Combo& a, const Combo& b) {
  if (a.lb != b.lb) return a.lb < b.lb;
  if (a.active.size() != b.active.size()) return a.active.size() < b.active.size();
  if (a.passive.size() != b.passive.size()) return a.passive.size() < b.passive.size();
  if (a.active != b.active) return a.active < b.active;
  return a.passive < b.passive;
}

std::vector<Combo> enumerate_combos(const Scenario& sc, const SearchConfig& cfg) {
  const auto& cand = sc.candidate_cells;
  const int n = static_cast<int>(cand.size());
  const bool allow_active =
      cfg.benchmark == Benchmark::none || cfg.benchmark == Benchmark::joint_equal;
  const bool equal_tiles =
      cfg.benchmark == Benchmark::all_pirs_equal || cfg.benchmark == Benchmark::joint_equal;
  const double lb_tiles_p = equal_tiles ? cfg.equal_tiles_passive : 1;
  const double lb_tiles_a = equal_tiles ? cfg.equal_tiles_active : 1;
  const double lb_p = sc.costs.cell_use_passive + sc.costs.per_tile_passive * lb_tiles_p;
  const double lb_a = sc.costs.cell_use_active + sc.costs.per_tile_active * lb_tiles_a;

  std::vector<Combo> combos;
  std::vector<int> state(n, 0);  // 0 unused, 1 passive, 2 active
  while (true) {
    Combo c;
    for (int k = 0; k < n; ++k) {
      if (state[k] == 1) c.passive.insert(cand[k]);
      if (state[k] == 2) c.active.insert(cand[k]);
    }
    c.lb = lb_p * static_cast<double>(c.passive.size()) +
           lb_a * static_cast<double>(c.active.size());
    combos.push_back(std::move(c));
    int k = n - 1;
    const int top = allow_active ? 2 : 1;
    while (k >= 0 && state[k] == top) state[k--] = 0;
    if (k < 0) break;
    ++state[k];
  }
  std::sort(combos.begin(), combos.end(), combo_order);
  return combos;
}

struct ComboResult {
  bool feasible = false;
  DeploymentPlan plan;
  Cost cost;
};

ComboResult evaluate_combo(const Scenario& sc, const LosGraph& g, const SearchConfig& cfg,
                           const Combo& c, bool brute_tiles) {
  ComboResult r;
  if (cfg.benchmark == Benchmark::all_pirs_equal || cfg.benchmark == Benchmark::joint_equal) {
    const auto plan = DeploymentPlan::uniform(c.passive, c.active, cfg.equal_tiles_passive,
                                              cfg.equal_tiles_active);
    for (const auto& s : evaluate_plan(sc, g, plan))
      if (!s.reachable() || !meets_target(s.snr_linear, cfg.gamma0_linear)) return r;
    r.feasible = true;
    r.plan = plan;
    r.cost = total_cost(plan, sc.costs);
    return r;
  }
  // tiny tile spaces are solved exactly; the refinement heuristic takes over
  // once enumeration would dominate the cost of a combo
  const double n_surfaces = static_cast<double>(c.passive.size() + c.active.size());
  const bool exact = brute_tiles ||
                     std::pow(static_cast<double>(sc.max_tiles), n_surfaces) <= 100.0;
  const TileResult t = exact
                           ? brute_force_tiles(sc, g, c.passive, c.active, cfg.gamma0_linear)
                           : sequential_refine(sc, g, c.passive, c.active, cfg.gamma0_linear,
                                               cfg.solver);
  if (!t.feasible) return r;
  r.feasible = true;
  r.plan.passive_cells = c.passive;
  r.plan.active_cells = c.active;
  r.plan.tiles = t.tiles;
  r.cost = t.cost;
  return r;
}

SolveReport run_search(const Scenario& sc, const LosGraph& g, const SearchConfig& cfg,
                       bool prune, bool brute_tiles) {
  const auto t0 = std::chrono::steady_clock::now();
  if ((cfg.benchmark == Benchmark::all_pirs_equal || cfg.benchmark == Benchmark::joint_equal) &&
      (cfg.equal_tiles_passive > sc.max_tiles || cfg.equal_tiles_active > sc.max_tiles))
    throw std::invalid_argument("benchmark tile count exceeds max_tiles");

  const auto combos = enumerate_combos(sc, cfg);
  SolveReport rep;
  rep.total_combos = static_cast<long>(combos.size());

  std::mutex mu;
  bool have_best = false;
  long best_index = -1;
  ComboResult best;
  std::atomic<long> next{0};
  std::atomic<long> examined{0};
  std::atomic<long> pruned_infeasible{0};
  std::atomic<long> pruned_bound{0};
  std::atomic<bool> truncated{false};

  auto worker = [&] {
    while (true) {
      const long i = next.fetch_add(1);
      if (i >= rep.total_combos) return;
      if (cfg.max_examined > 0 && examined.load() >= cfg.max_examined) {
        truncated.store(true);
        return;
      }
      const Combo& c = combos[i];
      if (prune) {
        std::lock_guard<std::mutex> lk(mu);
        if (have_best && c.lb >= best.cost.total * (1.0 - 1e-12)) {
          pruned_bound.fetch_add(1);
          continue;
        }
      }
      examined.fetch_add(1);
      const ComboResult r = evaluate_combo(sc, g, cfg, c, brute_tiles);
      if (!r.feasible) {
        if (prune) pruned_infeasible.fetch_add(1);
        continue;
      }
      std::lock_guard<std::mutex> lk(mu);
      if (!have_best || r.cost.total < best.cost.total - 1e-12 ||
          (std::abs(r.cost.total - best.cost.total) <= 1e-12 && i < best_index)) {
        have_best = true;
        best = r;
        best_index = i;
      }
    }
  };

  const int workers = std::max(1, cfg.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < workers; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  rep.examined = examined.load();
  rep.pruned_infeasible = pruned_infeasible.load();
  rep.pruned_bound = pruned_bound.load();
  rep.truncated = truncated.load();
  if (have_best) {
    rep.feasible = true;
    rep.plan = best.plan;
    rep.cost = best.cost;
    rep.per_cell = evaluate_plan(sc, g, rep.plan);
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

}  // namespace

SolveReport optimize_deployment(const Scenario& sc, const LosGraph& g, const SearchConfig& cfg) {
  return run_search(sc, g, cfg, true, false);
}

SolveReport full_enumeration(const Scenario& sc, const LosGraph& g, const SearchConfig& cfg) {
  const bool allow_active =
      cfg.benchmark == Benchmark::none || cfg.benchmark == Benchmark::joint_equal;
  const double combos =
      std::pow(allow_active ? 3.0 : 2.0, static_cast<double>(sc.candidate_cells.size()));
  if (combos > 2000)
    throw std::invalid_argument("full_enumeration: too many candidate cells");
  const bool equal_tiles =
      cfg.benchmark == Benchmark::all_pirs_equal || cfg.benchmark == Benchmark::joint_equal;
  return run_search(sc, g, cfg, false, !equal_tiles);
}

}  // namespace irsplan
