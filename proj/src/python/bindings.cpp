#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "irsplan/deploy_opt.hpp"
#include "irsplan/plan_io.hpp"
#include "irsplan/routing.hpp"
#include "irsplan/scenario.hpp"
#include "irsplan/tile_opt.hpp"
#include "irsplan/units.hpp"

namespace py = pybind11;
using namespace irsplan;

namespace {

DeploymentPlan plan_from_json(const std::string& text, const Scenario& sc) {
  return load_plan(text, sc);
}

py::dict cost_dict(const Cost& c) {
  py::dict d;
  d["total"] = c.total;
  d["cell_use"] = c.cell_use;
  d["hardware"] = c.hardware;
  return d;
}

py::dict plan_dict(const DeploymentPlan& plan) {
  py::dict passive, active;
  for (int c : plan.passive_cells) passive[py::int_(c)] = plan.tiles_at(c);
  for (int c : plan.active_cells) active[py::int_(c)] = plan.tiles_at(c);
  py::dict d;
  d["passive"] = passive;
  d["active"] = active;
  return d;
}

py::dict path_dict(const PathSolution& s) {
  py::dict d;
  d["cell"] = s.cell;
  d["kind"] = to_string(s.kind);
  d["reachable"] = s.reachable();
  d["path"] = s.path;
  if (s.airs_vertex) d["airs_vertex"] = *s.airs_vertex;
  d["snr_linear"] = s.snr_linear;
  d["snr_db"] = s.snr_db;
  return d;
}

py::dict report_dict(const SolveReport& rep) {
  py::dict d;
  d["feasible"] = rep.feasible;
  if (rep.feasible) {
    d["plan"] = plan_dict(rep.plan);
    d["cost"] = cost_dict(rep.cost);
    py::list per_cell;
    for (const auto& s : rep.per_cell) per_cell.append(path_dict(s));
    d["per_cell"] = per_cell;
  }
  d["total_combos"] = rep.total_combos;
  d["examined"] = rep.examined;
  d["pruned_infeasible"] = rep.pruned_infeasible;
  d["pruned_bound"] = rep.pruned_bound;
  d["truncated"] = rep.truncated;
  d["wall_ms"] = rep.wall_ms;
  return d;
}

Benchmark benchmark_of(int b) {
  switch (b) {
    case 0: return Benchmark::none;
    case 1: return Benchmark::all_pirs_optimized;
    case 2: return Benchmark::all_pirs_equal;
    case 3: return Benchmark::joint_equal;
    default: throw std::invalid_argument("benchmark must be 0..3");
  }
}

}  // namespace

PYBIND11_MODULE(_irsplan, m) {
  m.doc() = "deployment planner for joint passive/active IRS placement";

  py::class_<Scenario>(m, "Scenario")
      .def_property_readonly("rows", [](const Scenario& sc) { return sc.rows; })
      .def_property_readonly("cols", [](const Scenario& sc) { return sc.cols; })
      .def_property_readonly("num_cells", [](const Scenario& sc) { return sc.num_cells(); })
      .def_property_readonly("candidate_cells",
                             [](const Scenario& sc) { return sc.candidate_cells; })
      .def_property_readonly("max_tiles", [](const Scenario& sc) { return sc.max_tiles; });

  m.def("load_scenario", &load_scenario, py::arg("text"),
        "parse and validate a scenario from a JSON string");
  m.def("load_scenario_file", &load_scenario_file, py::arg("path"),
        "parse and validate a scenario from a JSON file");

  m.def(
      "evaluate",
      [](const Scenario& sc, const std::string& plan_json) {
        const DeploymentPlan plan = plan_from_json(plan_json, sc);
        const LosGraph g = build_los_graph(sc);
        py::dict d;
        py::list per_cell;
        for (const auto& s : evaluate_plan(sc, g, plan)) per_cell.append(path_dict(s));
        d["per_cell"] = per_cell;
        d["cost"] = cost_dict(total_cost(plan, sc.costs));
        return d;
      },
      py::arg("scenario"), py::arg("plan_json"),
      "per-cell worst-case SNR and cost of a deployment plan");

  m.def(
      "optimize_tiles",
      [](const Scenario& sc, const std::set<int>& passive, const std::set<int>& active,
         double gamma0_db) {
        const LosGraph g = build_los_graph(sc);
        const TileResult r = sequential_refine(sc, g, passive, active, db_to_linear(gamma0_db));
        py::dict d;
        d["feasible"] = r.feasible;
        if (r.feasible) {
          d["tiles"] = r.tiles;
          d["cost"] = cost_dict(r.cost);
        }
        return d;
      },
      py::arg("scenario"), py::arg("passive"), py::arg("active"), py::arg("gamma0_db"),
      "tile counts for fixed surface locations via sequential refinement");

  m.def(
      "optimize",
      [](const Scenario& sc, double gamma0_db, int benchmark, int workers,
         int equal_tiles_passive, int equal_tiles_active) {
        const LosGraph g = build_los_graph(sc);
        SearchConfig cfg;
        cfg.gamma0_linear = db_to_linear(gamma0_db);
        cfg.benchmark = benchmark_of(benchmark);
        cfg.workers = workers;
        cfg.equal_tiles_passive = equal_tiles_passive;
        cfg.equal_tiles_active = equal_tiles_active;
        return report_dict(optimize_deployment(sc, g, cfg));
      },
      py::arg("scenario"), py::arg("gamma0_db"), py::arg("benchmark") = 0,
      py::arg("workers") = 1, py::arg("equal_tiles_passive") = 4,
      py::arg("equal_tiles_active") = 1,
      "cost-minimal deployment meeting the SNR target (benchmark 0 = joint search)");

  m.def(
      "plan_to_json",
      [](const Scenario& sc, const std::string& plan_json) {
        return plan_to_json(plan_from_json(plan_json, sc));
      },
      py::arg("scenario"), py::arg("plan_json"), "normalize a plan through parse and re-emit");
}
