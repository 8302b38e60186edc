#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irsplan/channel_oracle.hpp"
#include "irsplan/deploy_opt.hpp"
#include "irsplan/plan_io.hpp"
#include "irsplan/routing.hpp"
#include "irsplan/tile_opt.hpp"
#include "irsplan/units.hpp"

namespace {

using namespace irsplan;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

constexpr const char* kCsvHeader =
    "gamma0_db,scheme,feasible,total_cost,cell_use_cost,hardware_cost,num_pirs,num_airs,"
    "sum_passive_tiles,sum_active_tiles,wall_ms";

std::set<int> parse_cells(const std::string& csv) {
  std::set<int> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    const int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad cell list entry '" + tok + "'");
    out.insert(v);
  }
  return out;
}

std::vector<int> parse_path(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::string path_str(const std::vector<int>& path, int num_cells) {
  std::string s;
  for (size_t k = 0; k < path.size(); ++k) {
    if (k) s += "->";
    const int v = path[k];
    s += v >= num_cells ? "u" + std::to_string(v - num_cells) : std::to_string(v);
  }
  return s;
}

void print_cost(const Cost& c) {
  std::printf("total_cost %.6g (cell_use %.6g + hardware %.6g)\n", c.total, c.cell_use,
              c.hardware);
}

void print_per_cell(const Scenario& sc, const std::vector<PathSolution>& sols) {
  std::printf("%-5s %-12s %-10s %s\n", "cell", "kind", "snr_db", "path");
  for (const auto& s : sols) {
    if (s.reachable())
      std::printf("%-5d %-12s %-10.4f %s\n", s.cell, to_string(s.kind), s.snr_db,
                  path_str(s.path, sc.num_cells()).c_str());
    else
      std::printf("%-5d %-12s %-10s -\n", s.cell, "unreachable", "-inf");
  }
}

struct SchemeRow {
  std::string name;
  Benchmark benchmark;
};

std::vector<SchemeRow> parse_schemes(const std::string& csv) {
  std::vector<SchemeRow> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "joint")
      out.push_back({tok, Benchmark::none});
    else if (tok == "bench1")
      out.push_back({tok, Benchmark::all_pirs_optimized});
    else if (tok == "bench2")
      out.push_back({tok, Benchmark::all_pirs_equal});
    else if (tok == "bench3")
      out.push_back({tok, Benchmark::joint_equal});
    else
      throw std::invalid_argument("unknown scheme '" + tok + "'");
  }
  if (out.empty()) throw std::invalid_argument("empty scheme list");
  return out;
}

void write_csv_row(std::ostream& os, double gamma0_db, const std::string& scheme,
                   const SolveReport& rep) {
  int sum_p = 0, sum_a = 0;
  for (int c : rep.plan.passive_cells) sum_p += rep.plan.tiles_at(c);
  for (int c : rep.plan.active_cells) sum_a += rep.plan.tiles_at(c);
  os << gamma0_db << ',' << scheme << ',' << (rep.feasible ? 1 : 0) << ',' << rep.cost.total
     << ',' << rep.cost.cell_use << ',' << rep.cost.hardware << ','
     << rep.plan.passive_cells.size() << ',' << rep.plan.active_cells.size() << ',' << sum_p
     << ',' << sum_a << ',' << rep.wall_ms << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"Worst-case SNR deployment planner for passive/active reflecting surfaces"};
  app.require_subcommand(1);

  std::string scenario_path, plan_path, out_path, schemes_csv = "joint";
  std::string passive_csv, active_csv, path_csv, var = "gamma0_db";
  double gamma0_db = 0, from = 0, to = 0, step = 1;
  int benchmark = 0, workers = 1, cell = -1, airs = -1, max_newton = 200;
  double tolerance = 1e-9;
  bool have_gamma0 = false;

  auto add_solver_opts = [&](CLI::App* c) {
    c->add_option("--tolerance", tolerance, "barrier duality gap tolerance");
    c->add_option("--max-newton-iters", max_newton, "Newton iteration cap");
  };

  auto* validate = app.add_subcommand("validate", "check a scenario file");
  validate->add_option("file", scenario_path)->required();

  auto* evaluate = app.add_subcommand("evaluate", "per-cell SNR for a fixed plan");
  evaluate->add_option("file", scenario_path)->required();
  evaluate->add_option("--plan", plan_path)->required();
  evaluate->add_option("--gamma0-db", gamma0_db)->each([&](const std::string&) {
    have_gamma0 = true;
  });

  auto* opt_tiles = app.add_subcommand("optimize-tiles", "tile counts for fixed locations");
  opt_tiles->add_option("file", scenario_path)->required();
  opt_tiles->add_option("--passive", passive_csv);
  opt_tiles->add_option("--active", active_csv);
  opt_tiles->add_option("--gamma0-db", gamma0_db)->required();
  add_solver_opts(opt_tiles);

  auto* optimize = app.add_subcommand("optimize", "joint location and tile search");
  optimize->add_option("file", scenario_path)->required();
  optimize->add_option("--gamma0-db", gamma0_db)->required();
  optimize->add_option("--benchmark", benchmark)->check(CLI::Range(1, 3));
  optimize->add_option("--workers", workers)->check(CLI::PositiveNumber);
  optimize->add_option("--plan-out", out_path);
  add_solver_opts(optimize);

  auto* sweep = app.add_subcommand("sweep", "CSV sweep over gamma0 or active tile cost");
  sweep->add_option("file", scenario_path)->required();
  sweep->add_option("--var", var)->check(CLI::IsMember({"gamma0_db", "active_tile_cost"}));
  sweep->add_option("--from", from)->required();
  sweep->add_option("--to", to)->required();
  sweep->add_option("--step", step)->required()->check(CLI::PositiveNumber);
  sweep->add_option("--schemes", schemes_csv);
  sweep->add_option("--gamma0-db", gamma0_db);
  sweep->add_option("--out", out_path);
  sweep->add_option("--workers", workers)->check(CLI::PositiveNumber);
  add_solver_opts(sweep);

  auto* oracle = app.add_subcommand("oracle", "brute-force verification oracles");
  oracle->require_subcommand(1);
  auto* osnr = oracle->add_subcommand("snr", "explicit channel SNR over one path");
  osnr->add_option("file", scenario_path)->required();
  osnr->add_option("--plan", plan_path)->required();
  osnr->add_option("--path", path_csv)->required();
  osnr->add_option("--airs", airs);
  auto* opath = oracle->add_subcommand("path", "exhaustive best path for a cell");
  opath->add_option("file", scenario_path)->required();
  opath->add_option("--plan", plan_path)->required();
  opath->add_option("--cell", cell)->required();
  auto* otiles = oracle->add_subcommand("tiles", "exhaustive tile enumeration");
  otiles->add_option("file", scenario_path)->required();
  otiles->add_option("--passive", passive_csv);
  otiles->add_option("--active", active_csv);
  otiles->add_option("--gamma0-db", gamma0_db)->required();
  auto* odeploy = oracle->add_subcommand("deploy", "exhaustive deployment enumeration");
  odeploy->add_option("file", scenario_path)->required();
  odeploy->add_option("--gamma0-db", gamma0_db)->required();
  odeploy->add_option("--benchmark", benchmark)->check(CLI::Range(1, 3));

  CLI11_PARSE(app, argc, argv);

  const Scenario sc = load_scenario_file(scenario_path);
  const LosGraph g = build_los_graph(sc);
  SolverOptions solver{tolerance, max_newton};

  auto benchmark_of = [&](int b) {
    switch (b) {
      case 1: return Benchmark::all_pirs_optimized;
      case 2: return Benchmark::all_pirs_equal;
      case 3: return Benchmark::joint_equal;
      default: return Benchmark::none;
    }
  };

  if (validate->parsed()) {
    std::printf("scenario ok: %dx%d grid, %d cells, %zu candidates, %d vertices, %zu edges\n",
                sc.rows, sc.cols, sc.num_cells(), sc.candidate_cells.size(), g.num_vertices(),
                g.edges.size());
    return kExitOk;
  }

  if (evaluate->parsed()) {
    const DeploymentPlan plan = load_plan_file(plan_path, sc);
    const auto sols = evaluate_plan(sc, g, plan);
    print_per_cell(sc, sols);
    print_cost(total_cost(plan, sc.costs));
    if (have_gamma0) {
      const double gamma0 = db_to_linear(gamma0_db);
      bool ok = true;
      for (const auto& s : sols)
        if (!s.reachable() || s.snr_linear < gamma0 * (1.0 - 1e-9)) {
          std::printf("shortfall: cell %d %s target %.4f dB\n", s.cell,
                      s.reachable() ? ("at " + std::to_string(s.snr_db) + " dB vs").c_str()
                                    : "unreachable vs",
                      gamma0_db);
          ok = false;
        }
      if (!ok) return kExitInfeasible;
    }
    return kExitOk;
  }

  if (opt_tiles->parsed()) {
    const auto passive = parse_cells(passive_csv);
    const auto active = parse_cells(active_csv);
    const auto res = sequential_refine(sc, g, passive, active, db_to_linear(gamma0_db), solver);
    if (!res.feasible) {
      std::printf("infeasible at T0max for P={%s} A={%s}\n", passive_csv.c_str(),
                  active_csv.c_str());
      return kExitInfeasible;
    }
    for (const auto& [c, t] : res.tiles)
      std::printf("cell %d: %d tiles (%s)\n", c, t, active.count(c) ? "active" : "passive");
    print_cost(res.cost);
    return kExitOk;
  }

  if (optimize->parsed()) {
    SearchConfig cfg;
    cfg.gamma0_linear = db_to_linear(gamma0_db);
    cfg.benchmark = benchmark_of(benchmark);
    cfg.workers = workers;
    cfg.solver = solver;
    const SolveReport rep = optimize_deployment(sc, g, cfg);
    std::printf("combos %ld examined %ld pruned_bound %ld pruned_infeasible %ld wall_ms %.1f\n",
                rep.total_combos, rep.examined, rep.pruned_bound, rep.pruned_infeasible,
                rep.wall_ms);
    if (!rep.feasible) {
      std::printf("infeasible: no deployment meets %.4f dB\n", gamma0_db);
      return kExitInfeasible;
    }
    std::printf("plan: %s\n", plan_to_json(rep.plan).c_str());
    print_cost(rep.cost);
    print_per_cell(sc, rep.per_cell);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw ScenarioError("cannot write " + out_path);
      out << plan_to_json(rep.plan) << '\n';
    }
    return kExitOk;
  }

  if (sweep->parsed()) {
    const auto schemes = parse_schemes(schemes_csv);
    if (from > to) throw std::invalid_argument("sweep: --from must be <= --to");
    std::ofstream file_out;
    if (!out_path.empty()) {
      file_out.open(out_path);
      if (!file_out) throw ScenarioError("cannot write " + out_path);
    }
    std::ostream& os = out_path.empty() ? std::cout : file_out;
    os << kCsvHeader << '\n';
    bool any_feasible = false;
    for (double v = from; v <= to + 1e-9; v += step) {
      for (const auto& s : schemes) {
        Scenario sc_run = sc;
        double g0_db = gamma0_db;
        if (var == "gamma0_db")
          g0_db = v;
        else
          sc_run.costs.per_tile_active = v;
        const LosGraph g_run = build_los_graph(sc_run);
        SearchConfig cfg;
        cfg.gamma0_linear = db_to_linear(g0_db);
        cfg.benchmark = s.benchmark;
        cfg.workers = workers;
        cfg.solver = solver;
        const SolveReport rep = optimize_deployment(sc_run, g_run, cfg);
        any_feasible = any_feasible || rep.feasible;
        write_csv_row(os, g0_db, s.name, rep);
      }
    }
    return any_feasible ? kExitOk : kExitInfeasible;
  }

  if (osnr->parsed()) {
    const DeploymentPlan plan = load_plan_file(plan_path, sc);
    const auto path = parse_path(path_csv);
    const std::optional<int> airs_v = airs >= 0 ? std::optional<int>(airs) : std::nullopt;
    const double snr = explicit_path_snr(sc, plan, path, airs_v);
    std::printf("snr %.10g (%.6f dB)\n", snr, linear_to_db(snr));
    return kExitOk;
  }

  if (opath->parsed()) {
    const DeploymentPlan plan = load_plan_file(plan_path, sc);
    if (cell < 0 || cell >= sc.num_cells()) throw std::invalid_argument("bad --cell");
    const auto s = brute_force_best_path(sc, g, plan, cell);
    if (!s.reachable()) {
      std::printf("cell %d unreachable\n", cell);
      return kExitInfeasible;
    }
    std::printf("cell %d %s %.6f dB via %s\n", cell, to_string(s.kind), s.snr_db,
                path_str(s.path, sc.num_cells()).c_str());
    return kExitOk;
  }

  if (otiles->parsed()) {
    const auto res = brute_force_tiles(sc, g, parse_cells(passive_csv), parse_cells(active_csv),
                                       db_to_linear(gamma0_db));
    if (!res.feasible) {
      std::printf("infeasible\n");
      return kExitInfeasible;
    }
    for (const auto& [c, t] : res.tiles) std::printf("cell %d: %d tiles\n", c, t);
    print_cost(res.cost);
    return kExitOk;
  }

  if (odeploy->parsed()) {
    SearchConfig cfg;
    cfg.gamma0_linear = db_to_linear(gamma0_db);
    cfg.benchmark = benchmark_of(benchmark);
    const SolveReport rep = full_enumeration(sc, g, cfg);
    if (!rep.feasible) {
      std::printf("infeasible\n");
      return kExitInfeasible;
    }
    std::printf("plan: %s\n", plan_to_json(rep.plan).c_str());
    print_cost(rep.cost);
    return kExitOk;
  }

  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const NegativeCycleError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const ScenarioError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  }
}
