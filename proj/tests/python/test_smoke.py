import json
import os

import pytest

import irsplan

DATA_DIR = os.environ.get("IRSPLAN_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))

FULL_PLAN = json.dumps({"passive": {"2": 9, "6": 9, "9": 9, "11": 9}, "active": {"12": 9}})


@pytest.fixture(scope="module")
def scenario():
    return irsplan.load_scenario_file(os.path.join(DATA_DIR, "paper_style.json"))


def test_load_scenario(scenario):
    assert scenario.rows == 4
    assert scenario.cols == 4
    assert scenario.num_cells == 16
    assert scenario.candidate_cells == [2, 3, 4, 5, 6, 7, 8, 9, 11, 12]
    assert scenario.max_tiles == 9


def test_load_rejects_bad_input():
    with pytest.raises(Exception):
        irsplan.load_scenario("{ not json")
    with pytest.raises(Exception):
        irsplan.load_scenario("{}")


def test_evaluate_full_plan(scenario):
    out = irsplan.evaluate(scenario, FULL_PLAN)
    assert out["cost"]["cell_use"] == 4 * 5 + 12
    assert out["cost"]["total"] == out["cost"]["cell_use"] + out["cost"]["hardware"]
    assert len(out["per_cell"]) == 16
    for s in out["per_cell"]:
        assert s["reachable"]
        assert s["kind"] in ("direct", "all_passive", "hybrid")
        assert s["path"][0] == 0


def test_evaluate_rejects_bad_plan(scenario):
    with pytest.raises(Exception):
        irsplan.evaluate(scenario, json.dumps({"passive": {"1": 3}}))


def test_optimize_tiles(scenario):
    out = irsplan.optimize_tiles(scenario, {2, 6, 9, 11}, {12}, 10.0)
    assert out["feasible"]
    assert set(out["tiles"]) == {2, 6, 9, 11, 12}
    assert all(1 <= t <= 9 for t in out["tiles"].values())

    assert not irsplan.optimize_tiles(scenario, {2}, set(), 10.0)["feasible"]


def test_optimize_round_trip(scenario):
    rep = irsplan.optimize(scenario, 5.0, workers=2)
    assert rep["feasible"]
    assert rep["total_combos"] == 3 ** 10
    assert rep["examined"] + rep["pruned_bound"] == rep["total_combos"]

    plan = json.dumps(rep["plan"])
    back = irsplan.evaluate(scenario, plan)
    assert back["cost"]["total"] == pytest.approx(rep["cost"]["total"])
    target = 10 ** (5.0 / 10)
    for s in back["per_cell"]:
        assert s["snr_linear"] >= target * (1 - 1e-9)


def test_benchmark_dominance(scenario):
    joint = irsplan.optimize(scenario, 3.0, workers=2)
    b1 = irsplan.optimize(scenario, 3.0, benchmark=1, workers=2)
    assert joint["feasible"] and b1["feasible"]
    assert joint["cost"]["total"] <= b1["cost"]["total"] + 1e-9


def test_infeasible_target(scenario):
    assert not irsplan.optimize(scenario, 80.0)["feasible"]
