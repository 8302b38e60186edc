from ._irsplan import (
    Scenario,
    evaluate,
    load_scenario,
    load_scenario_file,
    optimize,
    optimize_tiles,
    plan_to_json,
)

__all__ = [
    "Scenario",
    "evaluate",
    "load_scenario",
    "load_scenario_file",
    "optimize",
    "optimize_tiles",
    "plan_to_json",
]
