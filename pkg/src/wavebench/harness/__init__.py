"""Scenario loading, Monte-Carlo execution, and report emission."""

from wavebench.harness.scenario import (
    Scenario,
    ScenarioError,
    load_scenario,
    parse_scenario,
    serialize_scenario,
)
from wavebench.harness.runner import build_rig, run_comparison, run_scenario
from wavebench.harness.reports import emit_reports

__all__ = [
    "Scenario",
    "ScenarioError",
    "load_scenario",
    "parse_scenario",
    "serialize_scenario",
    "build_rig",
    "run_comparison",
    "run_scenario",
    "emit_reports",
]
