"""Declarative scenarios: models, the built-in registry and the runner."""

from src.core.scenarios import builtin  # noqa: F401  registers the built-in scenarios
from src.core.scenarios.models import (
    Construction,
    Expectation,
    ExpectationStatus,
    Provenance,
    Relation,
    Scenario,
    ScenarioMetadata,
    ScenarioReport,
)
from src.core.scenarios.registry import ScenarioRegistry, scenario_registry
from src.core.scenarios.runner import (
    QUANTITIES,
    load_scenario,
    load_scenario_file,
    report_to_json,
    run_scenario,
)

__all__ = [
    "QUANTITIES",
    "Construction",
    "Expectation",
    "ExpectationStatus",
    "Provenance",
    "Relation",
    "Scenario",
    "ScenarioMetadata",
    "ScenarioRegistry",
    "ScenarioReport",
    "load_scenario",
    "load_scenario_file",
    "report_to_json",
    "run_scenario",
    "scenario_registry",
]
