import pytest

from src.core.scenarios import Scenario, scenario_registry
from src.core.scenarios.base import scenario
from src.core.scenarios.models import ScenarioMetadata
from src.core.scenarios.registry import ScenarioRegistry
from src.core.utils.exceptions import ScenarioError


@pytest.fixture
def scratch_names():
    """Unregister scenarios a test adds to the global registry."""
    names: list[str] = []
    yield names
    for name in names:
        scenario_registry.unregister(name)


def test_registry_is_a_singleton():
    assert ScenarioRegistry() is scenario_registry


def test_builtin_scenarios_are_registered():
    names = scenario_registry.names()
    for name in ("example-3.5", "example-4.5", "griffith", "theorem-6.1", "goto-watanabe"):
        assert name in names
    assert scenario_registry.categories() == ["examples", "theorems"]
    listed = [m.name for m in scenario_registry.list_by_category("theorems")]
    assert listed == ["theorem-6.1", "goto-watanabe"]


def test_builder_parameters_are_in_metadata():
    _, metadata = scenario_registry.get("theorem-6.1")
    assert metadata.parameters["properties"]["d"]["default"] == 3
    assert metadata.category == "theorems"


def test_build_with_parameters():
    built = scenario_registry.build("theorem-6.1", d=4)
    assert built.name == "theorem-6.1-d4"
    dims = [e for e in built.expectations if e.quantity == "dim" and e.target == "A#B"]
    assert dims[0].expected == 4


def test_build_unknown_scenario():
    with pytest.raises(ScenarioError, match="Unknown scenario"):
        scenario_registry.build("no-such-scenario")


def test_parameters_are_validated():
    with pytest.raises(ScenarioError, match="Invalid parameters"):
        scenario_registry.build("griffith", d="five")


def test_builder_range_checks():
    with pytest.raises(ScenarioError, match="d >= 3"):
        scenario_registry.build("theorem-6.1", d=2)
    with pytest.raises(ScenarioError, match="d >= 4"):
        scenario_registry.build("griffith", d=3)


def test_decorator_registers_and_validates(scratch_names):
    @scenario(name="scratch-empty", description="Nothing to check", category="scratch")
    def scratch_empty(size: int = 1) -> Scenario:
        return Scenario(name=f"scratch-{size}")

    scratch_names.append("scratch-empty")
    assert scenario_registry.build("scratch-empty", size=2).name == "scratch-2"
    assert [m.name for m in scenario_registry.list_by_category("scratch")] == ["scratch-empty"]
    with pytest.raises(ScenarioError):
        scratch_empty(size=[1])


def test_duplicate_registration_is_rejected(scratch_names):
    metadata = ScenarioMetadata(name="scratch-dup", description="dup", category="scratch")
    scenario_registry.register(lambda: Scenario(name="dup"), metadata)
    scratch_names.append("scratch-dup")
    with pytest.raises(ValueError, match="already registered"):
        scenario_registry.register(lambda: Scenario(name="dup"), metadata)


def test_unregister_drops_empty_categories():
    metadata = ScenarioMetadata(name="scratch-gone", description="gone", category="scratch-only")
    scenario_registry.register(lambda: Scenario(name="gone"), metadata)
    scenario_registry.unregister("scratch-gone")
    assert "scratch-only" not in scenario_registry.categories()
    assert scenario_registry.get("scratch-gone") is None
