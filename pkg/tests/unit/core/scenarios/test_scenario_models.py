import pytest
from pydantic import ValidationError

from src.core.scenarios.models import (
    Construction,
    Expectation,
    ExpectationResult,
    ExpectationStatus,
    RingSpec,
    Scenario,
    ScenarioReport,
)

DIVISOR = {"ambient_dim": 1, "terms": [{"name": "p", "polynomial": "x0", "coeff": "1/2"}]}


def test_unknown_quantity_is_rejected():
    with pytest.raises(ValidationError, match="unknown quantity"):
        Expectation(quantity="volume", target="R", expected=1)


def test_ring_spec_needs_exactly_one_source():
    assert RingSpec(polynomial_ring=2).divisor is None
    with pytest.raises(ValidationError, match="exactly one"):
        RingSpec()
    with pytest.raises(ValidationError, match="exactly one"):
        RingSpec(divisor=DIVISOR, polynomial_ring=1)


def test_construction_references():
    construction = Construction.model_validate(
        {
            "rings": {"R": {"divisor": DIVISOR}, "P": {"polynomial_ring": 1}},
            "covers": {"Rt": {"ring": "R"}},
            "segre": {"RP": {"left": "Rt", "right": "P"}},
        }
    )
    assert construction.kinds() == {"R": "ring", "P": "ring", "Rt": "cover", "RP": "segre"}


def test_cover_class_alias():
    construction = Construction.model_validate(
        {"rings": {"R": {"divisor": DIVISOR}}, "covers": {"Rt": {"ring": "R", "class": DIVISOR}}}
    )
    assert construction.covers["Rt"].class_divisor == DIVISOR


@pytest.mark.parametrize(
    "data, message",
    [
        ({"covers": {"C": {"ring": "missing"}}}, "needs a section ring"),
        ({"rings": {"P": {"polynomial_ring": 1}}, "covers": {"C": {"ring": "P"}}}, "section ring"),
        ({"segre": {"S": {"left": "A", "right": "B"}}}, "references unknown"),
        (
            {"rings": {"P": {"polynomial_ring": 1}}, "compat": {"X": {"left": "P", "right": "P"}}},
            "compat",
        ),
        ({"rings": {"X": {"divisor": DIVISOR}}, "covers": {"X": {"ring": "X"}}}, "unique"),
    ],
)
def test_construction_rejects_bad_references(data, message):
    with pytest.raises(ValidationError, match=message):
        Construction.model_validate(data)


def test_expectation_kinds_are_checked():
    construction = {"rings": {"R": {"divisor": DIVISOR}}}
    with pytest.raises(ValidationError, match="does not apply"):
        Scenario.model_validate(
            {
                "name": "bad",
                "construction": construction,
                "expectations": [{"quantity": "cover.order", "target": "R", "expected": 2}],
            }
        )
    with pytest.raises(ValidationError, match="unknown object"):
        Scenario.model_validate(
            {
                "name": "bad",
                "construction": construction,
                "expectations": [{"quantity": "hilbert", "target": "S", "expected": 1}],
            }
        )


def test_window_order_is_checked():
    with pytest.raises(ValidationError, match="window"):
        Scenario(name="bad", window=(3, 1))


def test_report_counts():
    expectation = Expectation(quantity="dim", target="R", expected=2)
    report = ScenarioReport(
        scenario="s",
        window=(0, 1),
        results=[
            ExpectationResult(expectation=expectation, status=ExpectationStatus.PASSED),
            ExpectationResult(expectation=expectation, status=ExpectationStatus.UNDECIDED),
        ],
    )
    assert not report.passed
    assert report.counts() == {"passed": 1, "failed": 0, "undecided": 1, "error": 0}
