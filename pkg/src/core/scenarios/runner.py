"""
Scenario runner: build the named objects of a construction and check expectations.
"""

import json
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Optional

import yaml
from pydantic import ValidationError

from src.core.cover.covers import (
    canonical_cover,
    cover_a_invariant,
    cover_hilbert,
    cover_rational_certificate,
    cyclic_cover,
    export_graded_object,
    quasi_gorenstein_check,
)
from src.core.cover.models import CoverDescriptor
from src.core.divisors.calculus import degree
from src.core.divisors.serialization import divisor_from_json
from src.core.graded.invariants import a_inv, depth, is_cm
from src.core.graded.objects import GradedObject
from src.core.scenarios.models import (
    Expectation,
    ExpectationResult,
    ExpectationStatus,
    Relation,
    Scenario,
    ScenarioReport,
)
from src.core.sectionring.invariants import (
    Window,
    a_invariant,
    canonical_class,
    canonical_order,
    f_regular_degree_test,
    hilbert,
    local_coh_dim,
    rational_sing_certificate,
)
from src.core.sectionring.models import SectionRing, section_ring
from src.core.sections.basis import minimal_generator_counts
from src.core.segre.kunneth import polynomial_ring_object, segre, to_graded_object
from src.core.segre.reports import (
    ascent_failure_report,
    goto_watanabe_report,
    segre_cover_compat,
)
from src.core.utils.config import get_settings
from src.core.utils.exceptions import GradedError, GradingError, ScenarioError, UndecidedError
from src.core.utils.logging import get_logger_with_context, log_execution, set_scenario

log = get_logger_with_context(module="runner")


class Workspace:
    """Lazily built objects of one scenario's construction."""

    def __init__(self, scenario: Scenario, window: Window, bound: Optional[int]) -> None:
        self.scenario = scenario
        self.construction = scenario.construction
        self.window = window
        self.bound = bound
        self._cache: dict[str, Any] = {}

    def _cached(self, key: str, build: Callable[[], Any]) -> Any:
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def ring(self, name: str) -> SectionRing:
        spec = self.construction.rings[name]
        if spec.divisor is None:
            raise ScenarioError(f"'{name}' is a polynomial ring, not a section ring")
        return self._cached(
            f"ring:{name}",
            lambda: section_ring(divisor_from_json(spec.divisor), label=spec.label or name),
        )

    def cover(self, name: str) -> CoverDescriptor:
        spec = self.construction.covers[name]

        def build() -> CoverDescriptor:
            base = self.ring(spec.ring)
            if spec.class_divisor is None:
                return canonical_cover(base, self.bound)
            return cyclic_cover(base, divisor_from_json(spec.class_divisor), self.bound)

        return self._cached(f"cover:{name}", build)

    def graded(self, name: str) -> GradedObject:
        kind = self.construction.kinds()[name]

        def build() -> GradedObject:
            if kind == "ring":
                spec = self.construction.rings[name]
                if spec.polynomial_ring is not None:
                    return polynomial_ring_object(spec.polynomial_ring)
                return to_graded_object(self.ring(name))
            if kind == "cover":
                C = self.cover(name)
                return export_graded_object(C, C.shift.denominator)
            if kind == "segre":
                pair = self.construction.segre[name]
                return segre(self.graded(pair.left), self.graded(pair.right))
            raise ScenarioError(f"'{name}' is not a graded object", scenario=self.scenario.name)

        return self._cached(f"graded:{name}", build)

    def compat(self, name: str) -> dict[str, Any]:
        pair = self.construction.compat[name]
        return self._cached(
            f"compat:{name}",
            lambda: segre_cover_compat(
                self.ring(pair.left), self.ring(pair.right), self.bound, self.window
            ),
        )

    def ascent(self, name: str, r: int) -> dict[str, Any]:
        return self._cached(
            f"ascent:{name}:{r}", lambda: ascent_failure_report(self.ring(name), self.bound, r)
        )


def _arg(args: dict[str, Any], key: str) -> Any:
    if key not in args:
        raise ScenarioError(f"Missing argument '{key}'", details={"args": args})
    return args[key]


def _int_arg(args: dict[str, Any], key: str) -> int:
    value = _arg(args, key)
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ScenarioError(f"Argument '{key}' must be an integer, got {value!r}")
    try:
        return int(value)
    except ValueError as e:
        raise ScenarioError(f"Argument '{key}' must be an integer, got {value!r}") from e


def _lc_nonzero_at(ws: Workspace, target: str, args: dict[str, Any]) -> bool:
    """Whether [H^k_m]_q != 0 at the true degree q."""
    obj = ws.graded(target)
    try:
        q = Fraction(str(_arg(args, "degree"))) * obj.scale
    except (ValueError, ZeroDivisionError) as e:
        raise ScenarioError(
            f"Argument 'degree' is not a rational number: {args['degree']!r}"
        ) from e
    if q.denominator != 1:
        raise GradingError(
            f"Degree {args['degree']} is not on the grid of {obj.label}",
            details={"scale": obj.scale},
        )
    return obj.local_cohomology(_int_arg(args, "k"))(int(q)) != 0


def _rational_verdict(ws: Workspace, target: str, args: dict[str, Any]) -> str:
    if ws.construction.kinds()[target] == "cover":
        return cover_rational_certificate(ws.cover(target))["verdict"]
    return rational_sing_certificate(ws.ring(target)).verdict.value


def _goto_watanabe(ws: Workspace, target: str, args: dict[str, Any]) -> bool:
    pair = ws.construction.segre[target]
    return goto_watanabe_report(ws.graded(pair.left), ws.graded(pair.right))["agreement"]


Quantity = Callable[[Workspace, str, dict[str, Any]], Any]


def _ascent_failure(field: str) -> Quantity:
    """One field of the ascent-failure report; `r` picks K[Y0..Yr], default 1."""

    def quantity(ws: Workspace, target: str, args: dict[str, Any]) -> Any:
        r = _int_arg(args, "r") if "r" in args else 1
        return ws.ascent(target, r).get(field)

    return quantity


QUANTITIES: dict[str, Quantity] = {
    "hilbert": lambda ws, t, a: hilbert(ws.ring(t), _int_arg(a, "n")),
    "local_coh_dim": lambda ws, t, a: local_coh_dim(
        ws.ring(t), _int_arg(a, "i"), _int_arg(a, "n")
    ),
    "a_invariant": lambda ws, t, a: a_invariant(ws.ring(t)).value,
    "canonical_order.order": lambda ws, t, a: canonical_order(ws.ring(t), ws.bound).order,
    "canonical_order.twist": lambda ws, t, a: canonical_order(ws.ring(t), ws.bound).twist,
    "f_regular_test": lambda ws, t, a: f_regular_degree_test(ws.ring(t)),
    "rational_verdict": _rational_verdict,
    "degree_canonical_class": lambda ws, t, a: degree(canonical_class(ws.ring(t))),
    "generator_counts": lambda ws, t, a: minimal_generator_counts(ws.ring(t), _int_arg(a, "N")),
    "cover.order": lambda ws, t, a: ws.cover(t).order,
    "cover.twist": lambda ws, t, a: ws.cover(t).twist,
    "cover.a_invariant": lambda ws, t, a: cover_a_invariant(ws.cover(t)),
    "cover.quasi_gorenstein": lambda ws, t, a: quasi_gorenstein_check(ws.cover(t), ws.window),
    "cover.hilbert": lambda ws, t, a: cover_hilbert(ws.cover(t), _int_arg(a, "Q")),
    "dim": lambda ws, t, a: ws.graded(t).krull_dim,
    "depth": lambda ws, t, a: depth(ws.graded(t)),
    "is_cm": lambda ws, t, a: is_cm(ws.graded(t)),
    "a_inv": lambda ws, t, a: a_inv(ws.graded(t)),
    "lc_nonzero_at": _lc_nonzero_at,
    "goto_watanabe.agreement": _goto_watanabe,
    "compat.order": lambda ws, t, a: ws.compat(t)["order"],
    "compat.identified": lambda ws, t, a: ws.compat(t)["identified"],
    "ascent_failure.applicable": _ascent_failure("applicable"),
    "ascent_failure.cover_not_cm": _ascent_failure("cover_not_cm"),
    "ascent_failure.cover_a_nonnegative": _ascent_failure("cover_a_nonnegative"),
    "ascent_failure.segre_cm": _ascent_failure("segre_with_polynomial_ring_cm"),
}


def normalize(value: Any) -> Any:
    """Exact comparable form: numbers as Fractions, dict keys as strings."""
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            return value
    if isinstance(value, dict):
        return {str(k): normalize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [normalize(v) for v in value]
    return value


def to_jsonable(value: Any) -> Any:
    """JSON form with exact fractions as "p/q" strings."""
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


def _same(left: Any, right: Any) -> bool:
    """Equality of normalized values that never mistakes a bool for the number 0 or 1."""
    if isinstance(left, bool) or isinstance(right, bool):
        return type(left) is type(right) and left == right
    if isinstance(left, dict) and isinstance(right, dict):
        return left.keys() == right.keys() and all(_same(left[k], right[k]) for k in left)
    if isinstance(left, list) and isinstance(right, list):
        return len(left) == len(right) and all(map(_same, left, right))
    return bool(left == right)


def compare(actual: Any, relation: Relation, expected: Any) -> bool:
    left, right = normalize(actual), normalize(expected)
    if relation == Relation.EQ:
        return _same(left, right)
    if relation == Relation.NE:
        return not _same(left, right)
    if not isinstance(left, Fraction) or not isinstance(right, Fraction):
        raise ScenarioError(
            f"Relation '{relation.value}' needs numbers, got {actual!r} and {expected!r}"
        )
    return {
        Relation.LT: left < right,
        Relation.LE: left <= right,
        Relation.GT: left > right,
        Relation.GE: left >= right,
    }[relation]


def evaluate(ws: Workspace, expectation: Expectation) -> ExpectationResult:
    """Compute one quantity and compare it; engine errors become non-passing results."""
    quantity = QUANTITIES[expectation.quantity]
    try:
        actual = quantity(ws, expectation.target, expectation.args)
        ok = compare(actual, expectation.relation, expectation.expected)
    except UndecidedError as e:
        log.warning(f"{expectation.quantity}({expectation.target}) is undecided: {e.message}")
        return ExpectationResult(
            expectation=expectation, status=ExpectationStatus.UNDECIDED, message=e.message
        )
    except GradedError as e:
        log.error(f"{expectation.quantity}({expectation.target}) failed: {e}")
        return ExpectationResult(
            expectation=expectation, status=ExpectationStatus.ERROR, message=str(e)
        )
    except (ValueError, TypeError, KeyError) as e:
        message = f"Malformed input: {type(e).__name__}: {e}"
        log.error(f"{expectation.quantity}({expectation.target}) failed: {message}")
        return ExpectationResult(
            expectation=expectation, status=ExpectationStatus.ERROR, message=message
        )
    if not ok:
        log.error(
            f"{expectation.quantity}({expectation.target}) = {to_jsonable(actual)}, "
            f"expected {expectation.relation.value} {expectation.expected}"
        )
    return ExpectationResult(
        expectation=expectation,
        status=ExpectationStatus.PASSED if ok else ExpectationStatus.FAILED,
        actual=to_jsonable(actual),
    )


@log_execution("run_scenario")
def run_scenario(
    scenario: Scenario, window: Optional[Window] = None, bound: Optional[int] = None
) -> ScenarioReport:
    """Build the construction and check every expectation.

    Explicit arguments override the scenario's own window and bound, which
    override the settings.
    """
    window = window or scenario.window or get_settings().scan.window
    bound = bound or scenario.bound
    set_scenario(scenario.name)
    try:
        log.info(f"Running scenario '{scenario.name}' on window {list(window)}")
        ws = Workspace(scenario, window, bound)
        results = [evaluate(ws, e) for e in scenario.expectations]
        report = ScenarioReport(
            scenario=scenario.name,
            description=scenario.description,
            window=window,
            results=results,
        )
        log.info(f"Scenario '{scenario.name}': {report.counts()}")
        return report
    finally:
        set_scenario(None)


def report_to_json(report: ScenarioReport) -> dict[str, Any]:
    return {
        "scenario": report.scenario,
        "description": report.description,
        "window": list(report.window),
        "passed": report.passed,
        "counts": report.counts(),
        "results": [
            {
                "quantity": r.expectation.quantity,
                "target": r.expectation.target,
                "args": to_jsonable(r.expectation.args),
                "relation": r.expectation.relation.value,
                "expected": to_jsonable(r.expectation.expected),
                "actual": r.actual,
                "status": r.status.value,
                "provenance": r.expectation.provenance.value,
                "message": r.message,
            }
            for r in report.results
        ],
    }


def load_scenario(data: dict[str, Any]) -> Scenario:
    """Validate a scenario mapping.

    Raises:
        ScenarioError: If the mapping does not describe a well-formed scenario.
    """
    try:
        return Scenario.model_validate(data)
    except ValidationError as e:
        raise ScenarioError(
            "Malformed scenario",
            scenario=data.get("name") if isinstance(data, dict) else None,
            details={"errors": [err["msg"] for err in e.errors()]},
        ) from e


def load_scenario_file(path: str | Path) -> Scenario:
    """Read a scenario from a YAML or JSON file.

    Raises:
        ScenarioError: If the file cannot be read or parsed.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ScenarioError(f"Cannot read scenario file {path}: {e}") from e
    try:
        if path.suffix.lower() in {".yaml", ".yml"}:
            data = yaml.safe_load(text)
        else:
            data = json.loads(text)
    except (yaml.YAMLError, json.JSONDecodeError) as e:
        raise ScenarioError(f"Cannot parse scenario file {path}: {e}") from e
    if not isinstance(data, dict):
        raise ScenarioError(f"Scenario file {path} must contain a mapping")
    return load_scenario(data)
