"""
Command-line interface for graded invariants of section rings.

Reports go to stdout (JSON with --json, rich tables otherwise); logs and
errors go to stderr. Exit status: 0 on success, 1 on a failed expectation,
an undecided question or an engine error, 2 on usage errors.
"""

import functools
import json
from pathlib import Path
from typing import Any, Callable, Optional

import click
from rich.console import Console
from rich.table import Table

from src.core.cover.covers import canonical_cover, cover_report, cyclic_cover, export_graded_object
from src.core.divisors.calculus import (
    canonical_divisor,
    combine,
    degree,
    floor_divisor,
    frac_part,
    is_ample,
    is_effective,
    is_integral,
)
from src.core.divisors.serialization import divisor_from_json, divisor_to_json
from src.core.graded.objects import GradedObject
from src.core.scenarios import (
    ScenarioReport,
    load_scenario_file,
    report_to_json,
    run_scenario,
    scenario_registry,
)
from src.core.sectionring.invariants import Window, hilbert, ring_report
from src.core.sectionring.models import SectionRing, section_ring
from src.core.sections.basis import (
    generated_in_bounded_degree,
    minimal_generator_counts,
    section_basis,
    section_to_json,
)
from src.core.segre.kunneth import polynomial_ring_object, to_graded_object
from src.core.segre.reports import segre_report
from src.core.utils.config import get_settings
from src.core.utils.exceptions import GradedError
from src.core.utils.logging import setup_logging

console = Console()
err_console = Console(stderr=True)

VERSION = "0.1.0"


class WindowType(click.ParamType):
    """A degree window written LO..HI."""

    name = "LO..HI"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Any) -> Window:
        if isinstance(value, tuple):
            return value
        try:
            lo, hi = (int(part) for part in str(value).split(".."))
        except ValueError:
            self.fail(f"{value!r} is not of the form LO..HI", param, ctx)
        if lo > hi:
            self.fail(f"empty window {value!r}", param, ctx)
        return lo, hi


def _common_options(func: Callable[..., Any]) -> Callable[..., Any]:
    func = click.option("--json", "as_json", is_flag=True, help="Emit JSON")(func)
    func = click.option(
        "--bound", type=click.IntRange(min=1), default=None, help="Torsion search bound"
    )(func)
    func = click.option(
        "--window", type=WindowType(), default=None, help="Degree window, e.g. -20..20"
    )(func)
    return func


def _handle_errors(func: Callable[..., Any]) -> Callable[..., Any]:
    """Turn engine errors into a red stderr line and exit status 1."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except GradedError as e:
            err_console.print(f"[red]Error:[/red] {e}")
            click.get_current_context().exit(1)

    return wrapper


def _read_json(path: Path) -> Any:
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise click.BadParameter(f"cannot read JSON from {path}: {e}") from e


def _load_ring(path: Path) -> SectionRing:
    """A divisor JSON file, or {"divisor": ..., "label": ...}."""
    data = _read_json(path)
    if isinstance(data, dict) and "divisor" in data:
        return section_ring(divisor_from_json(data["divisor"]), label=data.get("label"))
    return section_ring(divisor_from_json(data), label=path.stem)


def _load_graded(path: Path, cover: bool, bound: Optional[int]) -> GradedObject:
    data = _read_json(path)
    if isinstance(data, dict) and "polynomial_ring" in data:
        if cover:
            raise click.BadParameter("polynomial rings are their own canonical covers")
        return polynomial_ring_object(int(data["polynomial_ring"]))
    R = _load_ring(path)
    if not cover:
        return to_graded_object(R)
    C = canonical_cover(R, bound)
    return export_graded_object(C, C.shift.denominator)


def _emit(data: dict[str, Any], as_json: bool, title: str) -> None:
    if as_json:
        click.echo(json.dumps(data, sort_keys=True, indent=2, default=str))
        return
    table = Table(title=title, show_header=True, header_style="bold cyan")
    table.add_column("Field", style="cyan")
    table.add_column("Value", style="white")
    for key, value in data.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True, default=str)
        table.add_row(str(key), str(value))
    console.print(table)


def _emit_report(report: ScenarioReport, as_json: bool) -> None:
    if as_json:
        click.echo(json.dumps(report_to_json(report), sort_keys=True, indent=2))
        return
    table = Table(
        title=f"{report.scenario}: {report.description}",
        show_header=True,
        header_style="bold cyan",
    )
    for column in ("Quantity", "Target", "Args", "Expected", "Actual", "Status", "Source"):
        table.add_column(column)
    colors = {"passed": "green", "failed": "red", "undecided": "yellow", "error": "red"}
    for r in report.results:
        e = r.expectation
        status = r.status.value
        table.add_row(
            e.quantity,
            e.target,
            json.dumps(e.args, sort_keys=True, default=str) if e.args else "",
            f"{e.relation.value} {e.expected}",
            "" if r.actual is None else str(r.actual),
            f"[{colors[status]}]{status}[/{colors[status]}]",
            e.provenance.value,
        )
    console.print(table)
    console.print(f"[dim]window {list(report.window)}; counts {report.counts()}[/dim]")


@click.group()
@click.version_option(version=VERSION, prog_name="graded")
@click.option(
    "--log-level",
    type=click.Choice(["TRACE", "DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Log level for stderr",
)
def cli(log_level: Optional[str]) -> None:
    """Graded invariants of section rings R(P^d, D), their covers and Segre products."""
    settings = get_settings()
    setup_logging(log_level=(log_level or settings.log_level).upper(), log_file=settings.log_file)


@cli.command()
@click.option("--input", "input_path", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--json", "as_json", is_flag=True, help="Emit JSON")
@_handle_errors
def divisor(input_path: Path, as_json: bool) -> None:
    """Normalize a divisor and show its floor, fractional part and canonical class."""
    D = divisor_from_json(_read_json(input_path))
    K = combine(1, canonical_divisor(D.ambient_dim), 1, frac_part(D))
    data = {
        "divisor": divisor_to_json(D),
        "display": str(D),
        "floor": str(floor_divisor(D)),
        "fractional_part": str(frac_part(D)),
        "degree": str(degree(D)),
        "effective": is_effective(D),
        "integral": is_integral(D),
        "ample": is_ample(D),
        "canonical_class": str(K),
        "canonical_class_degree": str(degree(K)),
    }
    _emit(data, as_json, "Divisor")


@cli.command()
@click.option("--input", "input_path", type=click.Path(exists=True, path_type=Path), required=True)
@_common_options
@_handle_errors
def ring(input_path: Path, window: Optional[Window], bound: Optional[int], as_json: bool) -> None:
    """Hilbert function, local cohomology, a-invariant and certificates of R(P^d, D)."""
    R = _load_ring(input_path)
    _emit(ring_report(R, window, bound), as_json, R.name)


@cli.command()
@click.option("--input", "input_path", type=click.Path(exists=True, path_type=Path), required=True)
@click.option(
    "--class",
    "class_path",
    type=click.Path(exists=True, path_type=Path),
    default=None,
    help="Divisor JSON of a torsion class; the canonical class when omitted",
)
@_common_options
@_handle_errors
def cover(
    input_path: Path,
    class_path: Optional[Path],
    window: Optional[Window],
    bound: Optional[int],
    as_json: bool,
) -> None:
    """The cyclic (by default canonical) cover of R; tables use scaled degrees Q."""
    R = _load_ring(input_path)
    if class_path is None:
        C = canonical_cover(R, bound)
    else:
        C = cyclic_cover(R, divisor_from_json(_read_json(class_path)), bound)
    _emit(cover_report(C, window), as_json, C.name)


@cli.command()
@click.option("--left", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--right", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--cover-left", is_flag=True, help="Use the canonical cover of the left ring")
@click.option("--cover-right", is_flag=True, help="Use the canonical cover of the right ring")
@_common_options
@_handle_errors
def segre(
    left: Path,
    right: Path,
    cover_left: bool,
    cover_right: bool,
    window: Optional[Window],
    bound: Optional[int],
    as_json: bool,
) -> None:
    """Dimension, depth, a-invariant and Kunneth breakdown of a Segre product."""
    M = _load_graded(left, cover_left, bound)
    N = _load_graded(right, cover_right, bound)
    _emit(segre_report(M, N, window), as_json, f"{M.label} # {N.label}")


@cli.command()
@click.option("--input", "input_path", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--degree", "max_degree", type=click.IntRange(min=1), required=True)
@click.option("--basis", is_flag=True, help="Include the explicit bases")
@click.option("--max-basis", type=click.IntRange(min=1), default=None, help="Basis size limit")
@click.option(
    "--verify-to",
    type=click.IntRange(min=1),
    default=None,
    help="Check that no new generators appear up to this degree",
)
@click.option("--json", "as_json", is_flag=True, help="Emit JSON")
@_handle_errors
def sections(
    input_path: Path,
    max_degree: int,
    basis: bool,
    max_basis: Optional[int],
    verify_to: Optional[int],
    as_json: bool,
) -> None:
    """Minimal generator counts of R from explicit section bases."""
    R = _load_ring(input_path)
    data: dict[str, Any] = {
        "ring": R.name,
        "hilbert": {n: hilbert(R, n) for n in range(max_degree + 1)},
        "generator_counts": minimal_generator_counts(R, max_degree, max_basis),
    }
    if verify_to is not None:
        data["generation"] = generated_in_bounded_degree(R, max_degree, verify_to, max_basis)
    if basis:
        data["bases"] = {
            n: [section_to_json(s) for s in section_basis(R, n, max_basis)]
            for n in range(max_degree + 1)
        }
    _emit(data, as_json, f"Sections of {R.name}")


def _run_and_emit(reports: list[ScenarioReport], as_json: bool) -> None:
    if as_json and len(reports) == 1:
        _emit_report(reports[0], as_json)
    elif as_json:
        payload = [report_to_json(r) for r in reports]
        click.echo(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for report in reports:
            _emit_report(report, as_json)
    if not all(r.passed for r in reports):
        err_console.print("[red]Some expectations were not met[/red]")
        click.get_current_context().exit(1)


@cli.command()
@click.option("--case", default=None, help="Built-in scenario; all of them when omitted")
@click.option("--d", "d", type=int, default=None)
@click.option("--r", "r", type=int, default=None)
@click.option("--n", "n", type=int, default=None)
@click.option("--m", "m", type=int, default=None)
@_common_options
@_handle_errors
def paper(
    case: Optional[str],
    d: Optional[int],
    r: Optional[int],
    n: Optional[int],
    m: Optional[int],
    window: Optional[Window],
    bound: Optional[int],
    as_json: bool,
) -> None:
    """Run the built-in scenarios: worked examples and the depth-two theorem."""
    given = {k: v for k, v in {"d": d, "r": r, "n": n, "m": m}.items() if v is not None}
    names = [case] if case else scenario_registry.names()
    reports = []
    for name in names:
        entry = scenario_registry.get(name)
        accepted = entry[1].parameters.get("properties", {}) if entry else {}
        params = {k: v for k, v in given.items() if k in accepted}
        built = scenario_registry.build(name, **params)
        reports.append(run_scenario(built, window, bound))
    _run_and_emit(reports, as_json)


@cli.command()
@click.option("--file", "file_path", type=click.Path(exists=True, path_type=Path), required=True)
@_common_options
@_handle_errors
def scenario(
    file_path: Path, window: Optional[Window], bound: Optional[int], as_json: bool
) -> None:
    """Run a declarative scenario file (YAML or JSON)."""
    _run_and_emit([run_scenario(load_scenario_file(file_path), window, bound)], as_json)


@cli.group()
def scenarios() -> None:
    """Built-in scenario registry."""


@scenarios.command("list")
@click.option("--category", "-c", default=None, help="Filter by category")
def list_scenarios(category: Optional[str]) -> None:
    """List registered scenarios grouped by category."""
    table = Table(title="Built-in Scenarios", show_header=True, header_style="bold cyan")
    table.add_column("Scenario", style="cyan", no_wrap=True)
    table.add_column("Parameters", style="green")
    table.add_column("Description", style="white")
    for name in scenario_registry.categories():
        if category and name != category:
            continue
        table.add_row(f"[bold magenta]{name.title()}[/bold magenta]", "", "")
        for metadata in scenario_registry.list_by_category(name):
            params = ", ".join(
                f"{p}={spec.get('default')}"
                for p, spec in metadata.parameters.get("properties", {}).items()
            )
            table.add_row(f"  {metadata.name}", params, metadata.description)
    console.print(table)


def main(argv: Optional[list[str]] = None) -> None:
    """Console entry point."""
    cli.main(args=argv, prog_name="graded")


if __name__ == "__main__":
    main()
