"""
Exact calculus on Q-divisors of P^d.

All operations are pure and return normalized QDivisors: terms merged by
component name, zero coefficients dropped, terms sorted by name.
"""

from fractions import Fraction
from math import floor
from typing import Iterable, Optional, Union

from pydantic import ValidationError

from src.core.divisors.models import (
    CANONICAL_HYPERPLANE,
    Component,
    ComponentKind,
    QDivisor,
)
from src.core.utils.exceptions import AmbientMismatchError, DivisorError

RatLike = Union[Fraction, int, str]


def rat(value: RatLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise DivisorError(f"Invalid rational coefficient {value!r}") from e


def component(
    name: str,
    degree: int = 1,
    polynomial: Optional[str] = None,
    kind: ComponentKind = ComponentKind.NAMED_HYPERSURFACE,
) -> Component:
    """Build a user component, turning validation failures into DivisorError."""
    if name.startswith("@"):
        raise DivisorError("Component names starting with '@' are reserved", component=name)
    try:
        return Component(name=name, degree=degree, kind=kind, defining_polynomial=polynomial)
    except ValidationError as e:
        raise DivisorError(
            f"Invalid component '{name}'", component=name, details={"errors": e.errors()}
        ) from e


def hypersurface(name: str, polynomial: str, ambient_dim: int) -> Component:
    """A NamedHypersurface whose degree is read off its homogeneous polynomial."""
    from src.core.sections.polynomials import parse_polynomial

    try:
        poly = parse_polynomial(polynomial, ambient_dim)
    except ValueError as e:
        raise DivisorError(str(e), component=name) from e
    if poly.is_zero or not poly.is_homogeneous:
        raise DivisorError(f"'{polynomial}' is not a nonzero homogeneous form", component=name)
    return component(name, poly.total_degree(), polynomial)


def _check_component(item: Component, ambient_dim: int) -> None:
    if item.degree < 1:
        raise DivisorError(f"Nonpositive degree {item.degree}", component=item.name)
    if item.defining_polynomial is None:
        return
    from src.core.sections.polynomials import check_homogeneous, parse_polynomial

    try:
        check_homogeneous(parse_polynomial(item.defining_polynomial, ambient_dim), item.degree)
    except ValueError as e:
        raise DivisorError(str(e), component=item.name) from e


def make_divisor(ambient_dim: int, terms: Iterable[tuple[Component, RatLike]]) -> QDivisor:
    """Build a normalized QDivisor on P^d.

    Raises:
        DivisorError: On duplicate component names, nonpositive degrees, bad polynomials
            or a nonpositive ambient dimension.
    """
    if ambient_dim < 1:
        raise DivisorError(f"Ambient dimension must be positive, got {ambient_dim}")
    seen: dict[str, tuple[Component, Fraction]] = {}
    for item, coeff in terms:
        if item.name in seen:
            raise DivisorError(f"Duplicate component name '{item.name}'", component=item.name)
        _check_component(item, ambient_dim)
        seen[item.name] = (item, rat(coeff))
    normalized = tuple(
        (item, coeff) for name, (item, coeff) in sorted(seen.items()) if coeff != 0
    )
    return QDivisor(ambient_dim=ambient_dim, terms=normalized)


def zero_divisor(ambient_dim: int) -> QDivisor:
    return make_divisor(ambient_dim, [])


def _reconcile(first: Component, second: Component, ambient_dim: int) -> Component:
    """The component two same-named terms stand for; a degree-only entry defers to a form."""
    if first.degree != second.degree:
        raise DivisorError("Components share a name but not a degree", component=first.name)
    if first.defining_polynomial is None or second.defining_polynomial is None:
        return first if second.defining_polynomial is None else second
    if first.defining_polynomial == second.defining_polynomial:
        return first
    from src.core.sections.polynomials import parse_polynomial

    f = parse_polynomial(first.defining_polynomial, ambient_dim)
    g = parse_polynomial(second.defining_polynomial, ambient_dim)
    # Proportional forms cut out the same hypersurface.
    if f * g.LC() != g * f.LC():
        raise DivisorError(
            "Components share a name but not a defining polynomial",
            component=first.name,
            details={
                "first": first.defining_polynomial,
                "second": second.defining_polynomial,
            },
        )
    return first


def _merge(ambient_dim: int, weighted: Iterable[tuple[Fraction, QDivisor]]) -> QDivisor:
    acc: dict[str, tuple[Component, Fraction]] = {}
    for scalar, divisor in weighted:
        if divisor.ambient_dim != ambient_dim:
            raise AmbientMismatchError(ambient_dim, divisor.ambient_dim)
        if scalar == 0:
            continue
        for item, coeff in divisor.terms:
            previous = acc.get(item.name)
            if previous is None:
                acc[item.name] = (item, scalar * coeff)
                continue
            kept = _reconcile(previous[0], item, ambient_dim)
            acc[item.name] = (kept, previous[1] + scalar * coeff)
    normalized = tuple((item, c) for _, (item, c) in sorted(acc.items()) if c != 0)
    return QDivisor(ambient_dim=ambient_dim, terms=normalized)


def combine(a: RatLike, D: QDivisor, b: RatLike, E: QDivisor) -> QDivisor:
    """aD + bE with components merged by name.

    Raises:
        AmbientMismatchError: If D and E live on different projective spaces.
    """
    if D.ambient_dim != E.ambient_dim:
        raise AmbientMismatchError(D.ambient_dim, E.ambient_dim)
    return _merge(D.ambient_dim, [(rat(a), D), (rat(b), E)])


def scale(a: RatLike, D: QDivisor) -> QDivisor:
    return _merge(D.ambient_dim, [(rat(a), D)])


def floor_divisor(D: QDivisor) -> QDivisor:
    """[D] = sum [n_i] V_i."""
    return QDivisor(
        ambient_dim=D.ambient_dim,
        terms=tuple((item, Fraction(floor(c))) for item, c in D.terms if floor(c) != 0),
    )


def frac_part(D: QDivisor) -> QDivisor:
    """D' = sum ((q_i - 1)/q_i) V_i for reduced coefficients p_i/q_i."""
    return QDivisor(
        ambient_dim=D.ambient_dim,
        terms=tuple(
            (item, Fraction(c.denominator - 1, c.denominator))
            for item, c in D.terms
            if c.denominator != 1
        ),
    )


def degree(D: QDivisor) -> Fraction:
    return sum((c * item.degree for item, c in D.terms), Fraction(0))


def canonical_divisor(d: int) -> QDivisor:
    """K of P^d: -(d+1) times the reserved generic hyperplane."""
    hyperplane = Component(
        name=CANONICAL_HYPERPLANE, degree=1, kind=ComponentKind.GENERIC_HYPERPLANE
    )
    return make_divisor(d, [(hyperplane, -(d + 1))])


def is_effective(D: QDivisor) -> bool:
    return all(c >= 0 for _, c in D.terms)


def is_integral(D: QDivisor) -> bool:
    return all(c.denominator == 1 for _, c in D.terms)


def is_ample(D: QDivisor) -> bool:
    # Pic(P^d) = Z: ample iff positive degree.
    return degree(D) > 0
