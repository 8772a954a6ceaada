"""
Explicit bases of [R]_n = H^0(P^d, O([nD])) and the multiplication of R.

Every section of degree n is written over the canonical denominator
prod_j f_j^{floor(n c_j)}, where D = sum_j c_j V(f_j); the numerator is then a
homogeneous polynomial of degree deg [nD]. All linear algebra happens on
numerator coefficients in the monomial basis.
"""

from functools import lru_cache
from itertools import product
from math import comb, floor
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field
from sympy import Poly

from src.core.divisors.calculus import degree, floor_divisor, scale
from src.core.sectionring.models import SectionRing
from src.core.sections.linalg import EchelonBasis
from src.core.sections.polynomials import (
    coefficient_map,
    monomial,
    monomial_exponents,
    one,
    parse_polynomial,
)
from src.core.utils.config import get_settings
from src.core.utils.exceptions import BasisTooLargeError, GradingError, MissingPolynomialError
from src.core.utils.logging import get_logger_with_context

log = get_logger_with_context(module="sections")


class Section(BaseModel):
    """
    A homogeneous element numerator / prod_j f_j^{a_j} of [R]_n.

    Attributes:
        ring: The section ring the element belongs to.
        degree: Graded degree n.
        numerator: Homogeneous polynomial of degree sum_j a_j deg f_j.
        denominator_exponents: a_j = floor(n c_j) by component name; negative for
            negative coefficients.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ring: SectionRing
    degree: int = Field(..., ge=0, description="Graded degree n")
    numerator: Poly
    denominator_exponents: dict[str, int] = Field(default_factory=dict)


def denominator_exponents(R: SectionRing, n: int) -> dict[str, int]:
    return {component.name: floor(n * coeff) for component, coeff in R.divisor.terms}


def numerator_degree(R: SectionRing, n: int) -> int:
    return int(degree(floor_divisor(scale(n, R.divisor))))


@lru_cache(maxsize=64)
def defining_polynomials(R: SectionRing) -> dict[str, Poly]:
    """Parsed f_j by component name.

    Raises:
        MissingPolynomialError: If a component has no defining polynomial.
    """
    polys = {}
    for component in R.divisor.components:
        if component.defining_polynomial is None:
            raise MissingPolynomialError(component.name)
        polys[component.name] = parse_polynomial(component.defining_polynomial, R.ambient_dim)
    return polys


def section_basis(R: SectionRing, n: int, max_basis: Optional[int] = None) -> list[Section]:
    """Monomials of degree deg [nD] over the canonical denominator of degree n.

    Raises:
        MissingPolynomialError: If a component has no defining polynomial.
        BasisTooLargeError: If the basis would exceed the configured guardrail.
        GradingError: If n is negative.
    """
    if n < 0:
        raise GradingError(f"Section rings have no degree {n} part", details={"degree": n})
    defining_polynomials(R)
    limit = max_basis or get_settings().sections.max_basis
    top = numerator_degree(R, n)
    if top < 0:
        return []
    size = comb(top + R.ambient_dim, R.ambient_dim)
    if size > limit:
        raise BasisTooLargeError(size, limit, n)
    exponents = denominator_exponents(R, n)
    basis = [
        Section(ring=R, degree=n, numerator=monomial(e), denominator_exponents=exponents)
        for e in monomial_exponents(R.ambient_dim + 1, top)
    ]
    log.debug(f"Basis of [{R.name}]_{n}: {len(basis)} sections of numerator degree {top}")
    return basis


def multiply(s: Section, t: Section) -> Section:
    """The product s*t rewritten over the canonical denominator of degree s.degree + t.degree.

    Raises:
        GradingError: If the sections come from different rings.
    """
    if s.ring != t.ring:
        raise GradingError("Cannot multiply sections of different rings")
    R = s.ring
    n = s.degree + t.degree
    exponents = denominator_exponents(R, n)
    numerator = s.numerator * t.numerator
    for name, f in defining_polynomials(R).items():
        deficit = exponents[name] - s.denominator_exponents[name] - t.denominator_exponents[name]
        if deficit:
            numerator = numerator * f**deficit
    return Section(ring=R, degree=n, numerator=numerator, denominator_exponents=exponents)


def unit_section(R: SectionRing) -> Section:
    return Section(
        ring=R,
        degree=0,
        numerator=one(R.ambient_dim),
        denominator_exponents=denominator_exponents(R, 0),
    )


def _products_echelon(n: int, bases: dict[int, list[Section]], target: int) -> EchelonBasis:
    """Echelon basis of the span of B_i * B_{n-i} for 1 <= i <= n/2."""
    echelon = EchelonBasis()
    for i in range(1, n // 2 + 1):
        for s, t in product(bases[i], bases[n - i]):
            if echelon.rank >= target:
                return echelon
            echelon.add(coefficient_map(multiply(s, t).numerator))
    return echelon


def minimal_generator_counts(
    R: SectionRing, N: int, max_basis: Optional[int] = None
) -> dict[int, int]:
    """Number of minimal generators of R in each degree 1..N (zeros included).

    The count in degree n is dim [R]_n minus the rank of all products of
    lower-degree elements.
    """
    bases: dict[int, list[Section]] = {}
    counts: dict[int, int] = {}
    for n in range(1, N + 1):
        bases[n] = section_basis(R, n, max_basis)
        dim = len(bases[n])
        counts[n] = dim - _products_echelon(n, bases, dim).rank
    log.info(f"Generator counts of {R.name} through degree {N}: {counts}")
    return counts


def generated_in_bounded_degree(
    R: SectionRing, N: int, verify_to: int, max_basis: Optional[int] = None
) -> dict[str, Any]:
    """Generator degrees up to N, and whether they generate every [R]_n for N < n <= verify_to.

    A positive answer is stable within the verification window only; it is never
    a statement about all degrees.
    """
    if verify_to < N:
        raise GradingError(
            "verify_to must not be below N", details={"N": N, "verify_to": verify_to}
        )
    counts = minimal_generator_counts(R, verify_to, max_basis)
    failures = [n for n in range(N + 1, verify_to + 1) if counts[n]]
    if failures:
        log.warning(f"{R.name} needs generators beyond degree {N}: {failures}")
    return {
        "ring": R.name,
        "generator_degrees": [n for n in range(1, N + 1) if counts[n]],
        "counts": {n: counts[n] for n in range(1, N + 1)},
        "verified_through": verify_to,
        "stable_within_window": not failures,
        "new_generators_beyond": failures,
    }


def section_to_json(s: Section) -> dict[str, Any]:
    """JSON form of a section, e.g. for basis dumps."""
    expr = s.numerator.as_expr()
    polynomials = {c.name: c.defining_polynomial for c in s.ring.divisor.components}
    factors = [
        f"({polynomials[name]})^{e}" if e != 1 else f"({polynomials[name]})"
        for name, e in s.denominator_exponents.items()
        if e
    ]
    return {
        "degree": s.degree,
        "numerator": str(expr),
        "denominator_exponents": dict(s.denominator_exponents),
        "expression": f"{expr} / {' * '.join(factors)}" if factors else str(expr),
    }

