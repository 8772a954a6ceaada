"""Exact homogeneous polynomials over Q, backed by sympy's Poly over QQ."""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterator

import sympy
from sympy import Poly, QQ
from sympy.parsing.sympy_parser import parse_expr

from src.core.utils.config import get_settings

Exponent = tuple[int, ...]


def coordinates(ambient_dim: int, prefix: str | None = None) -> tuple[sympy.Symbol, ...]:
    """Homogeneous coordinates x0..xd of P^d, named by the configured prefix."""
    return _coordinates(ambient_dim, prefix or get_settings().sections.variable_prefix)


@lru_cache(maxsize=32)
def _coordinates(ambient_dim: int, prefix: str) -> tuple[sympy.Symbol, ...]:
    return tuple(sympy.symbols(f"{prefix}0:{ambient_dim + 1}"))


def parse_polynomial(text: str, ambient_dim: int) -> Poly:
    """Parse a polynomial string in the coordinates of P^d.

    Raises:
        ValueError: If the text is not a polynomial in x0..xd with rational coefficients.
    """
    gens = coordinates(ambient_dim)
    local = {str(g): g for g in gens}
    try:
        expr = parse_expr(text, local_dict=local, evaluate=True)
    except (SyntaxError, TypeError, sympy.SympifyError) as e:
        raise ValueError(f"cannot parse polynomial '{text}': {e}") from e
    stray = expr.free_symbols - set(gens)
    if stray:
        names = ", ".join(sorted(str(s) for s in stray))
        raise ValueError(f"polynomial '{text}' uses unknown variables: {names}")
    try:
        return Poly(expr, *gens, domain=QQ)
    except sympy.PolynomialError as e:
        raise ValueError(f"'{text}' is not a polynomial: {e}") from e


def check_homogeneous(poly: Poly, degree: int) -> None:
    """Raise ValueError unless `poly` is nonzero, homogeneous and of the given degree."""
    if poly.is_zero:
        raise ValueError("defining polynomial is zero")
    if not poly.is_homogeneous:
        raise ValueError(f"polynomial {poly.as_expr()} is not homogeneous")
    if poly.total_degree() != degree:
        raise ValueError(
            f"polynomial {poly.as_expr()} has degree {poly.total_degree()}, expected {degree}"
        )


def one(ambient_dim: int) -> Poly:
    return Poly(1, *coordinates(ambient_dim), domain=QQ)


def monomial(exponent: Exponent) -> Poly:
    gens = coordinates(len(exponent) - 1)
    return Poly(sympy.Mul(*(g**e for g, e in zip(gens, exponent))), *gens, domain=QQ)


def monomial_exponents(nvars: int, degree: int) -> Iterator[Exponent]:
    """All exponent vectors of total `degree` in `nvars` variables, lex-descending."""
    if degree < 0:
        return
    for combo in combinations_with_replacement(range(nvars), degree):
        exponent = [0] * nvars
        for index in combo:
            exponent[index] += 1
        yield tuple(exponent)


def coefficient_map(poly: Poly) -> dict[Exponent, Fraction]:
    """Exponent vector -> exact coefficient, zero terms omitted."""
    return {
        tuple(monom): Fraction(int(coeff.p), int(coeff.q))
        for monom, coeff in poly.terms()
        if coeff != 0
    }
