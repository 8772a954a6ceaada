"""Explicit sections of section rings: polynomials, exact linear algebra, bases."""

from src.core.sections.basis import (
    Section,
    generated_in_bounded_degree,
    minimal_generator_counts,
    multiply,
    section_basis,
    section_to_json,
    unit_section,
)
from src.core.sections.linalg import EchelonBasis, rank

__all__ = [
    "EchelonBasis",
    "Section",
    "generated_in_bounded_degree",
    "minimal_generator_counts",
    "multiply",
    "rank",
    "section_basis",
    "section_to_json",
    "unit_section",
]
