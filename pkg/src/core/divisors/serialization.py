"""
JSON codec for Q-divisors.

Schema:
    {"ambient_dim": int,
     "terms": [{"name": str, "degree": int, "coeff": "p/q", "polynomial": optional str}]}

Coefficients travel as exact fraction strings, never floats. When a term carries
a polynomial but no degree, the degree is read off the polynomial.
"""

from fractions import Fraction
from typing import Any, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator

from src.core.divisors.calculus import component, hypersurface, make_divisor
from src.core.divisors.models import CANONICAL_HYPERPLANE, Component, ComponentKind, QDivisor
from src.core.utils.exceptions import DivisorError


class TermSchema(BaseModel):
    """One term of the JSON divisor schema."""

    name: str = Field(..., min_length=1)
    degree: Optional[int] = None
    coeff: str = Field(..., description="Exact coefficient such as '1/3'")
    polynomial: Optional[str] = None

    @field_validator("coeff", mode="before")
    @classmethod
    def reject_floats(cls, v: Any) -> str:
        """Coefficients must be exact."""
        if isinstance(v, float):
            raise ValueError("coefficients must be exact fraction strings, not floats")
        return str(v)


class DivisorSchema(BaseModel):
    """The JSON divisor schema."""

    ambient_dim: int = Field(..., ge=1)
    terms: list[TermSchema] = Field(default_factory=list)


def divisor_from_json(data: dict[str, Any]) -> QDivisor:
    """Parse the JSON divisor schema.

    Raises:
        DivisorError: On schema violations or invalid terms.
    """
    try:
        schema = DivisorSchema.model_validate(data)
    except ValidationError as e:
        raise DivisorError("Malformed divisor JSON", details={"errors": e.errors()}) from e
    terms = []
    for term in schema.terms:
        try:
            coeff = Fraction(term.coeff)
        except (ValueError, ZeroDivisionError) as e:
            raise DivisorError(f"Invalid coefficient '{term.coeff}'", component=term.name) from e
        if term.name == CANONICAL_HYPERPLANE:
            item = Component(
                name=term.name, degree=1, kind=ComponentKind.GENERIC_HYPERPLANE
            )
        elif term.degree is None:
            if term.polynomial is None:
                raise DivisorError("Term needs a degree or a polynomial", component=term.name)
            item = hypersurface(term.name, term.polynomial, schema.ambient_dim)
        else:
            item = component(term.name, term.degree, term.polynomial)
        terms.append((item, coeff))
    return make_divisor(schema.ambient_dim, terms)


def divisor_to_json(D: QDivisor) -> dict[str, Any]:
    terms = []
    for item, coeff in D.terms:
        entry: dict[str, Any] = {"name": item.name, "degree": item.degree, "coeff": str(coeff)}
        if item.defining_polynomial is not None:
            entry["polynomial"] = item.defining_polynomial
        terms.append(entry)
    return {"ambient_dim": D.ambient_dim, "terms": terms}
