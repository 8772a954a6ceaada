"""
Pydantic models for rational-coefficient Weil divisors on projective space.

A QDivisor is a finite formal sum of named irreducible hypersurfaces with
exact rational coefficients. Coefficients are `fractions.Fraction`, which
always stay in lowest terms with a positive denominator.
"""

from enum import Enum
from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

# Name of the hyperplane carrying the canonical divisor; user components may not use it.
CANONICAL_HYPERPLANE = "@H"


class ComponentKind(str, Enum):
    """How a component is specified."""

    GENERIC_HYPERPLANE = "GenericHyperplane"
    NAMED_HYPERSURFACE = "NamedHypersurface"


class Component(BaseModel):
    """
    An irreducible hypersurface of P^d.

    Attributes:
        name: Identifier; components are compared by name only.
        degree: Degree e of the hypersurface.
        kind: GenericHyperplane or NamedHypersurface.
        defining_polynomial: Homogeneous polynomial in x0..xd, needed only for explicit sections.
    """

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1, description="Component identifier")
    degree: int = Field(..., description="Degree of the hypersurface")
    kind: ComponentKind = Field(ComponentKind.NAMED_HYPERSURFACE, description="Component kind")
    defining_polynomial: Optional[str] = Field(None, description="Defining polynomial")

    @field_validator("degree")
    @classmethod
    def validate_degree(cls, v: int) -> int:
        """Hypersurfaces have positive degree."""
        if v < 1:
            raise ValueError("component degree must be positive")
        return v

    def __str__(self) -> str:
        return f"V({self.name})" if self.name != CANONICAL_HYPERPLANE else "H"


class QDivisor(BaseModel):
    """
    A Q-divisor D = sum n_i V_i on P^d.

    Terms are kept sorted by component name with zero coefficients dropped; build
    instances with `make_divisor` rather than directly.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ambient_dim: int = Field(..., ge=1, description="Dimension d of the ambient P^d")
    terms: tuple[tuple[Component, Fraction], ...] = Field(default=(), description="Nonzero terms")

    @property
    def components(self) -> tuple[Component, ...]:
        return tuple(component for component, _ in self.terms)

    def coefficient(self, name: str) -> Fraction:
        """Coefficient of the named component (zero when absent)."""
        for component, coeff in self.terms:
            if component.name == name:
                return coeff
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for component, coeff in self.terms:
            if coeff == 1:
                parts.append(str(component))
            elif coeff == -1:
                parts.append(f"-{component}")
            else:
                parts.append(f"{coeff}*{component}")
        return " + ".join(parts).replace("+ -", "- ")
