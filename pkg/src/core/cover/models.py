"""
Pydantic models for cyclic covers of section rings.
"""

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.divisors.calculus import combine, degree, is_integral
from src.core.divisors.models import QDivisor
from src.core.sectionring.models import SectionRing


class CoverDescriptor(BaseModel):
    """
    The cyclic cover R~ = R + I t + I^(2) t^2 + ... of R with respect to a torsion class F.

    At dimension level I^(m) = R(c), so the generator u of I^(m) has degree -c,
    t has degree -k and R~ = sum_{i < m} I^(i)(ik) with k = -c/m.

    Attributes:
        base: The section ring R.
        class_divisor: F; the canonical cover uses F = K + D'.
        order: Order m of F in Cl(R).
        twist: The integer c with mF - cD principal.
        shift: k = -c/m.
        rejected: Minimality certificate from the order search.
        assumptions: Hypotheses recorded for reports, not verified.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    base: SectionRing
    class_divisor: QDivisor
    order: int = Field(..., ge=1, description="Order m of the class")
    twist: int = Field(..., description="Integer c with mF - cD principal")
    shift: Fraction = Field(..., description="k = -c/m")
    rejected: dict[int, str] = Field(default_factory=dict, description="Why each i < m fails")
    assumptions: dict[str, bool] = Field(
        default_factory=lambda: {"characteristic_zero": True, "normal_base": True},
        description="Hypotheses recorded for reports",
    )

    @model_validator(mode="after")
    def validate_cover(self) -> "CoverDescriptor":
        if self.shift * self.order != -self.twist:
            raise ValueError("shift * order must equal -twist")
        residue = combine(self.order, self.class_divisor, -self.twist, self.base.divisor)
        if not is_integral(residue) or degree(residue) != 0:
            raise ValueError(f"{self.order}F - {self.twist}D is not principal")
        return self

    @property
    def grading_denominator(self) -> int:
        """Degrees of R~ live in (1/m)Z."""
        return self.order

    @property
    def krull_dim(self) -> int:
        return self.base.krull_dim

    @property
    def name(self) -> str:
        return f"cover of {self.base.name}"
