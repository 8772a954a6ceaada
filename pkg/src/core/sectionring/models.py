"""
Pydantic models for generalized section rings R(P^d, D) and their invariants.
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from src.core.divisors.calculus import is_ample
from src.core.divisors.models import QDivisor
from src.core.utils.exceptions import DivisorError


class SectionRing(BaseModel):
    """
    The ring R = sum_{n >= 0} H^0(P^d, O([nD])) of an ample Q-divisor D.

    Attributes:
        ambient_dim: Dimension d of the base projective space.
        divisor: The ample Q-divisor D.
        label: Optional display name used in reports.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ambient_dim: int = Field(..., ge=1, description="Dimension d of P^d")
    divisor: QDivisor = Field(..., description="Ample Q-divisor D")
    label: Optional[str] = Field(None, description="Display name")

    @model_validator(mode="after")
    def validate_divisor(self) -> "SectionRing":
        if self.divisor.ambient_dim != self.ambient_dim:
            raise ValueError(
                f"divisor lives on P^{self.divisor.ambient_dim}, ring on P^{self.ambient_dim}"
            )
        if not is_ample(self.divisor):
            raise ValueError(f"divisor {self.divisor} is not ample (degree must be positive)")
        return self

    @property
    def krull_dim(self) -> int:
        return self.ambient_dim + 1

    @property
    def name(self) -> str:
        return self.label or f"R(P^{self.ambient_dim}, {self.divisor})"


def section_ring(divisor: QDivisor, label: Optional[str] = None) -> SectionRing:
    """Build R(P^d, D), raising DivisorError when D is not ample."""
    try:
        return SectionRing(ambient_dim=divisor.ambient_dim, divisor=divisor, label=label)
    except ValidationError as e:
        raise DivisorError(
            f"Cannot build a section ring from {divisor}",
            details={"errors": [err["msg"] for err in e.errors()]},
        ) from e


class CanonicalOrderResult(BaseModel):
    """
    Order of a divisor class F in Cl(R): the least m with mF - cD integral of degree 0.

    Attributes:
        order: The order m.
        twist: The integer c; at dimension level I^(m) is R(c).
        rejected: Reason each i < m fails, keyed by i (the minimality certificate).
    """

    model_config = ConfigDict(frozen=True)

    order: int = Field(..., ge=1, description="Order m of the class")
    twist: int = Field(..., description="Integer c with mF - cD principal")
    rejected: dict[int, str] = Field(
        default_factory=dict, description="Why each smaller i admits no c"
    )

    @model_validator(mode="after")
    def validate_certificate(self) -> "CanonicalOrderResult":
        if sorted(self.rejected) != list(range(1, self.order)):
            raise ValueError("minimality certificate must cover every i below the order")
        return self


class AInvariantResult(BaseModel):
    """a(R) together with its termination certificate."""

    model_config = ConfigDict(frozen=True)

    value: int = Field(..., description="Largest n with [H^top_m(R)]_n nonzero")
    search_start: int = Field(
        ..., description="Certified bound above which the top local cohomology vanishes"
    )
    steps: int = Field(..., ge=1, description="Degrees scanned downward from search_start")


class RationalityVerdict(str, Enum):
    """Outcome of the rational singularity criterion."""

    RATIONAL_CONDITIONAL = "RATIONAL_CONDITIONAL"
    NOT_RATIONAL = "NOT_RATIONAL"
    UNDETERMINED = "UNDETERMINED"


class RationalSingularityCertificate(BaseModel):
    """
    Evidence for the criterion "CM with a < 0 implies rational singularities".

    The criterion also needs rational singularities on the punctured spectrum;
    that hypothesis is never verified here and is always reported as assumed.
    """

    model_config = ConfigDict(frozen=True)

    is_cm: bool
    a_negative: bool
    divisor_effective: bool
    verdict: RationalityVerdict
    punctured_spectrum_assumed: bool = True
    intermediate_vanishing: tuple[int, ...] = Field(
        default=(), description="Indices i whose local cohomology vanishes by the closed form"
    )
