"""
Closed-form cohomology of line bundles on projective space.

h^0(P^d, O(k)) = C(k+d, d) for k >= 0, h^d(P^d, O(k)) = C(-k-1, d) for k <= -d-1,
and every other group vanishes. Q-divisor twists go through the rounding:
O(E) = O([E]), so h^i(O(E)) = h^i(O(deg [E])).
"""

from math import comb, factorial

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.divisors.calculus import degree, floor_divisor
from src.core.divisors.models import QDivisor
from src.core.utils.exceptions import IndexOutOfRangeError


def h_line(d: int, i: int, k: int) -> int:
    """dim H^i(P^d, O(k)).

    Raises:
        IndexOutOfRangeError: If i is outside [0, d].
    """
    if not 0 <= i <= d:
        raise IndexOutOfRangeError(i, 0, d, what="cohomology index")
    if i == 0:
        return comb(k + d, d) if k >= 0 else 0
    if i == d:
        return comb(-k - 1, d) if k <= -d - 1 else 0
    return 0


def euler_characteristic(d: int, k: int) -> int:
    """The binomial polynomial (k+1)(k+2)...(k+d)/d! evaluated at any integer k."""
    numerator = 1
    for j in range(1, d + 1):
        numerator *= k + j
    return numerator // factorial(d)


def h_q(E: QDivisor, i: int) -> int:
    """dim H^i(P^d, O_X(E)), routed through floor-then-degree.

    Raises:
        IndexOutOfRangeError: If i is outside [0, d].
    """
    rounded = degree(floor_divisor(E))
    assert rounded.denominator == 1, "rounded divisor must have integral degree"
    return h_line(E.ambient_dim, i, int(rounded))


class CohomologyQuery(BaseModel):
    """A request for h^i(P^d, O(E))."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ambient_dim: int = Field(..., ge=1)
    index: int
    twist: QDivisor

    @model_validator(mode="after")
    def validate_index(self) -> "CohomologyQuery":
        if not 0 <= self.index <= self.ambient_dim:
            raise ValueError(f"index {self.index} outside [0, {self.ambient_dim}]")
        if self.twist.ambient_dim != self.ambient_dim:
            raise ValueError("twist lives on a different projective space")
        return self

    def evaluate(self) -> int:
        return h_q(self.twist, self.index)
