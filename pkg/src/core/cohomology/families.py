"""
Linear families n -> base + n*step of Q-divisors.

Every graded dimension in the engine is h^i of some member of such a family:
[R]_n uses (0, D), [omega^(i)]_n uses (i(K+D'), D). The family keeps integer
coefficient arrays so floor degrees cost a few integer divisions, and exposes
the certified window

    deg G(n) - slack <= deg [G(n)] <= deg G(n)

that every vanishing/positivity certificate is derived from.
"""

from fractions import Fraction
from functools import cached_property
from math import ceil, floor, lcm

from src.core.cohomology.line_bundles import h_line
from src.core.divisors.calculus import degree
from src.core.divisors.models import QDivisor
from src.core.utils.exceptions import AmbientMismatchError, IndexOutOfRangeError


class LinearFamily:
    """The family G(n) = base + n*step on P^d."""

    def __init__(self, base: QDivisor, step: QDivisor) -> None:
        if base.ambient_dim != step.ambient_dim:
            raise AmbientMismatchError(base.ambient_dim, step.ambient_dim)
        self.base = base
        self.step = step
        self.ambient_dim = base.ambient_dim
        names = sorted({c.name for c in base.components} | {c.name for c in step.components})
        degrees = {c.name: c.degree for c in (*base.components, *step.components)}
        # Per component: (degree, a_num, b_num, den) with coefficient (a_num + n*b_num)/den.
        self._rows: list[tuple[int, int, int, int]] = []
        for name in names:
            a, b = base.coefficient(name), step.coefficient(name)
            den = lcm(a.denominator, b.denominator)
            a_num = a.numerator * (den // a.denominator)
            b_num = b.numerator * (den // b.denominator)
            self._rows.append((degrees[name], a_num, b_num, den))

    @cached_property
    def base_degree(self) -> Fraction:
        return degree(self.base)

    @cached_property
    def step_degree(self) -> Fraction:
        return degree(self.step)

    @cached_property
    def slack(self) -> Fraction:
        """sum_j e_j (1 - 1/L_j): bounds deg G(n) - deg [G(n)] for every n."""
        return sum((Fraction(e * (den - 1), den) for e, _, _, den in self._rows), Fraction(0))

    def degree_at(self, n: int) -> Fraction:
        return self.base_degree + n * self.step_degree

    def floor_degree(self, n: int) -> int:
        """deg [base + n*step]."""
        return sum(e * ((a + n * b) // den) for e, a, b, den in self._rows)

    def h(self, i: int, n: int) -> int:
        """h^i(P^d, O(base + n*step))."""
        if not 0 <= i <= self.ambient_dim:
            raise IndexOutOfRangeError(i, 0, self.ambient_dim, what="cohomology index")
        return h_line(self.ambient_dim, i, self.floor_degree(n))

    # Certified tails, valid when step_degree > 0. Each returns an integer bound.

    def _require_positive_step(self) -> Fraction:
        delta = self.step_degree
        if delta <= 0:
            raise ValueError("tail bounds need a step of positive degree")
        return delta

    def h0_zero_below(self) -> int:
        """h^0 vanishes for n below this: deg G(n) < 0 there."""
        delta = self._require_positive_step()
        return ceil(-self.base_degree / delta)

    def h0_positive_from(self) -> int:
        """h^0 is positive from here on: deg G(n) - slack >= 0."""
        delta = self._require_positive_step()
        return ceil((self.slack - self.base_degree) / delta)

    def top_positive_through(self) -> int:
        """h^d is positive up to here: deg G(n) <= -d-1."""
        delta = self._require_positive_step()
        return floor((-self.ambient_dim - 1 - self.base_degree) / delta)

    def top_zero_above(self) -> int:
        """h^d vanishes above this: deg G(n) - slack > -d-1."""
        delta = self._require_positive_step()
        return floor((self.slack - self.ambient_dim - 1 - self.base_degree) / delta)

    def __repr__(self) -> str:
        return f"LinearFamily(base={self.base}, step={self.step})"
