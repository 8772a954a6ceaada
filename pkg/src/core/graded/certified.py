"""
Certified dimension functions.

A CertifiedDimFn is an exact function Z -> N together with tail certificates
that turn "is this identically zero?" and "where is the last nonzero value?"
into finite computations:

    zero_below L       f(n) == 0 for every n < L
    zero_above U       f(n) == 0 for every n > U
    positive_below P   f(n) > 0 for every n <= P
    positive_above P   f(n) > 0 for every n >= P
    positive_on_multiples (s, P)
                       f(n) > 0 for every n >= P divisible by s

A side carries at most one certificate (a zero tail and a positive tail on the
same side contradict each other, and so do zero_above and positivity on
multiples). Certificates compose through sums and products; when a side cannot
be bounded the certificate is simply absent and the decisions below
raise UndecidedError instead of guessing.
"""

from math import lcm
from typing import Callable, Iterable, Optional

from src.core.utils.config import get_settings
from src.core.utils.exceptions import ConsistencyError, UndecidedError


class CertifiedDimFn:
    """An exact dimension function with optional tail certificates."""

    def __init__(
        self,
        fn: Callable[[int], int],
        *,
        zero_below: Optional[int] = None,
        zero_above: Optional[int] = None,
        positive_below: Optional[int] = None,
        positive_above: Optional[int] = None,
        positive_on_multiples: Optional[tuple[int, int]] = None,
        label: str = "",
    ) -> None:
        for zero, positive, side in (
            (zero_below, positive_below, "lower"),
            (zero_above, positive_above, "upper"),
        ):
            if zero is not None and positive is not None:
                raise ConsistencyError(
                    f"The {side} tail of {label or 'function'} cannot be both zero and positive",
                    check="certificate",
                )
        if zero_above is not None and positive_on_multiples is not None:
            raise ConsistencyError(
                f"{label or 'function'} cannot vanish above {zero_above} and stay positive "
                "on multiples",
                check="certificate",
            )
        if positive_on_multiples is not None and positive_on_multiples[0] < 1:
            raise ConsistencyError(
                "Stride of a positivity certificate must be positive", check="certificate"
            )
        self._fn = fn
        self._cache: dict[int, int] = {}
        self.zero_below = zero_below
        self.zero_above = zero_above
        self.positive_below = positive_below
        self.positive_above = positive_above
        self.positive_on_multiples = None if positive_above is not None else positive_on_multiples
        self.label = label

    def __call__(self, n: int) -> int:
        if n not in self._cache:
            self._cache[n] = self._fn(n)
        return self._cache[n]

    @classmethod
    def zero(cls, label: str = "0") -> "CertifiedDimFn":
        return cls(lambda n: 0, zero_below=1, zero_above=0, label=label)

    @property
    def bounds(self) -> list[int]:
        return [
            b
            for b in (self.zero_below, self.zero_above, self.positive_below, self.positive_above)
            if b is not None
        ]

    def multiples_certificate(self) -> Optional[tuple[int, int]]:
        """(s, P) with f(n) > 0 for every n >= P divisible by s, if known."""
        if self.positive_above is not None:
            return (1, self.positive_above)
        return self.positive_on_multiples

    def transient_window(self) -> range:
        """[min bound - 2, max bound + 2], or the configured scan window when uncertified."""
        if not self.bounds:
            lo, hi = get_settings().scan.window
            return range(lo, hi + 1)
        return range(min(self.bounds) - 2, max(self.bounds) + 3)

    def nonzero_degrees(self, window: Iterable[int]) -> list[int]:
        return [n for n in window if self(n) != 0]

    def is_identically_zero(self) -> bool:
        """Decide f == 0 on all of Z.

        Raises:
            UndecidedError: If the certificates leave a side open and no nonzero
                value turns up in the transient window.
        """
        if self.positive_below is not None or self.multiples_certificate() is not None:
            return False
        if self.zero_below is not None and self.zero_above is not None:
            return all(self(n) == 0 for n in range(self.zero_below, self.zero_above + 1))
        # A single nonzero value settles it even without certificates.
        if self.nonzero_degrees(self.transient_window()):
            return False
        raise UndecidedError(
            f"Cannot decide whether {self.label or 'function'} vanishes identically",
            details={"zero_below": self.zero_below, "zero_above": self.zero_above},
        )

    def max_nonzero(self) -> Optional[int]:
        """Largest n with f(n) != 0, or None when f vanishes identically.

        Raises:
            UndecidedError: Without a zero_above certificate, or when the downward
                scan exceeds the configured limit.
        """
        if self.zero_above is None:
            raise UndecidedError(
                f"No upper vanishing certificate for {self.label or 'function'}",
                details={"positive_above": self.positive_above},
            )
        limit = get_settings().scan.a_invariant_scan_limit
        n = self.zero_above
        for _ in range(limit):
            if self(n) != 0:
                return n
            if self.positive_below is not None and n <= self.positive_below:
                raise ConsistencyError(
                    f"{self.label} vanishes at {n} despite positivity up to {self.positive_below}",
                    check="certificate",
                )
            if self.zero_below is not None and n < self.zero_below:
                return None
            n -= 1
        raise UndecidedError(
            f"Downward scan for {self.label or 'function'} exceeded {limit} steps",
            details={"start": self.zero_above, "limit": limit},
        )

    def verify(self, samples: Optional[int] = None) -> None:
        """Check every certificate on the transient window and on sampled points beyond it.

        Raises:
            ConsistencyError: If some value contradicts a certificate.
        """
        samples = get_settings().scan.spot_check_samples if samples is None else samples
        window = self.transient_window()
        points = [
            *range(window.start - samples, window.start),
            *window,
            *range(window.stop, window.stop + samples),
        ]
        # (name, bound, region test, whether the region must be zero)
        rules: list[tuple[str, Optional[int], Callable[[int, int], bool], bool]] = [
            ("zero_below", self.zero_below, lambda n, b: n < b, True),
            ("zero_above", self.zero_above, lambda n, b: n > b, True),
            ("positive_below", self.positive_below, lambda n, b: n <= b, False),
            ("positive_above", self.positive_above, lambda n, b: n >= b, False),
        ]
        if self.positive_on_multiples is not None:
            stride, start = self.positive_on_multiples
            rules.append(
                ("positive_on_multiples", start, lambda n, b: n >= b and n % stride == 0, False)
            )
        for n in points:
            for name, bound, inside, want_zero in rules:
                if bound is not None and inside(n, bound) and (self(n) == 0) != want_zero:
                    raise ConsistencyError(
                        f"{self.label or 'function'} violates {name} at {n}",
                        check="certificate",
                        details={"degree": n, "value": self(n), "bound": bound},
                    )

    # Composition

    def shifted(self, offset: int) -> "CertifiedDimFn":
        """n -> f(n + offset)."""
        return CertifiedDimFn(
            lambda n: self(n + offset),
            zero_below=_apply(self.zero_below, lambda b: b - offset),
            zero_above=_apply(self.zero_above, lambda b: b - offset),
            positive_below=_apply(self.positive_below, lambda b: b - offset),
            positive_above=_apply(self.positive_above, lambda b: b - offset),
            positive_on_multiples=_shift_multiples(self.positive_on_multiples, offset),
            label=f"{self.label}({offset:+d})",
        )

    def dilated(self, factor: int) -> "CertifiedDimFn":
        """Q -> f(Q / factor) when factor divides Q, else 0.

        Tail positivity survives only on multiples of the factor.
        """
        if factor == 1:
            return self
        certificate = self.multiples_certificate()
        return CertifiedDimFn(
            lambda q: self(q // factor) if q % factor == 0 else 0,
            zero_below=_apply(self.zero_below, lambda b: b * factor),
            zero_above=_apply(self.zero_above, lambda b: b * factor),
            positive_on_multiples=(
                None if certificate is None else (certificate[0] * factor, certificate[1] * factor)
            ),
            label=f"{self.label}[x{factor}]",
        )

    def __mul__(self, other: "CertifiedDimFn") -> "CertifiedDimFn":
        # A zero factor kills the product; positivity needs both factors positive.
        pair = (self, other)
        zero_below = _pick(max, [f.zero_below for f in pair], need_all=False)
        zero_above = _pick(min, [f.zero_above for f in pair], need_all=False)
        positive_below = positive_above = None
        if zero_below is None:
            positive_below = _pick(min, [f.positive_below for f in pair], need_all=True)
        if zero_above is None:
            positive_above = _pick(max, [f.positive_above for f in pair], need_all=True)
        multiples = None
        left, right = (f.multiples_certificate() for f in pair)
        if zero_above is None and positive_above is None and left and right:
            multiples = (lcm(left[0], right[0]), max(left[1], right[1]))
        return CertifiedDimFn(
            lambda n: self(n) * other(n),
            zero_below=zero_below,
            zero_above=zero_above,
            positive_below=positive_below,
            positive_above=positive_above,
            positive_on_multiples=multiples,
            label=f"{self.label}*{other.label}",
        )


def _apply(bound: Optional[int], fn: Callable[[int], int]) -> Optional[int]:
    return None if bound is None else fn(bound)


def _shift_multiples(
    certificate: Optional[tuple[int, int]], offset: int
) -> Optional[tuple[int, int]]:
    if certificate is None or offset % certificate[0] != 0:
        return None
    return (certificate[0], certificate[1] - offset)


def _pick(
    choose: Callable[[list[int]], int], bounds: list[Optional[int]], need_all: bool
) -> Optional[int]:
    known = [b for b in bounds if b is not None]
    if not known or (need_all and len(known) < len(bounds)):
        return None
    return choose(known)


def certified_sum(terms: list[CertifiedDimFn], label: str = "") -> CertifiedDimFn:
    """Pointwise sum of nonnegative functions.

    A positive term makes the sum positive on its tail; a zero tail needs every
    term to be zero there.
    """
    if not terms:
        return CertifiedDimFn.zero(label)
    positive_below = _pick(max, [t.positive_below for t in terms], need_all=False)
    positive_above = _pick(min, [t.positive_above for t in terms], need_all=False)
    zero_below = zero_above = None
    if positive_below is None:
        zero_below = _pick(min, [t.zero_below for t in terms], need_all=True)
    if positive_above is None:
        zero_above = _pick(max, [t.zero_above for t in terms], need_all=True)
    # Any term positive on multiples carries the sum; keep the finest stride.
    multiples = min(
        (c for t in terms if (c := t.multiples_certificate()) is not None), default=None
    )
    return CertifiedDimFn(
        lambda n: sum(t(n) for t in terms),
        zero_below=zero_below,
        zero_above=zero_above,
        positive_below=positive_below,
        positive_above=positive_above,
        positive_on_multiples=multiples,
        label=label or "+".join(t.label for t in terms),
    )
