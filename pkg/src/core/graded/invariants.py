"""Depth, Cohen-Macaulayness and a-invariants decided from certified dimension data."""

from fractions import Fraction

from src.core.graded.objects import GradedObject
from src.core.utils.exceptions import ConsistencyError, UndecidedError
from src.core.utils.logging import get_logger_with_context

log = get_logger_with_context(module="graded")


def depth(obj: GradedObject) -> int:
    """Least k with H^k_m nonzero.

    H^r_m never vanishes for r = krull_dim, so once lc[0..r-1] are certified
    zero the answer is r without inspecting the top.

    Raises:
        UndecidedError: If some lc[k], k < r, cannot be decided.
    """
    for k in range(obj.krull_dim):
        if not obj.lc[k].is_identically_zero():
            log.debug(f"depth({obj.label}) = {k}")
            return k
    return obj.krull_dim


def is_cm(obj: GradedObject) -> bool:
    return depth(obj) == obj.krull_dim


def a_inv(obj: GradedObject) -> Fraction:
    """Largest degree with [H^r_m]_n != 0, in true (unscaled) units.

    Raises:
        UndecidedError: Without an upper vanishing certificate on the top function.
        ConsistencyError: If the top local cohomology turns out to vanish.
    """
    top = obj.lc[obj.krull_dim].max_nonzero()
    if top is None:
        raise ConsistencyError(
            f"Top local cohomology of {obj.label} vanishes identically",
            check="grothendieck_nonvanishing",
        )
    return Fraction(top, obj.scale)


def canonical_dim(obj: GradedObject, n: int) -> int:
    """dim [omega]_n = dim [H^r_m]_{-n}, graded duality at dimension level."""
    return obj.lc[obj.krull_dim](-n)


def has_all_positive_degrees(obj: GradedObject) -> bool:
    """Whether [M]_n != 0 for every integer n >= 1.

    Integer degrees are the multiples of the scale, so a regraded object is
    decided by the positivity its undilated source carries onto those multiples.

    Raises:
        UndecidedError: Without a positivity certificate covering the multiples of the scale.
    """
    hilbert = obj.hilbert
    certificate = hilbert.multiples_certificate()
    if certificate is None or obj.scale % certificate[0] != 0:
        if hilbert.zero_above is not None or hilbert(obj.scale) == 0:
            return False
        raise UndecidedError(
            f"No positivity certificate for the Hilbert function of {obj.label}",
            details={"scale": obj.scale, "certificate": certificate},
        )
    last = max(certificate[1], obj.scale)
    return all(hilbert(q) > 0 for q in range(obj.scale, last + 1, obj.scale))
