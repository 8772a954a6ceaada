"""
Cyclic and canonical covers of section rings.

R~ = sum_{i=0}^{m-1} I^(i)(ik) with dim [I^(i)]_j = h^0(O([iF + jD])). Degrees of
R~ live in (1/m)Z; the API only takes scaled integer degrees Q, where Q stands
for the true degree Q/scale and scale defaults to m.
"""

from fractions import Fraction
from typing import Any, Optional

from src.core.cover.models import CoverDescriptor
from src.core.divisors.models import QDivisor
from src.core.graded.invariants import a_inv, depth
from src.core.graded.objects import GradedObject, direct_sum, family_object, regrade, twist
from src.core.sectionring.invariants import (
    Window,
    canonical_class,
    class_order,
    twisted_family,
)
from src.core.sectionring.models import RationalityVerdict, SectionRing
from src.core.utils.config import get_settings
from src.core.utils.exceptions import (
    ConsistencyError,
    GradingError,
    IndexOutOfRangeError,
    UndecidedError,
)
from src.core.utils.logging import get_logger_with_context

log = get_logger_with_context(module="cover")


def cyclic_cover(R: SectionRing, F: QDivisor, bound: Optional[int] = None) -> CoverDescriptor:
    """The cyclic cover of R with respect to the class of F.

    Raises:
        NotTorsionError: If F has no order up to `bound`.
    """
    result = class_order(R, F, bound)
    shift = Fraction(-result.twist, result.order)
    log.info(f"Cyclic cover of {R.name}: order {result.order}, twist {result.twist}")
    cover = CoverDescriptor(
        base=R,
        class_divisor=F,
        order=result.order,
        twist=result.twist,
        shift=shift,
        rejected=result.rejected,
    )
    if cover_hilbert(cover, 0) != 1:
        raise ConsistencyError(f"[R~]_0 != K for {cover.name}", check="cover_degree_zero")
    return cover


def canonical_cover(R: SectionRing, bound: Optional[int] = None) -> CoverDescriptor:
    return cyclic_cover(R, canonical_class(R), bound)


def _scale(C: CoverDescriptor, scale: Optional[int]) -> int:
    scale = C.order if scale is None else scale
    if scale < 1 or scale % C.shift.denominator != 0:
        raise GradingError(
            f"Scale {scale} does not resolve the shift {C.shift}",
            details={"scale": scale, "shift": str(C.shift)},
        )
    return scale


def cover_summand_degree(
    C: CoverDescriptor, i: int, Q: int, scale: Optional[int] = None
) -> Optional[int]:
    """Degree j of I^(i) feeding scaled degree Q of R~; None when Q/scale + ik is fractional."""
    scale = _scale(C, scale)
    j = Fraction(Q, scale) + i * C.shift
    return int(j) if j.denominator == 1 else None


def cover_hilbert(C: CoverDescriptor, Q: int, scale: Optional[int] = None) -> int:
    """dim [R~]_{Q/scale}."""
    total = 0
    for i in range(C.order):
        j = cover_summand_degree(C, i, Q, scale)
        if j is not None:
            total += twisted_family(C.base, C.class_divisor, i).h(0, j)
    return total


def cover_local_coh(C: CoverDescriptor, j: int, Q: int, scale: Optional[int] = None) -> int:
    """dim [H^j_m(R~)]_{Q/scale}, computed summandwise.

    Raises:
        IndexOutOfRangeError: If j is outside [0, dim R].
    """
    if not 0 <= j <= C.krull_dim:
        raise IndexOutOfRangeError(j, 0, C.krull_dim, what="local cohomology index")
    if j <= 1:
        return 0
    total = 0
    for i in range(C.order):
        n = cover_summand_degree(C, i, Q, scale)
        if n is not None:
            total += twisted_family(C.base, C.class_divisor, i).h(j - 1, n)
    return total


def export_graded_object(C: CoverDescriptor, scale: Optional[int] = None) -> GradedObject:
    """R~ as a GradedObject at the given scale (default m).

    Summand i is the module I^(i) regraded to `scale` and twisted by scale*i*k;
    its tails come from the floor-degree bounds of the family iF + nD.
    """
    scale = _scale(C, scale)
    summands = []
    for i in range(C.order):
        module = family_object(twisted_family(C.base, C.class_divisor, i), f"I^({i})")
        summands.append(twist(regrade(module, scale), int(scale * i * C.shift)))
    obj = direct_sum(summands, label=C.name)
    return obj.model_copy(update={"assumptions": dict(C.assumptions)})


def cover_a_invariant(C: CoverDescriptor) -> Fraction:
    """a(R~) = -k = c/m, cross-checked against a scan of the top local cohomology.

    Raises:
        ConsistencyError: If formula and scan disagree.
    """
    formula = -C.shift
    scanned = a_inv(export_graded_object(C))
    if scanned != formula:
        raise ConsistencyError(
            f"a-invariant formula {formula} disagrees with scan {scanned} for {C.name}",
            check="cover_a_invariant",
            details={"formula": str(formula), "scan": str(scanned)},
        )
    return formula


def quasi_gorenstein_check(C: CoverDescriptor, window: Optional[Window] = None) -> bool:
    """Dimension-level test of omega_{R~} = R~(a) over the window.

    Checks [H^top_m(R~)]_{-Q} == [R~]_{Q + ma} for scaled degrees Q at scale m,
    where ma = c.
    """
    lo, hi = window or get_settings().scan.window
    top = C.krull_dim
    shift = C.twist
    for Q in range(lo, hi + 1):
        if cover_local_coh(C, top, -Q) != cover_hilbert(C, Q + shift):
            log.debug(f"{C.name} fails the quasi-Gorenstein symmetry at Q = {Q}")
            return False
    return True


def cover_rational_certificate(C: CoverDescriptor) -> dict[str, Any]:
    """Rational singularity criterion for the cover: CM with a(R~) < 0.

    R~ is quasi-Gorenstein, so rational singularities force both conditions;
    the punctured-spectrum hypothesis is assumed, never verified. A condition
    that cannot be certified is reported as None, and the verdict is
    UNDETERMINED unless the other condition already fails.
    """
    obj = export_graded_object(C)
    cover_depth: Optional[int] = None
    a: Optional[Fraction] = None
    try:
        cover_depth = depth(obj)
    except UndecidedError as e:
        log.warning(f"Depth of {C.name} is undecided: {e.message}")
    try:
        a = cover_a_invariant(C)
    except UndecidedError as e:
        log.warning(f"a-invariant of {C.name} is undecided: {e.message}")
    cm = None if cover_depth is None else cover_depth == obj.krull_dim
    a_negative = None if a is None else a < 0
    if cm is False or a_negative is False:
        verdict = RationalityVerdict.NOT_RATIONAL
    elif cm and a_negative:
        verdict = RationalityVerdict.RATIONAL_CONDITIONAL
    else:
        verdict = RationalityVerdict.UNDETERMINED
    return {
        "is_cm": cm,
        "depth": cover_depth,
        "a_invariant": None if a is None else str(a),
        "a_negative": a_negative,
        "verdict": verdict.value,
        "punctured_spectrum_assumed": True,
    }


def cover_report(C: CoverDescriptor, window: Optional[Window] = None) -> dict[str, Any]:
    """Everything the `cover` command prints; tables are indexed by scaled degree Q."""
    lo, hi = window or get_settings().scan.window
    degrees = range(lo, hi + 1)
    top = C.krull_dim
    return {
        "cover": C.name,
        "class_divisor": str(C.class_divisor),
        "order": C.order,
        "twist": C.twist,
        "shift": str(C.shift),
        "grading_denominator": C.grading_denominator,
        "window": [lo, hi],
        "hilbert": [cover_hilbert(C, Q) for Q in degrees],
        "top_local_cohomology": [cover_local_coh(C, top, Q) for Q in degrees],
        "a_invariant": str(cover_a_invariant(C)),
        "quasi_gorenstein": quasi_gorenstein_check(C, (lo, hi)),
        "rational_certificate": cover_rational_certificate(C),
        "assumptions": dict(C.assumptions),
    }
