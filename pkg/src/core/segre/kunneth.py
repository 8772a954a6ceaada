"""
Segre products through the Kunneth formula for local cohomology.

For M over A (dim r) and N over B (dim s), with M # N = sum_n M_n (x) N_n,

    H^k(M # N) = M # H^k(N)  +  H^k(M) # N  +  sum_{i+j=k+1} H^i(M) # H^j(N)

and dim(M # N) = r + s - 1. Graded pieces of a Segre product are tensor
products, so every term is a pointwise product of dimension functions.
"""

from math import lcm
from typing import Any, Optional

from src.core.divisors.calculus import component, make_divisor
from src.core.graded.certified import CertifiedDimFn, certified_sum
from src.core.graded.objects import GradedObject, family_object, regrade
from src.core.sectionring.invariants import Window, hilbert_family
from src.core.sectionring.models import SectionRing, section_ring
from src.core.utils.config import get_settings
from src.core.utils.exceptions import GradingError, UndecidedError
from src.core.utils.logging import get_logger_with_context

log = get_logger_with_context(module="segre")


def to_graded_object(R: SectionRing) -> GradedObject:
    """R(P^d, D) with tails from the floor-degree bounds of the family nD."""
    return family_object(hilbert_family(R), R.name, assumptions={"normal": True})


def polynomial_ring_object(r: int) -> GradedObject:
    """K[Y0..Yr], realized as the section ring of a hyperplane on P^r."""
    hyperplane = make_divisor(r, [(component("Y", 1), 1)])
    return to_graded_object(section_ring(hyperplane, label=f"K[Y0..Y{r}]"))


def kunneth_terms(M: GradedObject, N: GradedObject, k: int) -> list[tuple[str, CertifiedDimFn]]:
    """The named summands of H^k(M # N); both objects must share a scale."""
    terms = [
        (f"{M.label} # H^{k}({N.label})", M.hilbert * N.local_cohomology(k)),
        (f"H^{k}({M.label}) # {N.label}", M.local_cohomology(k) * N.hilbert),
    ]
    for i in range(0, min(k + 1, M.krull_dim) + 1):
        j = k + 1 - i
        if j <= N.krull_dim:
            terms.append(
                (
                    f"H^{i}({M.label}) # H^{j}({N.label})",
                    M.local_cohomology(i) * N.local_cohomology(j),
                )
            )
    return terms


def _common_scale(M: GradedObject, N: GradedObject) -> tuple[GradedObject, GradedObject]:
    scale = lcm(M.scale, N.scale)
    if scale != M.scale or scale != N.scale:
        log.warning(f"Regrading {M.label} and {N.label} to the common scale {scale}")
    return regrade(M, scale), regrade(N, scale)


def segre(M: GradedObject, N: GradedObject) -> GradedObject:
    """M # N. Normality and reflexivity hypotheses are recorded, not checked.

    Raises:
        GradingError: If either factor has dimension 0.
    """
    if M.krull_dim < 1 or N.krull_dim < 1:
        raise GradingError(
            "Segre products need factors of positive dimension",
            details={"left": M.krull_dim, "right": N.krull_dim},
        )
    M, N = _common_scale(M, N)
    dim = M.krull_dim + N.krull_dim - 1
    label = f"{M.label} # {N.label}"
    lc = tuple(
        certified_sum([fn for _, fn in kunneth_terms(M, N, k)], label=f"H^{k}({label})")
        for k in range(dim + 1)
    )
    assumptions = {**M.assumptions, **N.assumptions, "kunneth_hypotheses": True}
    return GradedObject(
        krull_dim=dim,
        hilbert=M.hilbert * N.hilbert,
        lc=lc,
        scale=M.scale,
        label=label,
        assumptions=assumptions,
    )


def _term_status(fn: CertifiedDimFn) -> Any:
    try:
        return fn.is_identically_zero()
    except UndecidedError:
        return "undecided"


def kunneth_breakdown(
    M: GradedObject, N: GradedObject, window: Optional[Window] = None
) -> list[dict[str, Any]]:
    """Per k and per Kunneth term: certified vanishing and nonzero degrees in the window.

    The window is in scaled degrees of the common scale.
    """
    lo, hi = window or get_settings().scan.window
    M, N = _common_scale(M, N)
    breakdown = []
    for k in range(M.krull_dim + N.krull_dim):
        terms = [
            {
                "term": name,
                "identically_zero": _term_status(fn),
                "nonzero_degrees": fn.nonzero_degrees(range(lo, hi + 1)),
            }
            for name, fn in kunneth_terms(M, N, k)
        ]
        breakdown.append({"k": k, "terms": terms})
    return breakdown
