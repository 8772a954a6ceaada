"""
Invariants of generalized section rings R = R(P^d, D).

Every graded dimension reduces to line bundle cohomology on P^d:

    [R]_n                  = h^0(O([nD]))                    n >= 0
    [H^i_m(R)]_n           = h^{i-1}(O([nD]))                i >= 2
    [omega_R^(i)]_n        = h^0(O([i(K+D') + nD]))

The order of a class F in Cl(R) is the least m for which mF - cD is an
integral divisor of degree 0 for some integer c; on P^d those divisors are
exactly the principal ones.
"""

from functools import lru_cache
from typing import Any, Optional

from src.core.cohomology.families import LinearFamily
from src.core.divisors.calculus import (
    canonical_divisor,
    combine,
    degree,
    frac_part,
    is_effective,
    scale,
    zero_divisor,
)
from src.core.divisors.models import QDivisor
from src.core.divisors.serialization import divisor_to_json
from src.core.sectionring.models import (
    AInvariantResult,
    CanonicalOrderResult,
    RationalityVerdict,
    RationalSingularityCertificate,
    SectionRing,
)
from src.core.utils.config import get_settings
from src.core.utils.exceptions import (
    AmbientMismatchError,
    ConfigurationError,
    GradedError,
    IndexOutOfRangeError,
    NotTorsionError,
)
from src.core.utils.logging import get_logger_with_context

log = get_logger_with_context(module="sectionring")

Window = tuple[int, int]


@lru_cache(maxsize=1024)
def twisted_family(R: SectionRing, F: QDivisor, i: int) -> LinearFamily:
    """The family n -> iF + nD."""
    if F.ambient_dim != R.ambient_dim:
        raise AmbientMismatchError(R.ambient_dim, F.ambient_dim)
    return LinearFamily(scale(i, F), R.divisor)


def hilbert_family(R: SectionRing) -> LinearFamily:
    return twisted_family(R, zero_divisor(R.ambient_dim), 0)


def hilbert(R: SectionRing, n: int) -> int:
    """dim_K [R]_n; zero in negative degrees."""
    if n < 0:
        return 0
    return hilbert_family(R).h(0, n)


def local_coh_dim(R: SectionRing, i: int, n: int) -> int:
    """dim_K [H^i_m(R)]_n.

    Raises:
        IndexOutOfRangeError: If i is outside [0, d+1].
    """
    if not 0 <= i <= R.krull_dim:
        raise IndexOutOfRangeError(i, 0, R.krull_dim, what="local cohomology index")
    # R is normal of dimension >= 2, so H^0 and H^1 vanish.
    if i <= 1:
        return 0
    return hilbert_family(R).h(i - 1, n)


def a_invariant(R: SectionRing) -> AInvariantResult:
    """Largest n with [H^{d+1}_m(R)]_n != 0.

    The scan starts at the certified bound above which h^d(O([nD])) vanishes and
    stops at the first nonzero value; positivity below top_positive_through()
    guarantees termination.
    """
    family = hilbert_family(R)
    d = R.ambient_dim
    start = family.top_zero_above()
    n = start
    steps = 1
    while family.h(d, n) == 0:
        n -= 1
        steps += 1
    log.debug(f"a({R.name}) = {n} after {steps} steps from {start}")
    return AInvariantResult(value=n, search_start=start, steps=steps)


def canonical_class(R: SectionRing) -> QDivisor:
    """K + D', the divisor whose symbolic powers give omega_R^(i)."""
    return combine(1, canonical_divisor(R.ambient_dim), 1, frac_part(R.divisor))


def symbolic_canonical_dim(R: SectionRing, i: int, n: int) -> int:
    """dim_K [omega_R^(i)]_n = h^0(O([i(K+D') + nD]))."""
    if i < 0:
        raise IndexOutOfRangeError(i, 0, None, what="symbolic power")
    return twisted_family(R, canonical_class(R), i).h(0, n)


def class_order(R: SectionRing, F: QDivisor, bound: Optional[int] = None) -> CanonicalOrderResult:
    """Order of the class of F in Cl(R) with its minimality certificate.

    The degree condition pins the twist: c = i deg(F) / deg(D). What remains is
    whether c is an integer and iF - cD is integral along every component.

    Raises:
        NotTorsionError: If no order is found up to `bound`.
    """
    bound = get_settings().torsion.bound if bound is None else bound
    if bound < 1:
        raise ConfigurationError("Torsion search bound must be positive", config_key="bound")
    if F.ambient_dim != R.ambient_dim:
        raise AmbientMismatchError(R.ambient_dim, F.ambient_dim)

    ratio = degree(F) / degree(R.divisor)
    rejected: dict[int, str] = {}
    for i in range(1, bound + 1):
        c = i * ratio
        if c.denominator != 1:
            rejected[i] = f"degree forces c = {c}"
            continue
        residue = combine(i, F, -c, R.divisor)
        fractional = [item.name for item, coeff in residue.terms if coeff.denominator != 1]
        if fractional:
            rejected[i] = f"not integral along {', '.join(fractional)}"
            continue
        log.debug(f"class {F} has order {i} with twist {c} in Cl({R.name})")
        return CanonicalOrderResult(order=i, twist=int(c), rejected=rejected)
    raise NotTorsionError(bound, str(F))


def canonical_order(R: SectionRing, bound: Optional[int] = None) -> CanonicalOrderResult:
    """Order of omega_R in Cl(R); at dimension level omega^(m) = R(c)."""
    return class_order(R, canonical_class(R), bound)


def f_regular_degree_test(R: SectionRing) -> bool:
    """Necessary condition for dense F-regular type: deg(K + D') < 0.

    False certifies that R is not of dense F-regular type.
    """
    return degree(canonical_class(R)) < 0


def rational_sing_certificate(R: SectionRing) -> RationalSingularityCertificate:
    a = a_invariant(R).value
    verdict = (
        RationalityVerdict.RATIONAL_CONDITIONAL if a < 0 else RationalityVerdict.NOT_RATIONAL
    )
    # Intermediate cohomology of line bundles on P^d vanishes, so R is CM.
    return RationalSingularityCertificate(
        is_cm=True,
        a_negative=a < 0,
        divisor_effective=is_effective(R.divisor),
        verdict=verdict,
        intermediate_vanishing=tuple(range(2, R.ambient_dim + 1)),
    )


def ring_report(
    R: SectionRing, window: Optional[Window] = None, bound: Optional[int] = None
) -> dict[str, Any]:
    """Everything the `ring` command prints, as JSON-ready data."""
    lo, hi = window or get_settings().scan.window
    degrees = range(lo, hi + 1)
    K = canonical_class(R)
    log.info(f"Ring report for {R.name} on [{lo}, {hi}]")

    try:
        order: dict[str, Any] = canonical_order(R, bound).model_dump(mode="json")
    except GradedError as e:
        order = {"error": e.to_dict()}

    return {
        "ring": R.name,
        "divisor": divisor_to_json(R.divisor),
        "ambient_dim": R.ambient_dim,
        "krull_dim": R.krull_dim,
        "window": [lo, hi],
        "hilbert": [hilbert(R, n) for n in degrees],
        "top_local_cohomology": [local_coh_dim(R, R.krull_dim, n) for n in degrees],
        "a_invariant": a_invariant(R).model_dump(mode="json"),
        "canonical_class": str(K),
        "canonical_class_degree": str(degree(K)),
        "canonical_order": order,
        "f_regular_test": f_regular_degree_test(R),
        "log_terminal": degree(K) < 0,
        "certificate": rational_sing_certificate(R).model_dump(mode="json"),
    }
