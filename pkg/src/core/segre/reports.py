"""
Segre product reports: the Goto-Watanabe criterion, canonical covers of Segre
products, and the failure of Cohen-Macaulay ascent for non-log-terminal rings.
"""

from fractions import Fraction
from math import gcd
from typing import Any, Optional

from src.core.cover.covers import (
    canonical_cover,
    cover_a_invariant,
    export_graded_object,
)
from src.core.divisors.calculus import degree
from src.core.graded.invariants import a_inv, depth, has_all_positive_degrees, is_cm
from src.core.graded.objects import GradedObject, direct_sum, family_object, regrade, twist
from src.core.sectionring.invariants import (
    Window,
    canonical_class,
    canonical_order,
    rational_sing_certificate,
    twisted_family,
)
from src.core.sectionring.models import RationalityVerdict, SectionRing
from src.core.segre.kunneth import kunneth_breakdown, polynomial_ring_object, segre
from src.core.utils.config import get_settings
from src.core.utils.exceptions import ConsistencyError, IncompatibleTwistsError
from src.core.utils.logging import get_logger_with_context

log = get_logger_with_context(module="segre")


def segre_report(
    M: GradedObject, N: GradedObject, window: Optional[Window] = None
) -> dict[str, Any]:
    product = segre(M, N)
    lo, hi = window or get_settings().scan.window
    return {
        "left": M.label,
        "right": N.label,
        "dim": product.krull_dim,
        "scale": product.scale,
        "depth": depth(product),
        "is_cm": is_cm(product),
        "a_invariant": str(a_inv(product)),
        "window": [lo, hi],
        "hilbert": [product.hilbert(q) for q in range(lo, hi + 1)],
        "kunneth_breakdown": kunneth_breakdown(M, N, (lo, hi)),
        "assumptions": product.assumptions,
    }


def goto_watanabe_report(A: GradedObject, B: GradedObject) -> dict[str, Any]:
    """Evaluate both directions of the criterion on A and B.

    Forward: A, B CM of dim >= 2 with a < 0 imply A # B CM with a < 0.
    Converse: A # B CM and A, B nonzero in every positive degree imply a(A), a(B) < 0.

    Raises:
        ConsistencyError: If the computed data contradict either direction.
        UndecidedError: If a needed vanishing question cannot be certified.
    """
    product = segre(A, B)
    facts: dict[str, Any] = {
        "left_cm": is_cm(A),
        "right_cm": is_cm(B),
        "left_dim": A.krull_dim,
        "right_dim": B.krull_dim,
        "left_a": a_inv(A),
        "right_a": a_inv(B),
        "product_dim": product.krull_dim,
        "product_cm": is_cm(product),
        "product_a_invariant": a_inv(product),
    }
    base_hypotheses = (
        facts["left_cm"] and facts["right_cm"] and A.krull_dim >= 2 and B.krull_dim >= 2
    )
    forward = base_hypotheses and facts["left_a"] < 0 and facts["right_a"] < 0
    if forward and not (facts["product_cm"] and facts["product_a_invariant"] < 0):
        raise ConsistencyError(
            f"{product.label} violates the forward direction", check="goto_watanabe"
        )

    converse = None
    if base_hypotheses and facts["product_cm"]:
        converse = has_all_positive_degrees(A) and has_all_positive_degrees(B)
        if converse and not (facts["left_a"] < 0 and facts["right_a"] < 0):
            raise ConsistencyError(
                f"{product.label} violates the converse direction", check="goto_watanabe"
            )

    log.debug(f"Goto-Watanabe on {product.label}: forward={forward}, converse={converse}")
    return {
        **{k: str(v) if isinstance(v, Fraction) else v for k, v in facts.items()},
        "forward_hypotheses": forward,
        "converse_hypotheses": converse,
        "agreement": True,
    }


def _symbolic_power_object(R: SectionRing, r: int, shift: Fraction, scale: int) -> GradedObject:
    """omega_R^(r)(r k) at the given scale."""
    module = family_object(twisted_family(R, canonical_class(R), r), f"omega^({r})")
    return twist(regrade(module, scale), int(scale * r * shift))


def segre_cover_compat(
    A: SectionRing, B: SectionRing, bound: Optional[int] = None, window: Optional[Window] = None
) -> dict[str, Any]:
    """Q-Gorenstein property and canonical cover of A # B.

    With orders m, n and generators u, v of omega_A^(m), omega_B^(n), the product
    is Q-Gorenstein when n deg u = m deg v. For coprime m, n the canonical cover
    of A # B is built summandwise as sum_{r < mn} omega_A^(r)(rk) # omega_B^(r)(rk)
    and compared with the Segre product of the two covers on the window.

    Raises:
        IncompatibleTwistsError: If n deg u != m deg v.
        ConsistencyError: If the two constructions of the cover differ.
    """
    order_a, order_b = canonical_order(A, bound), canonical_order(B, bound)
    m, n = order_a.order, order_b.order
    deg_u, deg_v = -order_a.twist, -order_b.twist
    if n * deg_u != m * deg_v:
        raise IncompatibleTwistsError(
            f"{n}*deg u = {n * deg_u} differs from {m}*deg v = {m * deg_v}",
            details={"m": m, "n": n, "deg_u": deg_u, "deg_v": deg_v},
        )
    report: dict[str, Any] = {
        "order_a": m,
        "order_b": n,
        "deg_u": deg_u,
        "deg_v": deg_v,
        "q_gorenstein": True,
        "coprime": gcd(m, n) == 1,
    }
    if gcd(m, n) != 1:
        log.warning(f"Orders {m} and {n} are not coprime; cover identification skipped")
        return {**report, "order": None, "identified": None}

    shift = Fraction(deg_u, m)
    scale = shift.denominator
    direct = direct_sum(
        [
            segre(
                _symbolic_power_object(A, r, shift, scale),
                _symbolic_power_object(B, r, shift, scale),
            )
            for r in range(m * n)
        ],
        label=f"cover of {A.name} # {B.name}",
    )
    product = segre(
        export_graded_object(canonical_cover(A, bound), scale),
        export_graded_object(canonical_cover(B, bound), scale),
    )
    lo, hi = window or get_settings().scan.window
    pairs = [(direct.hilbert, product.hilbert), *zip(direct.lc, product.lc)]
    for q in range(lo * scale, hi * scale + 1):
        for left, right in pairs:
            if left(q) != right(q):
                raise ConsistencyError(
                    f"Cover of the Segre product differs from the product of covers at {q}",
                    check="segre_cover",
                    details={"degree": q, "left": left(q), "right": right(q)},
                )
    return {
        **report,
        "order": m * n,
        "identified": True,
        "cover_scale": scale,
        "cover_dim": product.krull_dim,
        "cover_depth": depth(product),
        "cover_a_invariant": str(a_inv(product)),
    }


def ascent_failure_report(
    R: SectionRing, bound: Optional[int] = None, r: int = 1
) -> dict[str, Any]:
    """For R with rational singularities that is not log terminal, say which ascent fails.

    Either the canonical cover is not CM, or a(R~) >= 0 and the cover's Segre
    product with K[Y0..Yr] is not CM. One of them must hold.

    Raises:
        ConsistencyError: If neither alternative holds.
    """
    K_degree = degree(canonical_class(R))
    verdict = rational_sing_certificate(R).verdict
    base = {"ring": R.name, "canonical_degree": str(K_degree), "rational": verdict.value}
    if K_degree < 0 or verdict != RationalityVerdict.RATIONAL_CONDITIONAL:
        return {**base, "applicable": False}

    C = canonical_cover(R, bound)
    cover = export_graded_object(C, C.shift.denominator)
    a = cover_a_invariant(C)
    cover_cm = is_cm(cover)
    product_cm = is_cm(segre(cover, polynomial_ring_object(r)))
    alternatives = {"cover_not_cm": not cover_cm, "cover_a_nonnegative": a >= 0}
    if not any(alternatives.values()):
        raise ConsistencyError(
            f"The canonical cover of {R.name} is CM with negative a-invariant",
            check="ascent_failure",
        )
    return {
        **base,
        "applicable": True,
        "cover_depth": depth(cover),
        "cover_a_invariant": str(a),
        "segre_with_polynomial_ring_cm": product_cm,
        **alternatives,
    }
