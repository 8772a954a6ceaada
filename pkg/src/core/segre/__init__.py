from src.core.graded import (
    CertifiedDimFn,
    GradedObject,
    a_inv,
    canonical_dim,
    depth,
    is_cm,
    regrade,
)
from src.core.segre.kunneth import (
    kunneth_breakdown,
    kunneth_terms,
    polynomial_ring_object,
    segre,
    to_graded_object,
)
from src.core.segre.reports import (
    ascent_failure_report,
    goto_watanabe_report,
    segre_cover_compat,
    segre_report,
)

__all__ = [
    "CertifiedDimFn",
    "GradedObject",
    "a_inv",
    "ascent_failure_report",
    "canonical_dim",
    "depth",
    "goto_watanabe_report",
    "is_cm",
    "kunneth_breakdown",
    "kunneth_terms",
    "polynomial_ring_object",
    "regrade",
    "segre",
    "segre_cover_compat",
    "segre_report",
    "to_graded_object",
]
