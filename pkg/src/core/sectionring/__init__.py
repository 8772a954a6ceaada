from src.core.sectionring.invariants import (
    Window,
    a_invariant,
    canonical_class,
    canonical_order,
    class_order,
    f_regular_degree_test,
    hilbert,
    hilbert_family,
    local_coh_dim,
    rational_sing_certificate,
    ring_report,
    symbolic_canonical_dim,
    twisted_family,
)
from src.core.sectionring.models import (
    AInvariantResult,
    CanonicalOrderResult,
    RationalityVerdict,
    RationalSingularityCertificate,
    SectionRing,
    section_ring,
)

__all__ = [
    "AInvariantResult",
    "CanonicalOrderResult",
    "RationalSingularityCertificate",
    "RationalityVerdict",
    "SectionRing",
    "Window",
    "a_invariant",
    "canonical_class",
    "canonical_order",
    "class_order",
    "f_regular_degree_test",
    "hilbert",
    "hilbert_family",
    "local_coh_dim",
    "rational_sing_certificate",
    "ring_report",
    "section_ring",
    "symbolic_canonical_dim",
    "twisted_family",
]
