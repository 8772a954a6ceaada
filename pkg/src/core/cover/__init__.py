from src.core.cover.covers import (
    canonical_cover,
    cover_a_invariant,
    cover_hilbert,
    cover_local_coh,
    cover_rational_certificate,
    cover_report,
    cover_summand_degree,
    cyclic_cover,
    export_graded_object,
    quasi_gorenstein_check,
)
from src.core.cover.models import CoverDescriptor

__all__ = [
    "CoverDescriptor",
    "canonical_cover",
    "cover_a_invariant",
    "cover_hilbert",
    "cover_local_coh",
    "cover_rational_certificate",
    "cover_report",
    "cover_summand_degree",
    "cyclic_cover",
    "export_graded_object",
    "quasi_gorenstein_check",
]
