"""Certified dimension functions and graded objects shared by covers and Segre products."""

from src.core.graded.certified import CertifiedDimFn, certified_sum
from src.core.graded.invariants import (
    a_inv,
    canonical_dim,
    depth,
    has_all_positive_degrees,
    is_cm,
)
from src.core.graded.objects import GradedObject, direct_sum, family_object, regrade, twist

__all__ = [
    "CertifiedDimFn",
    "GradedObject",
    "a_inv",
    "canonical_dim",
    "certified_sum",
    "depth",
    "direct_sum",
    "family_object",
    "has_all_positive_degrees",
    "is_cm",
    "regrade",
    "twist",
]
