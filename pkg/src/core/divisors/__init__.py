from src.core.divisors.calculus import (
    canonical_divisor,
    combine,
    component,
    degree,
    floor_divisor,
    frac_part,
    hypersurface,
    is_ample,
    is_effective,
    is_integral,
    make_divisor,
    rat,
    scale,
    zero_divisor,
)
from src.core.divisors.models import CANONICAL_HYPERPLANE, Component, ComponentKind, QDivisor
from src.core.divisors.serialization import divisor_from_json, divisor_to_json

__all__ = [
    "CANONICAL_HYPERPLANE",
    "Component",
    "ComponentKind",
    "QDivisor",
    "canonical_divisor",
    "combine",
    "component",
    "degree",
    "divisor_from_json",
    "divisor_to_json",
    "floor_divisor",
    "frac_part",
    "hypersurface",
    "is_ample",
    "is_effective",
    "is_integral",
    "make_divisor",
    "rat",
    "scale",
    "zero_divisor",
]
