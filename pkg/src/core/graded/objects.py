"""
Graded objects: Hilbert and local cohomology data of graded rings and modules.

A GradedObject carries no module structure, only certified dimension
functions. Index Q of every function means degree Q/scale, so Q-graded
covers are represented exactly after multiplying all weights by `scale`.
"""

from math import lcm
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.cohomology.families import LinearFamily
from src.core.graded.certified import CertifiedDimFn, certified_sum
from src.core.utils.exceptions import GradingError, IndexOutOfRangeError
from src.core.utils.logging import get_logger_with_context

log = get_logger_with_context(module="graded")


class GradedObject(BaseModel):
    """
    Dimension data of a graded ring or module over a normal N-graded ring.

    Attributes:
        krull_dim: Krull dimension r.
        hilbert: n -> dim [M]_n.
        lc: lc[k](n) = dim [H^k_m(M)]_n for k = 0..r.
        scale: Index Q stands for degree Q/scale.
        label: Display name.
        assumptions: Caller-asserted hypotheses (normality, reflexivity, ...).
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    krull_dim: int = Field(..., ge=0, description="Krull dimension")
    hilbert: CertifiedDimFn = Field(..., description="Hilbert function")
    lc: tuple[CertifiedDimFn, ...] = Field(..., description="Local cohomology dimensions")
    scale: int = Field(1, ge=1, description="Grading scale")
    label: str = Field("", description="Display name")
    assumptions: dict[str, bool] = Field(default_factory=dict, description="Asserted hypotheses")

    @model_validator(mode="after")
    def validate_lc(self) -> "GradedObject":
        if len(self.lc) != self.krull_dim + 1:
            raise ValueError(f"expected {self.krull_dim + 1} local cohomology functions")
        return self

    def local_cohomology(self, k: int) -> CertifiedDimFn:
        """lc[k], identically zero above the Krull dimension."""
        if k < 0:
            raise IndexOutOfRangeError(k, 0, None, what="local cohomology index")
        return self.lc[k] if k <= self.krull_dim else CertifiedDimFn.zero()

    def verify(self, samples: Optional[int] = None) -> None:
        """Spot-check every certificate of every function."""
        self.hilbert.verify(samples)
        for fn in self.lc:
            fn.verify(samples)


def family_object(
    family: LinearFamily, label: str, assumptions: Optional[dict[str, bool]] = None
) -> GradedObject:
    """The module n -> H^0(P^d, O([base + n*step])) over R(P^d, step).

    Its local cohomology is [H^i_m]_n = h^{i-1}(O([base + n*step])) for i >= 2
    and vanishes for i <= 1 (rank one reflexive, so depth >= 2).
    """
    d = family.ambient_dim
    hilbert = CertifiedDimFn(
        lambda n: family.h(0, n),
        zero_below=family.h0_zero_below(),
        positive_above=family.h0_positive_from(),
        label=f"dim {label}",
    )
    top = CertifiedDimFn(
        lambda n: family.h(d, n),
        zero_above=family.top_zero_above(),
        positive_below=family.top_positive_through(),
        label=f"H^{d + 1} {label}",
    )
    lc = tuple(CertifiedDimFn.zero(f"H^{k} {label}") for k in range(d + 1)) + (top,)
    return GradedObject(
        krull_dim=d + 1, hilbert=hilbert, lc=lc, label=label, assumptions=assumptions or {}
    )


def regrade(obj: GradedObject, scale: int) -> GradedObject:
    """Re-index `obj` at a multiple of its scale, inserting zeros between multiples.

    Raises:
        GradingError: If `scale` is not a positive multiple of obj.scale.
    """
    if scale < 1 or scale % obj.scale != 0:
        raise GradingError(
            f"Cannot regrade from scale {obj.scale} to {scale}",
            details={"from": obj.scale, "to": scale},
        )
    factor = scale // obj.scale
    if factor == 1:
        return obj
    log.debug(f"Regrading {obj.label} by {factor}; positivity kept on multiples only")
    return obj.model_copy(
        update={
            "hilbert": obj.hilbert.dilated(factor),
            "lc": tuple(fn.dilated(factor) for fn in obj.lc),
            "scale": scale,
        }
    )


def twist(obj: GradedObject, offset: int) -> GradedObject:
    """M(offset): [M(offset)]_Q = [M]_{Q + offset}, in scaled units."""
    if offset == 0:
        return obj
    return obj.model_copy(
        update={
            "hilbert": obj.hilbert.shifted(offset),
            "lc": tuple(fn.shifted(offset) for fn in obj.lc),
            "label": f"{obj.label}({offset:+d})",
        }
    )


def direct_sum(objects: list[GradedObject], label: str = "") -> GradedObject:
    """Summandwise sum of objects of equal dimension, regraded to a common scale."""
    if not objects:
        raise GradingError("Direct sum of no objects")
    dims = {obj.krull_dim for obj in objects}
    if len(dims) != 1:
        raise GradingError(
            "Summands have different Krull dimensions", details={"dims": sorted(dims)}
        )
    scale = lcm(*(obj.scale for obj in objects))
    parts = [regrade(obj, scale) for obj in objects]
    krull_dim = dims.pop()
    label = label or " + ".join(obj.label for obj in objects)
    return GradedObject(
        krull_dim=krull_dim,
        hilbert=certified_sum([p.hilbert for p in parts], label=f"dim {label}"),
        lc=tuple(
            certified_sum([p.lc[k] for p in parts], label=f"H^{k} {label}")
            for k in range(krull_dim + 1)
        ),
        scale=scale,
        label=label,
        assumptions={k: v for obj in objects for k, v in obj.assumptions.items()},
    )
