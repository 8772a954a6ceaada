"""
Pydantic models for declarative scenarios.

A scenario names a construction (rings, covers, Segre products, cover
compatibility checks) and a list of expectations about quantities the engine
computes on its named objects.
"""

from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

# Quantity name -> the kinds of construction entry it applies to.
QUANTITY_TARGETS: dict[str, frozenset[str]] = {
    "hilbert": frozenset({"ring"}),
    "local_coh_dim": frozenset({"ring"}),
    "a_invariant": frozenset({"ring"}),
    "canonical_order.order": frozenset({"ring"}),
    "canonical_order.twist": frozenset({"ring"}),
    "f_regular_test": frozenset({"ring"}),
    "rational_verdict": frozenset({"ring", "cover"}),
    "degree_canonical_class": frozenset({"ring"}),
    "generator_counts": frozenset({"ring"}),
    "cover.order": frozenset({"cover"}),
    "cover.twist": frozenset({"cover"}),
    "cover.a_invariant": frozenset({"cover"}),
    "cover.quasi_gorenstein": frozenset({"cover"}),
    "cover.hilbert": frozenset({"cover"}),
    "dim": frozenset({"ring", "cover", "segre"}),
    "depth": frozenset({"ring", "cover", "segre"}),
    "is_cm": frozenset({"ring", "cover", "segre"}),
    "a_inv": frozenset({"ring", "cover", "segre"}),
    "lc_nonzero_at": frozenset({"ring", "cover", "segre"}),
    "goto_watanabe.agreement": frozenset({"segre"}),
    "compat.order": frozenset({"compat"}),
    "compat.identified": frozenset({"compat"}),
    "ascent_failure.applicable": frozenset({"ring"}),
    "ascent_failure.cover_not_cm": frozenset({"ring"}),
    "ascent_failure.cover_a_nonnegative": frozenset({"ring"}),
    "ascent_failure.segre_cm": frozenset({"ring"}),
}


class Provenance(str, Enum):
    """Where an expected value comes from."""

    PAPER = "PAPER"
    TRIVIAL = "TRIVIAL"
    DERIVED = "DERIVED"


class Relation(str, Enum):
    EQ = "eq"
    NE = "ne"
    LT = "lt"
    LE = "le"
    GT = "gt"
    GE = "ge"


class Expectation(BaseModel):
    """
    One checked statement: `quantity(target, **args) <relation> expected`.

    Attributes:
        quantity: A registered quantity name.
        target: Name of an object of the construction.
        args: Quantity arguments such as a degree.
        relation: Comparison between actual and expected values.
        expected: Exact expected value; fractions as "p/q" strings.
        provenance: PAPER, TRIVIAL or DERIVED.
        note: Free-form source note.
    """

    model_config = ConfigDict(frozen=True)

    quantity: str = Field(..., description="Registered quantity name")
    target: str = Field(..., description="Construction entry the quantity is computed on")
    args: dict[str, Any] = Field(default_factory=dict, description="Quantity arguments")
    relation: Relation = Field(Relation.EQ, description="Comparison")
    expected: Any = Field(..., description="Exact expected value")
    provenance: Provenance = Field(Provenance.DERIVED, description="Source of the value")
    note: Optional[str] = Field(None, description="Source note")

    @model_validator(mode="after")
    def validate_quantity(self) -> "Expectation":
        if self.quantity not in QUANTITY_TARGETS:
            raise ValueError(f"unknown quantity '{self.quantity}'")
        return self


class RingSpec(BaseModel):
    """A section ring given by a divisor JSON, or a polynomial ring K[Y0..Yr]."""

    divisor: Optional[dict[str, Any]] = Field(None, description="Divisor JSON")
    polynomial_ring: Optional[int] = Field(None, ge=1, description="r for K[Y0..Yr]")
    label: Optional[str] = None

    @model_validator(mode="after")
    def validate_source(self) -> "RingSpec":
        if (self.divisor is None) == (self.polynomial_ring is None):
            raise ValueError("give exactly one of 'divisor' and 'polynomial_ring'")
        return self


class CoverSpec(BaseModel):
    """The cyclic cover of a ring; the canonical cover when no class is given."""

    model_config = ConfigDict(populate_by_name=True)

    ring: str
    class_divisor: Optional[dict[str, Any]] = Field(None, alias="class")


class PairSpec(BaseModel):
    left: str
    right: str


class Construction(BaseModel):
    """Named objects of a scenario; names are shared across all sections."""

    rings: dict[str, RingSpec] = Field(default_factory=dict)
    covers: dict[str, CoverSpec] = Field(default_factory=dict)
    segre: dict[str, PairSpec] = Field(default_factory=dict)
    compat: dict[str, PairSpec] = Field(default_factory=dict)

    @model_validator(mode="after")
    def validate_references(self) -> "Construction":
        kinds = self.kinds()
        total = len(self.rings) + len(self.covers) + len(self.segre) + len(self.compat)
        if len(kinds) != total:
            raise ValueError("object names must be unique across the construction")
        for name, cover in self.covers.items():
            if cover.ring not in self.rings or self.rings[cover.ring].divisor is None:
                raise ValueError(f"cover '{name}' needs a section ring, got '{cover.ring}'")
        for name, pair in self.segre.items():
            for side in (pair.left, pair.right):
                if kinds.get(side) not in {"ring", "cover", "segre"}:
                    raise ValueError(f"segre product '{name}' references unknown '{side}'")
        for name, pair in self.compat.items():
            for side in (pair.left, pair.right):
                if side not in self.rings or self.rings[side].divisor is None:
                    raise ValueError(f"compat check '{name}' needs section rings, got '{side}'")
        return self

    def kinds(self) -> dict[str, str]:
        """Object name -> kind."""
        kinds: dict[str, str] = {}
        for kind, entries in (
            ("ring", self.rings),
            ("cover", self.covers),
            ("segre", self.segre),
            ("compat", self.compat),
        ):
            kinds.update({name: kind for name in entries})
        return kinds


class Scenario(BaseModel):
    """
    A named construction with expectations.

    Attributes:
        name: Identifier.
        description: One-line summary.
        category: Grouping used by `scenarios list`.
        construction: The named objects.
        expectations: Checked statements about them.
        window: Optional default degree window for window-scoped checks.
        bound: Optional torsion search bound.
    """

    name: str = Field(..., min_length=1)
    description: str = ""
    category: str = "custom"
    construction: Construction = Field(default_factory=Construction)
    expectations: list[Expectation] = Field(default_factory=list)
    window: Optional[tuple[int, int]] = None
    bound: Optional[int] = Field(None, ge=1)

    @model_validator(mode="after")
    def validate_expectations(self) -> "Scenario":
        kinds = self.construction.kinds()
        for expectation in self.expectations:
            kind = kinds.get(expectation.target)
            if kind is None:
                raise ValueError(f"expectation targets unknown object '{expectation.target}'")
            if kind not in QUANTITY_TARGETS[expectation.quantity]:
                raise ValueError(
                    f"quantity '{expectation.quantity}' does not apply to {kind} "
                    f"'{expectation.target}'"
                )
        if self.window is not None and self.window[0] > self.window[1]:
            raise ValueError("window must be LO <= HI")
        return self


class ExpectationStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    UNDECIDED = "undecided"
    ERROR = "error"


class ExpectationResult(BaseModel):
    expectation: Expectation
    status: ExpectationStatus
    actual: Any = None
    message: Optional[str] = None


class ScenarioReport(BaseModel):
    """Outcome of a scenario run."""

    scenario: str
    description: str = ""
    window: tuple[int, int]
    results: list[ExpectationResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status == ExpectationStatus.PASSED for r in self.results)

    def counts(self) -> dict[str, int]:
        return {
            status.value: sum(r.status == status for r in self.results)
            for status in ExpectationStatus
        }


class ScenarioMetadata(BaseModel):
    """
    Metadata of a built-in scenario builder.

    Attributes:
        name: Unique scenario family name, e.g. "theorem-6.1".
        description: What the scenario reproduces.
        category: Grouping such as "examples" or "theorems".
        parameters: JSON schema of the builder's parameters.
    """

    name: str = Field(..., description="Unique scenario name")
    description: str = Field(..., description="What the scenario reproduces")
    category: str = Field("general", description="Scenario category")
    parameters: dict[str, Any] = Field(default_factory=dict, description="Parameter schema")
