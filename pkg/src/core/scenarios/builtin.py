"""
Built-in scenarios reproducing the worked examples and the depth-two construction.

Rings:
    example-3.5     D = (1/r) V(x0^n + ... + x_{m-1}^n) on P^{m-1}.
    example-4.5     A = R(P^1, 1/3 (V(y0) + V(z0) + V(y0 + z0))).
    griffith        Example 3.5 with r = n = d, m = d - 1, and its canonical cover S.
    theorem-6.1     A # B with B = R(P^{d-2}, 1/2 V(f)), deg f = 2(d - 1); the
                    canonical cover of A # B has depth 2.
"""

from typing import Any

from src.core.scenarios.base import scenario
from src.core.scenarios.models import Construction, Expectation, Provenance, Relation, Scenario
from src.core.utils.config import get_settings
from src.core.utils.exceptions import ScenarioError

PAPER, TRIVIAL, DERIVED = Provenance.PAPER, Provenance.TRIVIAL, Provenance.DERIVED


def _x(i: int) -> str:
    return f"{get_settings().sections.variable_prefix}{i}"


def power_sum_divisor(ambient_dim: int, nvars: int, power: int, coeff: str) -> dict[str, Any]:
    """coeff * V(x0^power + ... + x_{nvars-1}^power) on P^ambient_dim, as divisor JSON."""
    polynomial = " + ".join(f"{_x(i)}**{power}" for i in range(nvars))
    return {
        "ambient_dim": ambient_dim,
        "terms": [{"name": "F", "polynomial": polynomial, "coeff": coeff}],
    }


def three_points_divisor() -> dict[str, Any]:
    """1/3 (V(y0) + V(z0) + V(y0 + z0)) on P^1 with y0 = x0, z0 = x1."""
    y, z = _x(0), _x(1)
    return {
        "ambient_dim": 1,
        "terms": [
            {"name": "y0", "polynomial": y, "coeff": "1/3"},
            {"name": "z0", "polynomial": z, "coeff": "1/3"},
            {"name": "y0+z0", "polynomial": f"{y} + {z}", "coeff": "1/3"},
        ],
    }


def _expect(
    quantity: str,
    target: str,
    expected: Any,
    provenance: Provenance,
    relation: Relation = Relation.EQ,
    note: str | None = None,
    **args: Any,
) -> Expectation:
    return Expectation(
        quantity=quantity,
        target=target,
        args=args,
        relation=relation,
        expected=expected,
        provenance=provenance,
        note=note,
    )


@scenario(
    name="example-3.5",
    description="R(P^{m-1}, (1/r) V(f)), deg f = n: rational, and not F-regular type "
    "exactly when (r-1)n - mr >= 0",
    category="examples",
)
def example_3_5(r: int = 2, n: int = 6, m: int = 3) -> Scenario:
    if r < 2 or n < 1 or m < 3:
        raise ScenarioError("example-3.5 needs r >= 2, n >= 1, m >= 3", scenario="example-3.5")
    critical = (r - 1) * n - m * r
    return Scenario(
        name=f"example-3.5-r{r}-n{n}-m{m}",
        description=f"Example 3.5 with r={r}, n={n}, m={m}",
        category="examples",
        construction=Construction(
            rings={"R": {"divisor": power_sum_divisor(m - 1, m, n, f"1/{r}")}}
        ),
        expectations=[
            _expect("rational_verdict", "R", "RATIONAL_CONDITIONAL", PAPER),
            _expect("is_cm", "R", True, DERIVED),
            _expect("a_invariant", "R", 0, PAPER, Relation.LT),
            _expect("f_regular_test", "R", critical < 0, PAPER),
            _expect("degree_canonical_class", "R", f"{critical}/{r}", DERIVED),
        ],
    )


@scenario(
    name="example-4.5",
    description="A = R(P^1, 1/3 of three points) and its canonical cover",
    category="examples",
)
def example_4_5() -> Scenario:
    return Scenario(
        name="example-4.5",
        description="Canonical order 3, a(A~) = 0, quasi-Gorenstein cover",
        category="examples",
        window=(-12, 12),
        construction=Construction(
            rings={"A": {"divisor": three_points_divisor(), "label": "A"}},
            covers={"At": {"ring": "A"}},
        ),
        expectations=[
            _expect("canonical_order.order", "A", 3, PAPER),
            _expect("canonical_order.twist", "A", 0, PAPER),
            _expect("a_invariant", "A", -1, DERIVED),
            _expect("cover.order", "At", 3, PAPER),
            _expect("cover.a_invariant", "At", 0, PAPER),
            _expect("cover.quasi_gorenstein", "At", True, PAPER),
            _expect("cover.hilbert", "At", 1, TRIVIAL, Q=0),
            _expect("cover.hilbert", "At", 3, DERIVED, Q=3),
            _expect("cover.hilbert", "At", 6, DERIVED, Q=6),
            _expect("cover.hilbert", "At", 9, DERIVED, Q=9),
            _expect("is_cm", "At", True, DERIVED),
            _expect("generator_counts", "A", {1: 1, 2: 0, 3: 3}, DERIVED, N=3),
        ],
    )


@scenario(
    name="griffith",
    description="Griffith's R on P^{d-2} with cover S: R # A is CM, S # A is not",
    category="examples",
)
def griffith(d: int = 5, r: int = 1) -> Scenario:
    if d < 4 or r < 1:
        raise ScenarioError("griffith needs d >= 4 and r >= 1", scenario="griffith")
    return Scenario(
        name=f"griffith-d{d}",
        description=f"Griffith's example with d={d} and A = K[Y0..Y{r}]",
        category="examples",
        construction=Construction(
            rings={
                "R": {"divisor": power_sum_divisor(d - 2, d - 1, d, f"1/{d}"), "label": "R"},
                "A": {"polynomial_ring": r},
            },
            covers={"S": {"ring": "R"}},
            segre={"R#A": {"left": "R", "right": "A"}, "S#A": {"left": "S", "right": "A"}},
        ),
        expectations=[
            _expect("a_invariant", "R", 0, PAPER, Relation.LT),
            _expect("cover.a_invariant", "S", 0, PAPER),
            _expect("canonical_order.order", "R", d, PAPER),
            _expect("canonical_order.twist", "R", 0, PAPER),
            _expect("f_regular_test", "R", False, PAPER),
            _expect("degree_canonical_class", "R", 0, PAPER),
            _expect("cover.quasi_gorenstein", "S", True, PAPER),
            _expect("is_cm", "R#A", True, PAPER),
            _expect("is_cm", "S#A", False, PAPER),
            _expect("goto_watanabe.agreement", "R#A", True, DERIVED),
            _expect("ascent_failure.applicable", "R", True, PAPER),
            _expect("ascent_failure.cover_a_nonnegative", "R", True, PAPER, r=r),
            _expect("ascent_failure.cover_not_cm", "R", False, DERIVED, r=r),
            _expect("ascent_failure.segre_cm", "R", False, PAPER, r=r),
        ],
    )


@scenario(
    name="theorem-6.1",
    description="A normal graded ring of dimension d with rational singularities "
    "whose canonical cover has depth 2",
    category="theorems",
)
def theorem_6_1(d: int = 3) -> Scenario:
    if d < 3:
        raise ScenarioError("theorem-6.1 needs d >= 3", scenario="theorem-6.1")
    B = power_sum_divisor(d - 2, d - 1, 2 * (d - 1), "1/2")
    expectations = [
        _expect("canonical_order.order", "A", 3, PAPER),
        _expect("canonical_order.twist", "A", 0, PAPER),
        _expect("canonical_order.order", "B", 2, PAPER),
        _expect("canonical_order.twist", "B", 0, PAPER),
        _expect("cover.a_invariant", "At", 0, PAPER),
        _expect("cover.a_invariant", "Bt", 0, PAPER),
        _expect("f_regular_test", "B", False, PAPER),
        _expect("degree_canonical_class", "B", 0, PAPER),
        _expect("dim", "A#B", d, PAPER),
        _expect("is_cm", "A#B", True, PAPER),
        _expect("a_inv", "A#B", 0, PAPER, Relation.LT),
        _expect("compat.order", "cover", 6, PAPER),
        _expect("compat.identified", "cover", True, PAPER),
        _expect("depth", "At#Bt", 2, PAPER),
        _expect("lc_nonzero_at", "At#Bt", True, PAPER, k=2, degree=0),
        _expect("is_cm", "At#Bt", False, PAPER),
    ]
    return Scenario(
        name=f"theorem-6.1-d{d}",
        description=f"Depth-2 canonical cover in dimension {d}",
        category="theorems",
        window=(-8, 8),
        construction=Construction(
            rings={
                "A": {"divisor": three_points_divisor(), "label": "A"},
                "B": {"divisor": B, "label": "B"},
            },
            covers={"At": {"ring": "A"}, "Bt": {"ring": "B"}},
            segre={"A#B": {"left": "A", "right": "B"}, "At#Bt": {"left": "At", "right": "Bt"}},
            compat={"cover": {"left": "A", "right": "B"}},
        ),
        expectations=expectations,
    )


@scenario(
    name="goto-watanabe",
    description="Spot checks of the Cohen-Macaulay criterion for Segre products",
    category="theorems",
)
def goto_watanabe() -> Scenario:
    return Scenario(
        name="goto-watanabe",
        description="K[x,y] # K[x,y], A # K[x,y] and A # S with Griffith's S (d = 4)",
        category="theorems",
        construction=Construction(
            rings={
                "P": {"polynomial_ring": 1},
                "Q": {"polynomial_ring": 1},
                "A": {"divisor": three_points_divisor(), "label": "A"},
                "R": {"divisor": power_sum_divisor(2, 3, 4, "1/4"), "label": "R"},
            },
            covers={"S": {"ring": "R"}},
            segre={
                "P#Q": {"left": "P", "right": "Q"},
                "A#P": {"left": "A", "right": "P"},
                "A#S": {"left": "A", "right": "S"},
            },
        ),
        expectations=[
            _expect("dim", "P#Q", 3, TRIVIAL),
            _expect("is_cm", "P#Q", True, DERIVED),
            _expect("a_inv", "P#Q", -2, DERIVED),
            _expect("goto_watanabe.agreement", "P#Q", True, PAPER),
            _expect("is_cm", "A#P", True, PAPER),
            _expect("goto_watanabe.agreement", "A#P", True, PAPER),
            _expect("a_inv", "S", 0, PAPER),
            _expect("is_cm", "A#S", False, PAPER),
            _expect("goto_watanabe.agreement", "A#S", True, PAPER),
        ],
    )
