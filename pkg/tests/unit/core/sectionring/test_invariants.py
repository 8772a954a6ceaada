from fractions import Fraction

import pytest

from src.core.cohomology.line_bundles import h_q
from src.core.divisors.calculus import degree, scale
from src.core.sectionring.invariants import (
    a_invariant,
    canonical_class,
    canonical_order,
    class_order,
    f_regular_degree_test,
    hilbert,
    local_coh_dim,
    rational_sing_certificate,
    ring_report,
    symbolic_canonical_dim,
)
from src.core.sectionring.models import CanonicalOrderResult, RationalityVerdict, section_ring
from src.core.utils.exceptions import (
    ConfigurationError,
    DivisorError,
    IndexOutOfRangeError,
    NotTorsionError,
)

# --- Hilbert functions and local cohomology ---


def test_hilbert_of_a(ring_a):
    assert [hilbert(ring_a, n) for n in range(7)] == [1, 1, 1, 4, 4, 4, 7]
    assert hilbert(ring_a, -1) == 0


def test_hilbert_of_b(ring_b):
    assert [hilbert(ring_b, n) for n in range(5)] == [1, 1, 5, 5, 9]


def test_polynomial_ring_hilbert(hyperplane_ring):
    P2 = hyperplane_ring(2)
    assert [hilbert(P2, n) for n in range(4)] == [1, 3, 6, 10]
    assert a_invariant(P2).value == -3


def test_local_cohomology(ring_a):
    assert local_coh_dim(ring_a, 0, -1) == 0
    assert local_coh_dim(ring_a, 1, -1) == 0
    assert [local_coh_dim(ring_a, 2, n) for n in (-4, -3, -1, 0)] == [5, 2, 2, 0]
    with pytest.raises(IndexOutOfRangeError):
        local_coh_dim(ring_a, 3, 0)


def test_a_invariant_with_certificate(ring_a, ring_b):
    result = a_invariant(ring_a)
    assert result.value == -1
    assert result.search_start == 0
    assert result.steps == 2
    assert a_invariant(ring_b).value == -1


def test_a_invariant_of_example_3_5(example_3_5_ring):
    assert a_invariant(example_3_5_ring(2, 6, 3)).value == -1
    assert a_invariant(example_3_5_ring(3, 2, 3)).value < 0


# --- Canonical class and its order ---


def test_canonical_class_degree(ring_a, griffith_ring, half_three_points):
    assert degree(canonical_class(ring_a)) == 0
    assert degree(canonical_class(griffith_ring(5))) == 0
    assert degree(canonical_class(half_three_points)) == Fraction(-1, 2)


def test_symbolic_canonical_powers(ring_a):
    # omega^(3) = A at dimension level
    assert all(symbolic_canonical_dim(ring_a, 3, n) == hilbert(ring_a, n) for n in range(10))
    assert symbolic_canonical_dim(ring_a, 1, 0) == 0
    with pytest.raises(IndexOutOfRangeError):
        symbolic_canonical_dim(ring_a, -1, 0)


@pytest.mark.parametrize("fixture", ["ring_a", "ring_b", "half_three_points"])
def test_order_power_of_canonical_module_is_a_twist(request, fixture):
    R = request.getfixturevalue(fixture)
    result = canonical_order(R)
    for n in range(-8, 12):
        expected = h_q(scale(n + result.twist, R.divisor), 0)
        assert symbolic_canonical_dim(R, result.order, n) == expected, n


def test_twist_shifts_the_order_power(half_three_points):
    assert canonical_order(half_three_points).twist == -1
    values = [symbolic_canonical_dim(half_three_points, 3, n) for n in range(4)]
    assert values == [hilbert(half_three_points, n - 1) for n in range(4)]
    assert values[:2] == [0, 1]


@pytest.mark.parametrize(
    "fixture, args, order, twist",
    [
        ("ring_a", (), 3, 0),
        ("ring_b", (), 2, 0),
        ("half_three_points", (), 3, -1),
        ("griffith_ring", (4,), 4, 0),
        ("griffith_ring", (6,), 6, 0),
        ("theorem_b", (3,), 2, 0),
        ("theorem_b", (5,), 2, 0),
    ],
)
def test_canonical_order(request, fixture, args, order, twist):
    R = request.getfixturevalue(fixture)
    R = R(*args) if args else R
    result = canonical_order(R)
    assert (result.order, result.twist) == (order, twist)
    assert sorted(result.rejected) == list(range(1, order))


def test_order_of_hyperplane_class(hyperplane_ring):
    P2 = hyperplane_ring(2)
    result = class_order(P2, canonical_class(P2))
    assert (result.order, result.twist) == (1, -3)


def test_class_order_rejection_reasons(half_three_points):
    result = canonical_order(half_three_points)
    assert "degree forces" in result.rejected[1]


def test_non_torsion_class(ring_a):
    with pytest.raises(NotTorsionError):
        canonical_order(ring_a, bound=2)
    with pytest.raises(ConfigurationError):
        canonical_order(ring_a, bound=0)


def test_order_certificate_must_be_complete():
    with pytest.raises(ValueError):
        CanonicalOrderResult(order=3, twist=0, rejected={1: "no"})


# --- Rationality and F-regularity ---


@pytest.mark.parametrize(
    "r, n, m, critical",
    [
        (2, 6, 3, Fraction(0)),
        (2, 2, 3, Fraction(-2)),
        (3, 9, 3, Fraction(3)),
        (4, 5, 4, Fraction(-1, 4)),
    ],
)
def test_example_3_5_criterion(example_3_5_ring, r, n, m, critical):
    R = example_3_5_ring(r, n, m)
    assert degree(canonical_class(R)) == critical
    assert f_regular_degree_test(R) is (critical < 0)
    certificate = rational_sing_certificate(R)
    assert certificate.verdict == RationalityVerdict.RATIONAL_CONDITIONAL
    assert certificate.is_cm
    assert certificate.punctured_spectrum_assumed


def test_griffith_is_not_f_regular(griffith_ring):
    assert not f_regular_degree_test(griffith_ring(5))


def test_certificate_records_intermediate_vanishing(theorem_b):
    certificate = rational_sing_certificate(theorem_b(4))
    assert certificate.intermediate_vanishing == (2,)
    assert certificate.divisor_effective


# --- Construction and reports ---


def test_section_ring_needs_ample_divisor(three_points_divisor):
    with pytest.raises(DivisorError, match="Cannot build a section ring"):
        section_ring(scale(-1, three_points_divisor))


def test_ring_report(ring_a):
    report = ring_report(ring_a, window=(-2, 3))
    assert report["ring"] == "A"
    assert report["krull_dim"] == 2
    assert report["hilbert"] == [0, 0, 1, 1, 1, 4]
    assert report["top_local_cohomology"] == [2, 2, 0, 0, 0, 0]
    assert report["a_invariant"]["value"] == -1
    assert report["canonical_class_degree"] == "0"
    assert report["canonical_order"]["order"] == 3
    assert report["f_regular_test"] is False
    assert report["log_terminal"] is False
    assert report["certificate"]["verdict"] == "RATIONAL_CONDITIONAL"


def test_ring_report_embeds_order_errors(ring_a):
    report = ring_report(ring_a, window=(0, 1), bound=2)
    assert report["canonical_order"]["error"]["error_code"] == "NOT_TORSION"
