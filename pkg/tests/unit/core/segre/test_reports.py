from fractions import Fraction

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from src.core.cover import canonical_cover, export_graded_object
from src.core.divisors.calculus import component, is_ample, make_divisor
from src.core.graded import canonical_dim, has_all_positive_degrees
from src.core.sectionring.models import section_ring
from src.core.segre import (
    ascent_failure_report,
    goto_watanabe_report,
    polynomial_ring_object,
    segre,
    segre_cover_compat,
    segre_report,
    to_graded_object,
)
from src.core.utils.exceptions import IncompatibleTwistsError


def test_goto_watanabe_polynomial_rings():
    P = polynomial_ring_object(1)
    report = goto_watanabe_report(P, P)
    assert report["forward_hypotheses"] is True
    assert report["converse_hypotheses"] is True
    assert report["product_a_invariant"] == "-2"
    assert report["agreement"] is True


def test_goto_watanabe_outside_hypotheses(ring_a, griffith_ring):
    C = canonical_cover(griffith_ring(4))
    S = export_graded_object(C, C.shift.denominator)
    report = goto_watanabe_report(to_graded_object(ring_a), S)
    assert report["forward_hypotheses"] is False
    assert report["product_cm"] is False
    assert report["converse_hypotheses"] is None
    assert report["agreement"] is True


def test_goto_watanabe_on_regraded_cover(half_three_points):
    C = canonical_cover(half_three_points)
    S = export_graded_object(C, C.shift.denominator)
    assert S.scale == 3
    assert has_all_positive_degrees(S)
    report = goto_watanabe_report(S, polynomial_ring_object(1))
    assert report["left_a"] == "-1/3"
    assert report["product_cm"] is True
    assert report["forward_hypotheses"] is True
    assert report["converse_hypotheses"] is True


def test_segre_report(ring_a, ring_b):
    report = segre_report(to_graded_object(ring_a), to_graded_object(ring_b), (0, 3))
    assert report["dim"] == 3
    assert report["is_cm"] is True
    assert report["hilbert"] == [1, 1, 5, 20]
    assert len(report["kunneth_breakdown"]) == 4


def test_cover_compat_for_depth_two_example(ring_a, ring_b):
    report = segre_cover_compat(ring_a, ring_b, window=(-4, 4))
    assert report["order"] == 6
    assert report["coprime"] is True
    assert report["identified"] is True
    assert report["cover_dim"] == 3
    assert report["cover_depth"] == 2
    assert report["cover_a_invariant"] == "0"


def test_cover_compat_skips_non_coprime_orders(ring_b):
    report = segre_cover_compat(ring_b, ring_b)
    assert report["q_gorenstein"] is True
    assert report["order"] is None
    assert report["identified"] is None


def test_cover_compat_rejects_incompatible_twists(ring_a, half_three_points):
    # deg u = 0 for A but 1 for the half-points ring
    with pytest.raises(IncompatibleTwistsError):
        segre_cover_compat(ring_a, half_three_points)


def test_ascent_failure_for_griffith(griffith_ring):
    report = ascent_failure_report(griffith_ring(4))
    assert report["applicable"] is True
    assert report["cover_a_nonnegative"] is True
    assert report["cover_not_cm"] is False
    assert report["segre_with_polynomial_ring_cm"] is False


def test_ascent_failure_not_applicable_when_log_terminal(half_three_points):
    assert ascent_failure_report(half_three_points)["applicable"] is False


# --- Random rings ---


@st.composite
def section_ring_objects(draw):
    d = draw(st.integers(min_value=1, max_value=2))
    count = draw(st.integers(min_value=1, max_value=3))
    terms = [
        (
            component(f"V{i}", draw(st.integers(1, 3))),
            draw(st.fractions(min_value=-1, max_value=3, max_denominator=5)),
        )
        for i in range(count)
    ]
    positive = st.fractions(min_value=Fraction(1, 5), max_value=3, max_denominator=5)
    terms.append((component("L", 1), draw(positive)))
    D = make_divisor(d, terms)
    assume(is_ample(D))
    return to_graded_object(section_ring(D))


graded_factors = st.one_of(
    section_ring_objects(), st.integers(min_value=1, max_value=2).map(polynomial_ring_object)
)


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(left=graded_factors, right=graded_factors)
def test_goto_watanabe_agrees_on_random_rings(left, right):
    report = goto_watanabe_report(left, right)
    assert report["agreement"] is True
    if report["forward_hypotheses"]:
        assert report["product_cm"] is True
        assert Fraction(report["product_a_invariant"]) < 0
    some_a_nonnegative = Fraction(report["left_a"]) >= 0 or Fraction(report["right_a"]) >= 0
    if some_a_nonnegative and has_all_positive_degrees(left) and has_all_positive_degrees(right):
        assert report["product_cm"] is False


@settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(left=graded_factors, right=graded_factors)
def test_low_local_cohomology_vanishes_on_products(left, right):
    assert all(left.lc[k].is_identically_zero() for k in (0, 1))
    assert all(right.lc[k].is_identically_zero() for k in (0, 1))
    product = segre(left, right)
    assert product.lc[0].is_identically_zero()
    assert product.lc[1].is_identically_zero()


@settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(left=graded_factors, right=graded_factors)
def test_canonical_module_of_product(left, right):
    product = segre(left, right)
    for n in range(-12, 13):
        assert canonical_dim(product, n) == canonical_dim(left, n) * canonical_dim(right, n), n
