import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from src.core.cover import canonical_cover, export_graded_object
from src.core.graded import a_inv, depth, is_cm
from src.core.graded.certified import CertifiedDimFn
from src.core.graded.objects import GradedObject
from src.core.segre import (
    kunneth_breakdown,
    kunneth_terms,
    polynomial_ring_object,
    segre,
    to_graded_object,
)
from src.core.utils.exceptions import GradingError


def cover_object(R) -> GradedObject:
    C = canonical_cover(R)
    return export_graded_object(C, C.shift.denominator)


def test_polynomial_rings():
    P = polynomial_ring_object(1)
    product = segre(P, polynomial_ring_object(1))
    assert product.krull_dim == 3
    assert [product.hilbert(n) for n in range(4)] == [1, 4, 9, 16]
    assert depth(product) == 3
    assert is_cm(product)
    assert a_inv(product) == -2
    assert product.assumptions["kunneth_hypotheses"] is True


def test_kunneth_terms_are_named():
    P = polynomial_ring_object(1)
    names = [name for name, _ in kunneth_terms(P, P, 2)]
    assert names[0].endswith("# H^2(K[Y0..Y1])")
    assert "H^1(K[Y0..Y1]) # H^2(K[Y0..Y1])" in names


def test_segre_of_a_and_b_is_cm(ring_a, ring_b):
    product = segre(to_graded_object(ring_a), to_graded_object(ring_b))
    assert product.krull_dim == 3
    assert is_cm(product)
    assert a_inv(product) < 0


def test_segre_of_covers_has_depth_two(ring_a, ring_b):
    product = segre(cover_object(ring_a), cover_object(ring_b))
    assert product.krull_dim == 3
    assert depth(product) == 2
    assert product.lc[2](0) == 2
    assert not is_cm(product)


def test_segre_with_griffith_cover_is_not_cm(ring_a, griffith_ring):
    S = cover_object(griffith_ring(4))
    assert is_cm(S)
    assert a_inv(S) == 0
    product = segre(to_graded_object(ring_a), S)
    assert product.krull_dim == 4
    assert depth(product) == 3


def test_griffith_ring_times_polynomial_ring_is_cm(griffith_ring):
    product = segre(to_graded_object(griffith_ring(5)), polynomial_ring_object(1))
    assert product.krull_dim == 5
    assert is_cm(product)


def test_segre_regrades_to_common_scale(half_three_points, ring_a):
    H = export_graded_object(canonical_cover(half_three_points))
    product = segre(H, to_graded_object(ring_a))
    assert product.scale == 3
    assert product.hilbert(1) == 0
    assert product.hilbert(3) == H.hilbert(3) * 1


def test_segre_rejects_zero_dimensional_factor():
    point = GradedObject(krull_dim=0, hilbert=CertifiedDimFn.zero(), lc=(CertifiedDimFn.zero(),))
    with pytest.raises(GradingError, match="positive dimension"):
        segre(point, polynomial_ring_object(1))


def test_kunneth_breakdown(ring_a, ring_b):
    breakdown = kunneth_breakdown(cover_object(ring_a), cover_object(ring_b), (-2, 2))
    assert [entry["k"] for entry in breakdown] == [0, 1, 2, 3]
    k2 = {term["term"]: term for term in breakdown[2]["terms"]}
    nonzero = [name for name, term in k2.items() if term["identically_zero"] is False]
    assert len(nonzero) == 2
    assert all(0 in k2[name]["nonzero_degrees"] for name in nonzero)


@settings(
    max_examples=50, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture]
)
@given(n=st.integers(min_value=-10, max_value=30))
def test_hilbert_is_multiplicative(ring_a, ring_b, n):
    A, B = to_graded_object(ring_a), to_graded_object(ring_b)
    assert segre(A, B).hilbert(n) == A.hilbert(n) * B.hilbert(n)
