from fractions import Fraction

import pytest

from src.core.cohomology.families import LinearFamily
from src.core.divisors.calculus import zero_divisor
from src.core.graded import (
    a_inv,
    canonical_dim,
    depth,
    direct_sum,
    family_object,
    has_all_positive_degrees,
    is_cm,
    regrade,
    twist,
)
from src.core.graded.certified import CertifiedDimFn
from src.core.graded.objects import GradedObject
from src.core.utils.exceptions import GradingError, UndecidedError


@pytest.fixture
def object_a(three_points_divisor) -> GradedObject:
    return family_object(LinearFamily(zero_divisor(1), three_points_divisor), "A")


def test_family_object_matches_ring_data(object_a):
    assert object_a.krull_dim == 2
    assert [object_a.hilbert(n) for n in range(-2, 7)] == [0, 0, 1, 1, 1, 4, 4, 4, 7]
    assert object_a.lc[2](-1) == 2
    assert object_a.lc[2](0) == 0
    object_a.verify()


def test_family_object_invariants(object_a):
    assert depth(object_a) == 2
    assert is_cm(object_a)
    assert a_inv(object_a) == -1
    assert canonical_dim(object_a, 1) == 2
    assert has_all_positive_degrees(object_a)


def test_regrade_scales_a_invariant(object_a):
    scaled = regrade(object_a, 3)
    assert scaled.scale == 3
    assert [scaled.hilbert(q) for q in range(10)] == [1, 0, 0, 1, 0, 0, 1, 0, 0, 4]
    assert a_inv(scaled) == -1
    assert regrade(object_a, 1) is object_a


def test_regrade_rejects_non_multiples(object_a):
    tripled = regrade(object_a, 3)
    with pytest.raises(GradingError):
        regrade(tripled, 4)
    with pytest.raises(GradingError):
        regrade(object_a, 0)


def test_positive_degrees_survive_regrading(object_a):
    regraded = regrade(object_a, 2)
    assert regraded.hilbert.positive_on_multiples is not None
    assert has_all_positive_degrees(regraded)
    assert has_all_positive_degrees(twist(regraded, 2))


def test_positive_degrees_without_certificate():
    def bare(fn):
        return GradedObject(krull_dim=0, hilbert=CertifiedDimFn(fn), lc=(CertifiedDimFn.zero(),))

    with pytest.raises(UndecidedError):
        has_all_positive_degrees(bare(lambda n: 1))
    assert not has_all_positive_degrees(bare(lambda n: 0 if n == 1 else 1))


def test_twist_shifts_every_function(object_a):
    shifted = twist(object_a, 3)
    assert shifted.hilbert(0) == object_a.hilbert(3)
    assert a_inv(shifted) == -4
    assert twist(object_a, 0) is object_a


def test_direct_sum_uses_common_scale(object_a):
    total = direct_sum([object_a, twist(regrade(object_a, 2), 1)], label="A+A(1/2)")
    assert total.scale == 2
    assert [total.hilbert(q) for q in range(7)] == [1, 1, 1, 1, 1, 4, 4]
    assert a_inv(total) == -1
    assert is_cm(total)


def test_direct_sum_rejects_mixed_dimensions(object_a):
    line = GradedObject(
        krull_dim=1,
        hilbert=CertifiedDimFn.zero(),
        lc=(CertifiedDimFn.zero(), CertifiedDimFn.zero()),
    )
    with pytest.raises(GradingError, match="different Krull dimensions"):
        direct_sum([object_a, line])
    with pytest.raises(GradingError):
        direct_sum([])


def test_lc_length_is_validated():
    with pytest.raises(ValueError):
        GradedObject(krull_dim=2, hilbert=CertifiedDimFn.zero(), lc=(CertifiedDimFn.zero(),))


def test_local_cohomology_above_dimension_is_zero(object_a):
    assert object_a.local_cohomology(5).is_identically_zero()
