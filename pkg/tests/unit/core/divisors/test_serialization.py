from fractions import Fraction

import pytest

from src.core.divisors.calculus import canonical_divisor, combine, degree, frac_part
from src.core.divisors.models import CANONICAL_HYPERPLANE, ComponentKind
from src.core.divisors.serialization import divisor_from_json, divisor_to_json
from src.core.utils.exceptions import DivisorError


def test_from_json_reads_degree_off_polynomial():
    D = divisor_from_json(
        {
            "ambient_dim": 1,
            "terms": [{"name": "F", "polynomial": "x0**4 + x1**4", "coeff": "1/2"}],
        }
    )
    (F,) = D.components
    assert F.degree == 4
    assert D.coefficient("F") == Fraction(1, 2)
    assert degree(D) == 2


def test_from_json_accepts_integer_coefficients():
    D = divisor_from_json({"ambient_dim": 2, "terms": [{"name": "L", "degree": 1, "coeff": 3}]})
    assert D.coefficient("L") == 3


def test_from_json_rejects_floats():
    with pytest.raises(DivisorError, match="Malformed divisor JSON"):
        divisor_from_json(
            {"ambient_dim": 1, "terms": [{"name": "p", "degree": 1, "coeff": 0.5}]}
        )


def test_from_json_rejects_bad_input():
    with pytest.raises(DivisorError, match="Malformed"):
        divisor_from_json({"terms": []})
    with pytest.raises(DivisorError, match="Invalid coefficient"):
        divisor_from_json({"ambient_dim": 1, "terms": [{"name": "p", "degree": 1, "coeff": "1/0"}]})
    with pytest.raises(DivisorError, match="needs a degree or a polynomial"):
        divisor_from_json({"ambient_dim": 1, "terms": [{"name": "p", "coeff": "1"}]})


def test_reserved_hyperplane_round_trips(three_points_divisor):
    K_plus = combine(1, canonical_divisor(1), 1, frac_part(three_points_divisor))
    data = divisor_to_json(K_plus)
    assert data["terms"][0] == {"name": CANONICAL_HYPERPLANE, "degree": 1, "coeff": "-2"}
    back = divisor_from_json(data)
    assert back == K_plus
    (hyperplane, *_) = back.components
    assert hyperplane.kind == ComponentKind.GENERIC_HYPERPLANE


def test_to_json_keeps_polynomials(three_points_divisor):
    data = divisor_to_json(three_points_divisor)
    assert [t["name"] for t in data["terms"]] == ["y0", "y0+z0", "z0"]
    assert data["terms"][1]["polynomial"] == "x0 + x1"
    assert all(t["coeff"] == "1/3" for t in data["terms"])
    assert divisor_from_json(data) == three_points_divisor
