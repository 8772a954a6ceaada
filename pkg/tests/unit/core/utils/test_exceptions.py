import pytest

from src.core.utils.exceptions import (
    AmbientMismatchError,
    BasisTooLargeError,
    ConsistencyError,
    DivisorError,
    GradedError,
    IndexOutOfRangeError,
    MissingPolynomialError,
    NotTorsionError,
    ScenarioError,
    UndecidedError,
)


def test_base_error_serializes():
    error = GradedError("boom", details={"n": 3})
    assert error.to_dict() == {
        "error_code": "GRADED_ERROR",
        "message": "boom",
        "details": {"n": 3},
        "exception_type": "GradedError",
    }


@pytest.mark.parametrize(
    "error, code",
    [
        (DivisorError("bad", component="p"), "DIVISOR_ERROR"),
        (AmbientMismatchError(1, 2), "AMBIENT_MISMATCH"),
        (IndexOutOfRangeError(4, 0, 2), "INDEX_OUT_OF_RANGE"),
        (NotTorsionError(10, "F"), "NOT_TORSION"),
        (UndecidedError("open"), "UNDECIDED"),
        (ConsistencyError("mismatch", check="cover"), "CONSISTENCY_ERROR"),
        (MissingPolynomialError("p"), "MISSING_POLYNOMIAL"),
        (BasisTooLargeError(10, 5, 3), "BASIS_TOO_LARGE"),
        (ScenarioError("bad", scenario="s"), "SCENARIO_ERROR"),
    ],
)
def test_error_codes(error, code):
    assert isinstance(error, GradedError)
    assert error.error_code == code
    assert error.to_dict()["exception_type"] == type(error).__name__


def test_details_carry_context():
    assert NotTorsionError(10, "F").details == {"bound": 10, "divisor": "F"}
    assert ConsistencyError("x", check="cover").details["check"] == "cover"
    assert ScenarioError("x", scenario="s").details["scenario"] == "s"
    assert BasisTooLargeError(10, 5, 3).details == {"size": 10, "limit": 5, "degree": 3}
