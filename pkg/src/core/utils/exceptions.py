"""Custom exception hierarchy for the graded invariants engine.

This module defines the exception hierarchy with:
- Base GradedError with error codes, messages, details
- Serialization support for JSON reports
- Specific exceptions for divisors, cohomology indices, torsion searches,
  certified decisions, consistency checks, sections and scenarios
"""

from typing import Any, Optional


class GradedError(Exception):
    """Base exception for the engine.

    All custom exceptions inherit from this base class.

    Attributes:
        error_code: Unique error code for identification.
        message: Human-readable error message.
        details: Additional error details (any JSON-serializable data).
    """

    def __init__(
        self,
        message: str,
        error_code: str = "GRADED_ERROR",
        details: Optional[dict[str, Any]] = None,
    ) -> None:
        """Initialize GradedError.

        Args:
            message: Error message.
            error_code: Unique error code.
            details: Additional error details.
        """
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.details = details or {}

    def to_dict(self) -> dict[str, Any]:
        """Serialize exception to dictionary for JSON reports.

        Returns:
            Dictionary representation of the exception.
        """
        return {
            "error_code": self.error_code,
            "message": self.message,
            "details": self.details,
            "exception_type": self.__class__.__name__,
        }

    def __str__(self) -> str:
        details_str = f", details={self.details}" if self.details else ""
        return f"[{self.error_code}] {self.message}{details_str}"

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}("
            f"error_code='{self.error_code}', "
            f"message='{self.message}', "
            f"details={self.details})"
        )


# Divisor Errors


class DivisorError(GradedError):
    """Invalid divisor construction or divisor input."""

    def __init__(
        self,
        message: str,
        component: Optional[str] = None,
        details: Optional[dict[str, Any]] = None,
        error_code: str = "DIVISOR_ERROR",
    ) -> None:
        """Initialize DivisorError.

        Args:
            message: Error message.
            component: Name of the offending component.
            details: Additional error details.
            error_code: Error code override for subclasses.
        """
        error_details = details or {}
        if component:
            error_details["component"] = component
        super().__init__(message=message, error_code=error_code, details=error_details)


class AmbientMismatchError(DivisorError):
    """Two divisors live on projective spaces of different dimension."""

    def __init__(self, left: int, right: int) -> None:
        super().__init__(
            message=f"Ambient dimension mismatch: P^{left} vs P^{right}",
            details={"left": left, "right": right},
            error_code="AMBIENT_MISMATCH",
        )


# Index Errors


class IndexOutOfRangeError(GradedError):
    """A cohomological index is outside its admissible range."""

    def __init__(
        self, index: int, low: int, high: Optional[int], what: str = "index"
    ) -> None:
        """Initialize IndexOutOfRangeError.

        Args:
            index: The offending index.
            low: Smallest admissible value.
            high: Largest admissible value, None when unbounded.
            what: Name of the index for the message.
        """
        upper = "inf)" if high is None else f"{high}]"
        super().__init__(
            message=f"{what} {index} outside [{low}, {upper}",
            error_code="INDEX_OUT_OF_RANGE",
            details={"index": index, "low": low, "high": high},
        )


# Torsion Errors


class NotTorsionError(GradedError):
    """No torsion order was found within the search bound."""

    def __init__(self, bound: int, divisor: Optional[str] = None) -> None:
        """Initialize NotTorsionError.

        Args:
            bound: Search bound that was exhausted.
            divisor: Printable form of the class divisor.
        """
        details: dict[str, Any] = {"bound": bound}
        if divisor:
            details["divisor"] = divisor
        super().__init__(
            message=f"No order within bound {bound}; the class may be non-torsion",
            error_code="NOT_TORSION",
            details=details,
        )


NoOrderWithinBound = NotTorsionError
NotTorsionWithinBound = NotTorsionError


# Decision Errors


class UndecidedError(GradedError):
    """A global vanishing question cannot be certified from the available data."""

    def __init__(self, message: str, details: Optional[dict[str, Any]] = None) -> None:
        super().__init__(message=message, error_code="UNDECIDED", details=details)


class ConsistencyError(GradedError):
    """An internal cross-check failed: a bug or a violated assumption."""

    def __init__(
        self,
        message: str,
        check: Optional[str] = None,
        details: Optional[dict[str, Any]] = None,
    ) -> None:
        """Initialize ConsistencyError.

        Args:
            message: Error message.
            check: Name of the failed check.
            details: Additional error details.
        """
        error_details = details or {}
        if check:
            error_details["check"] = check
        super().__init__(message=message, error_code="CONSISTENCY_ERROR", details=error_details)


class IncompatibleTwistsError(GradedError):
    """Segre factors whose canonical generators have incompatible degrees."""

    def __init__(self, message: str, details: Optional[dict[str, Any]] = None) -> None:
        super().__init__(message=message, error_code="INCOMPATIBLE_TWISTS", details=details)


class GradingError(GradedError):
    """A degree query or grading scale that the API does not accept."""

    def __init__(self, message: str, details: Optional[dict[str, Any]] = None) -> None:
        super().__init__(message=message, error_code="GRADING_ERROR", details=details)


# Section Errors


class MissingPolynomialError(GradedError):
    """A component lacks the defining polynomial needed for explicit sections."""

    def __init__(self, component: str) -> None:
        super().__init__(
            message=f"Component '{component}' has no defining polynomial",
            error_code="MISSING_POLYNOMIAL",
            details={"component": component},
        )


class BasisTooLargeError(GradedError):
    """A section basis would exceed the configured guardrail."""

    def __init__(self, size: int, limit: int, degree: int) -> None:
        super().__init__(
            message=f"Basis of size {size} in degree {degree} exceeds the limit {limit}",
            error_code="BASIS_TOO_LARGE",
            details={"size": size, "limit": limit, "degree": degree},
        )


# Scenario & Configuration Errors


class ScenarioError(GradedError):
    """Malformed scenario file or unknown scenario/quantity."""

    def __init__(
        self,
        message: str,
        scenario: Optional[str] = None,
        details: Optional[dict[str, Any]] = None,
    ) -> None:
        """Initialize ScenarioError.

        Args:
            message: Error message.
            scenario: Name of the scenario.
            details: Additional error details.
        """
        error_details = details or {}
        if scenario:
            error_details["scenario"] = scenario
        super().__init__(message=message, error_code="SCENARIO_ERROR", details=error_details)


class ConfigurationError(GradedError):
    """Configuration error."""

    def __init__(
        self,
        message: str,
        config_key: Optional[str] = None,
        details: Optional[dict[str, Any]] = None,
    ) -> None:
        """Initialize ConfigurationError.

        Args:
            message: Error message.
            config_key: Configuration key that caused the error.
            details: Additional error details.
        """
        error_details = details or {}
        if config_key:
            error_details["config_key"] = config_key
        super().__init__(message=message, error_code="CONFIGURATION_ERROR", details=error_details)
