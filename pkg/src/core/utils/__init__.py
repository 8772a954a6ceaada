from src.core.utils.config import Settings, get_settings, reload_settings
from src.core.utils.exceptions import (
    AmbientMismatchError,
    BasisTooLargeError,
    ConfigurationError,
    ConsistencyError,
    DivisorError,
    GradedError,
    GradingError,
    IncompatibleTwistsError,
    IndexOutOfRangeError,
    MissingPolynomialError,
    NotTorsionError,
    ScenarioError,
    UndecidedError,
)
from src.core.utils.logging import get_logger_with_context, log_execution, setup_logging

__all__ = [
    "Settings",
    "get_settings",
    "reload_settings",
    "AmbientMismatchError",
    "BasisTooLargeError",
    "ConfigurationError",
    "ConsistencyError",
    "DivisorError",
    "GradedError",
    "GradingError",
    "IncompatibleTwistsError",
    "IndexOutOfRangeError",
    "MissingPolynomialError",
    "NotTorsionError",
    "ScenarioError",
    "UndecidedError",
    "get_logger_with_context",
    "log_execution",
    "setup_logging",
]
