"""Logging configuration using Loguru.

This module provides:
- Colored console output on stderr (NO_COLOR disables colors)
- Optional JSON file output
- Scenario context binding so every record names the running scenario
- A decorator that logs entry, completion and failure of engine runs

stdout is reserved for reports; no sink ever writes there.
"""

import functools
import os
import sys
from contextvars import ContextVar
from pathlib import Path
from typing import Any, Callable, Optional, TypeVar

from loguru import logger

scenario_var: ContextVar[Optional[str]] = ContextVar("scenario", default=None)

F = TypeVar("F", bound=Callable[..., Any])


def set_scenario(name: Optional[str]) -> None:
    """Set the scenario name for the current context.

    Args:
        name: Scenario name, or None to clear it.
    """
    scenario_var.set(name)


def _patch_record(record: Any) -> None:
    """Inject the scenario context variable into the record's extra fields."""
    scenario = scenario_var.get()
    if scenario:
        record["extra"]["scenario"] = scenario


def setup_logging(
    log_level: str = "WARNING",
    log_file: Optional[str] = None,
    enable_console: bool = True,
) -> None:
    """Configure Loguru logging.

    Args:
        log_level: Logging level (TRACE, DEBUG, INFO, SUCCESS, WARNING, ERROR, CRITICAL).
        log_file: Path of a JSON log file; no file sink when omitted.
        enable_console: Enable console output on stderr.
    """
    logger.remove()
    logger.configure(patcher=_patch_record)

    if enable_console:
        logger.add(
            sys.stderr,
            format="<green>{time:HH:mm:ss.SSS}</green> | "
            "<level>{level: <8}</level> | "
            "<cyan>{extra[module]}</cyan> | "
            "<level>{message}</level>",
            level=log_level,
            colorize="NO_COLOR" not in os.environ,
            backtrace=False,
            diagnose=False,
        )

    if log_file:
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            path,
            format="{message}",
            level=log_level,
            serialize=True,
            backtrace=True,
            diagnose=False,
        )


def get_logger_with_context(module: str = "graded", **extra: Any) -> Any:
    """Get logger with bound context.

    Args:
        module: Module name shown in console records.
        **extra: Additional context to bind.

    Returns:
        Logger instance with bound context.
    """
    return logger.bind(module=module, **extra)


logger.configure(extra={"module": "graded"}, patcher=_patch_record)


def log_execution(func_name: Optional[str] = None) -> Callable[[F], F]:
    """Decorator to log function execution.

    Args:
        func_name: Optional custom function name for logs.
    """

    def decorator(func: F) -> F:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            name = func_name or func.__name__
            log = get_logger_with_context(module="runner")
            log.debug(f"Executing {name}")
            try:
                result = func(*args, **kwargs)
                log.debug(f"Completed {name}")
                return result
            except Exception as e:
                log.error(f"Error in {name}: {e}")
                raise

        return wrapper  # type: ignore[return-value]

    return decorator
