import pytest
from pydantic import ValidationError

from src.core.utils.config import (
    ScanSettings,
    SectionSettings,
    Settings,
    get_settings,
    reload_settings,
)


def test_defaults():
    settings = get_settings()
    assert settings.log_level == "WARNING"
    assert settings.scan.window == (-20, 20)
    assert settings.torsion.bound == 60
    assert settings.sections.variable_prefix == "x"


def test_singleton_and_reload():
    first = get_settings()
    assert get_settings() is first
    assert reload_settings() is not first


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("LOG_LEVEL", "debug")
    monkeypatch.setenv("SCAN__WINDOW_LO", "-5")
    monkeypatch.setenv("TORSION__BOUND", "12")
    settings = reload_settings()
    assert settings.log_level == "DEBUG"
    assert settings.scan.window_lo == -5
    assert settings.torsion.bound == 12


def test_log_level_is_validated():
    with pytest.raises(ValidationError, match="Log level"):
        Settings(log_level="LOUD")


def test_window_must_not_be_empty():
    with pytest.raises(ValidationError, match="window_lo"):
        ScanSettings(window_lo=3, window_hi=2)


def test_variable_prefix_must_be_identifier():
    with pytest.raises(ValidationError, match="identifier"):
        SectionSettings(variable_prefix="1x")
