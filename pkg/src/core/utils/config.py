"""Configuration management system using pydantic-settings.

This module provides the engine configuration with:
- Environment variable loading from .env files
- Type validation using Pydantic
- Nested settings for scans, torsion searches and explicit sections
- Support for environment variable delimiter (__) for nested config
"""

from typing import Optional

from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class ScanSettings(BaseSettings):
    """Degree windows and search limits for graded dimension scans."""

    model_config = SettingsConfigDict(
        env_prefix="SCAN__", env_nested_delimiter="__", extra="ignore"
    )

    window_lo: int = Field(default=-20, description="Lowest degree of the default scan window")
    window_hi: int = Field(default=20, description="Highest degree of the default scan window")
    a_invariant_scan_limit: int = Field(
        default=10_000,
        ge=1,
        description="Maximum downward steps when no positivity certificate bounds the search",
    )
    spot_check_samples: int = Field(
        default=64, ge=0, description="Points sampled beyond each certificate bound"
    )

    @model_validator(mode="after")
    def validate_window(self) -> "ScanSettings":
        """Ensure the window is not empty."""
        if self.window_lo > self.window_hi:
            raise ValueError("window_lo must not exceed window_hi")
        return self

    @property
    def window(self) -> tuple[int, int]:
        return self.window_lo, self.window_hi


class TorsionSettings(BaseSettings):
    """Divisor class torsion search configuration."""

    model_config = SettingsConfigDict(
        env_prefix="TORSION__", env_nested_delimiter="__", extra="ignore"
    )

    bound: int = Field(default=60, ge=1, description="Largest order tried by torsion searches")


class SectionSettings(BaseSettings):
    """Explicit section basis configuration."""

    model_config = SettingsConfigDict(
        env_prefix="SECTIONS__", env_nested_delimiter="__", extra="ignore"
    )

    max_basis: int = Field(default=50_000, ge=1, description="Largest basis section_basis builds")
    variable_prefix: str = Field(
        default="x", description="Prefix for the homogeneous coordinates x0..xd"
    )

    @field_validator("variable_prefix")
    @classmethod
    def validate_prefix(cls, v: str) -> str:
        """Coordinates must be valid identifiers."""
        if not v.isidentifier():
            raise ValueError("variable_prefix must be a valid identifier")
        return v


class Settings(BaseSettings):
    """Main engine settings.

    Settings are loaded from:
    1. Environment variables (highest priority)
    2. .env file
    3. Default values (lowest priority)
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        extra="ignore",
        case_sensitive=False,
    )

    app_name: str = Field(default="graded-invariants", description="Application name")
    app_version: str = Field(default="0.1.0", description="Application version")
    log_level: str = Field(default="WARNING", description="Logging level")
    log_file: Optional[str] = Field(default=None, description="Optional JSON log file path")

    scan: ScanSettings = Field(default_factory=ScanSettings)
    torsion: TorsionSettings = Field(default_factory=TorsionSettings)
    sections: SectionSettings = Field(default_factory=SectionSettings)

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level."""
        allowed = {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}
        v_upper = v.upper()
        if v_upper not in allowed:
            raise ValueError(f"Log level must be one of {allowed}")
        return v_upper


# Global settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get or create the global settings instance.

    Returns:
        The global Settings instance.
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reload_settings() -> Settings:
    """Reload settings from environment/config files.

    Useful for testing or when configuration changes.

    Returns:
        The newly loaded Settings instance.
    """
    global _settings
    _settings = Settings()
    return _settings
