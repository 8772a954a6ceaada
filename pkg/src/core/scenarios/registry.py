"""
Scenario registry.

This module provides a thread-safe, global registry of built-in scenario builders.
"""

import threading
from typing import Any, Callable, Optional

from src.core.scenarios.models import Scenario, ScenarioMetadata
from src.core.utils.exceptions import ScenarioError

Builder = Callable[..., Scenario]


class ScenarioRegistry:
    """
    Thread-safe, global registry of scenario builders.

    A builder takes keyword parameters and returns a Scenario; its metadata
    records the parameter schema and the category it is listed under.
    """

    _instance: Optional["ScenarioRegistry"] = None
    _lock: threading.RLock = threading.RLock()

    def __new__(cls) -> "ScenarioRegistry":
        """Singleton pattern implementation."""
        if cls._instance is None:
            with cls._lock:
                if cls._instance is None:
                    cls._instance = super().__new__(cls)
                    cls._instance._builders: dict[str, tuple[Builder, ScenarioMetadata]] = {}
                    cls._instance._categories: dict[str, list[str]] = {}
        return cls._instance

    def register(self, builder: Builder, metadata: ScenarioMetadata) -> None:
        """
        Registers a scenario builder and its metadata.

        Raises:
            ValueError: If a scenario with the same name is already registered.
        """
        with self._lock:
            if metadata.name in self._builders:
                raise ValueError(f"Scenario '{metadata.name}' already registered.")
            self._builders[metadata.name] = (builder, metadata)
            self._categories.setdefault(metadata.category, []).append(metadata.name)

    def get(self, name: str) -> Optional[tuple[Builder, ScenarioMetadata]]:
        with self._lock:
            return self._builders.get(name)

    def build(self, name: str, **params: Any) -> Scenario:
        """Build the named scenario with the given parameters.

        Raises:
            ScenarioError: If no such scenario is registered.
        """
        entry = self.get(name)
        if entry is None:
            raise ScenarioError(
                f"Unknown scenario '{name}'", scenario=name, details={"known": self.names()}
            )
        builder, _ = entry
        return builder(**params)

    def list_by_category(self, category: str) -> list[ScenarioMetadata]:
        with self._lock:
            names = self._categories.get(category, [])
            return [self._builders[name][1] for name in names if name in self._builders]

    def categories(self) -> list[str]:
        with self._lock:
            return sorted(self._categories)

    def names(self) -> list[str]:
        with self._lock:
            return list(self._builders)

    def unregister(self, name: str) -> None:
        with self._lock:
            if name in self._builders:
                _, metadata = self._builders.pop(name)
                names = self._categories.get(metadata.category, [])
                if name in names:
                    names.remove(name)
                    if not names:
                        del self._categories[metadata.category]

    def clear(self) -> None:
        """Clears all registered scenarios. Useful for testing."""
        with self._lock:
            self._builders.clear()
            self._categories.clear()


# Global instance of the ScenarioRegistry
scenario_registry = ScenarioRegistry()
