"""
Decorator registering scenario builders.

The builder's signature becomes a pydantic parameter model: parameters are
validated before the builder runs and their JSON schema is stored in the
scenario metadata.
"""

import inspect
from functools import wraps
from typing import Any, Callable, TypeVar

from pydantic import ValidationError, create_model

from src.core.scenarios.models import Scenario, ScenarioMetadata
from src.core.scenarios.registry import scenario_registry
from src.core.utils.exceptions import ScenarioError
from src.core.utils.logging import get_logger_with_context

BuilderFunc = TypeVar("BuilderFunc", bound=Callable[..., Scenario])
logger = get_logger_with_context(module="scenarios")


def scenario(
    name: str, description: str, category: str = "general"
) -> Callable[[BuilderFunc], BuilderFunc]:
    """
    Decorator to register a function as a built-in scenario builder.

    Example:
        ```python
        @scenario(name="theorem-6.1", description="...", category="theorems")
        def theorem_6_1(d: int = 3) -> Scenario:
            ...
        ```
    """

    def decorator(func: BuilderFunc) -> BuilderFunc:
        fields: dict[str, Any] = {}
        for param_name, param in inspect.signature(func).parameters.items():
            annotation = Any if param.annotation is inspect.Parameter.empty else param.annotation
            default = ... if param.default is inspect.Parameter.empty else param.default
            fields[param_name] = (annotation, default)
        model_name = "".join(part.capitalize() for part in name.replace(".", "-").split("-"))
        ParametersModel = create_model(f"{model_name}Parameters", **fields)

        @wraps(func)
        def wrapper(**kwargs: Any) -> Scenario:
            try:
                params = ParametersModel.model_validate(kwargs)
            except ValidationError as e:
                raise ScenarioError(
                    f"Invalid parameters for scenario '{name}'",
                    scenario=name,
                    details={"errors": [err["msg"] for err in e.errors()]},
                ) from e
            logger.debug(f"Building scenario '{name}' with {params.model_dump()}")
            return func(**params.model_dump())

        metadata = ScenarioMetadata(
            name=name,
            description=description,
            category=category,
            parameters=ParametersModel.model_json_schema(),
        )
        scenario_registry.register(wrapper, metadata)
        return wrapper  # type: ignore[return-value]

    return decorator
