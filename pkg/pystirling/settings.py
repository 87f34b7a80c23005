"""
Runtime settings shared by the CLI and the verification suites.

Settings can be loaded from a JSON config file. The default seed can be overridden with the
PYSTIRLING_SEED environment variable.
"""

# pyright: reportUnboundVariable=false

import json
import os
from os import environ
from typing import Any, Optional

from pydantic import BaseModel, Field
from typing_extensions import Literal

from pystirling.exceptions import InvalidConfig
from pystirling.logger import logger
from pystirling.pydantic_utils import IS_PYDANTIC_V2, parse_model

if IS_PYDANTIC_V2:
    from pydantic import field_validator
else:
    from pydantic import validator

DEFAULT_SEED = 20240521
DEFAULT_MAX_N = 6
DEFAULT_WORKERS = 4

OutputFormat = Literal["text", "json", "latex"]


def _default_seed() -> int:
    return int(environ.get("PYSTIRLING_SEED", DEFAULT_SEED))


def _positive(value: Any) -> Any:
    if value is not None and int(value) < 1:
        raise ValueError("Value must be greater than 0")

    return value


class PystirlingSettings(BaseModel):
    """
    Settings for a CLI run. Explicit command line flags take precedence over values from a config file.
    """

    seed: int = Field(default_factory=_default_seed)
    max_n: int = Field(default=DEFAULT_MAX_N)
    format: OutputFormat = Field(default="text")
    workers: int = Field(default=DEFAULT_WORKERS)
    check: bool = Field(default=False)

    if IS_PYDANTIC_V2:
        validate_workers = field_validator("workers", mode="before")(_positive)
    else:
        validate_workers = validator("workers", pre=True, allow_reuse=True)(_positive)

    if IS_PYDANTIC_V2:
        model_config = {
            "validate_assignment": True,
        }
    else:

        class Config:
            validate_assignment = True


def load_settings(config_path: Optional[str] = None, **overrides: Any) -> PystirlingSettings:
    """
    Builds the settings for a run.

    Args:
        config_path(str, optional): Path to a JSON config file. Defaults to None.
        overrides: Explicit values which take precedence over the config file. `None` values are ignored.

    Raises:
        InvalidConfig: If the config file does not exist, is not valid JSON or does not hold an object.

    Returns:
        PystirlingSettings: The merged settings.
    """
    data: dict = {}

    if config_path is not None:
        logger.debug("Loading settings from %s", config_path)
        if not os.path.exists(config_path):
            raise InvalidConfig(config_path, "file does not exist")

        with open(config_path, "r", encoding="utf-8") as f:
            try:
                data = json.load(f)
            except json.JSONDecodeError as exc:
                raise InvalidConfig(config_path, str(exc)) from exc

        if not isinstance(data, dict):
            raise InvalidConfig(config_path, f"expected an object, got {type(data).__name__}")

    data.update({key: value for key, value in overrides.items() if value is not None})
    return parse_model(PystirlingSettings, data)
