"""
Configuration loading for grouptype.

Settings come from ``config.json`` (path overridable with GROUPTYPE_CONFIG);
a missing file falls back to defaults, a malformed one is an error.
"""

import json
import logging
import os
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, ValidationError

from .engine import DEFAULT_CAP
from .errors import ConfigError

logger = logging.getLogger("GroupType.Config")

DEFAULT_CONFIG_PATH = "config.json"


class GeneralSettings(BaseModel):
    debug: bool = False
    log_file: str = "grouptype.log"


class EnumerationSettings(BaseModel):
    cap: int = Field(default=DEFAULT_CAP, ge=1)
    max_workers: int = Field(default=4, ge=1)


class DataSettings(BaseModel):
    dir: str = "data"


class OutputSettings(BaseModel):
    json_indent: int = Field(default=2, ge=0)


class Settings(BaseModel):
    general: GeneralSettings = Field(default_factory=GeneralSettings)
    enumeration: EnumerationSettings = Field(default_factory=EnumerationSettings)
    data: DataSettings = Field(default_factory=DataSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)


def load_config(config_path: Optional[str] = None) -> Settings:
    """Load configuration from config.json"""
    config_path = config_path or os.getenv("GROUPTYPE_CONFIG", DEFAULT_CONFIG_PATH)
    try:
        with open(config_path, "r") as f:
            raw = json.load(f)
            logger.debug(f"Loaded configuration from {config_path}")
    except FileNotFoundError:
        logger.debug(f"Configuration file {config_path} not found, using defaults")
        return Settings()
    except json.JSONDecodeError as e:
        logger.error(f"Error parsing JSON in {config_path}")
        raise ConfigError(f"{config_path}: {e}") from e

    try:
        return Settings.model_validate(raw)
    except ValidationError as e:
        logger.error(f"Invalid configuration in {config_path}")
        raise ConfigError(f"{config_path}: {e}") from e


def resolve_data_dir(flag: Optional[str], settings: Settings) -> Path:
    """--data flag, then GROUPTYPE_DATA, then data.dir from the config."""
    return Path(flag or os.getenv("GROUPTYPE_DATA") or settings.data.dir)
