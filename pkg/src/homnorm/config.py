#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Settings for homnorm.

Values are layered, later sources winning:

1. field defaults
2. a YAML file: --config, else $HOMNORM_CONFIG, else ~/.config/homnorm/config.yaml
3. environment variables HOMNORM_<FIELD> (a .env file in the working directory is read first)
4. command-line flags

Example:
    >>> load_settings(overrides={"levels": 3}).levels
    3
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Literal, Mapping, Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .errors import ConfigError

logger = logging.getLogger(__name__)

ENV_PREFIX = "HOMNORM_"
DEFAULT_CONFIG_PATH = Path("~/.config/homnorm/config.yaml")


class Settings(BaseModel):
    """
    Attributes:
        levels: default truncation for constructions
        budget: cap on |gens G| * log2 |Aut N| for the normality search
        max_order: largest group order the catalog runner visits
        workers: processes for the catalog runner
        pair_limit: largest pair count checked exhaustively by verify_simplicial_group
        triple_limit: largest triple count checked exhaustively
        sample_size: pairs or triples sampled beyond those limits
        seed: seed of the sampler
        theme: console theme
    """

    model_config = ConfigDict(extra="forbid")

    levels: int = Field(4, ge=1, le=8)
    budget: float = Field(64.0, gt=0)
    max_order: int = Field(8, ge=1, le=24)
    workers: int = Field(1, ge=1)
    pair_limit: int = Field(40000, ge=1)
    triple_limit: int = Field(60000, ge=1)
    sample_size: int = Field(2000, ge=1)
    seed: int = 0
    theme: Literal["dark", "light"] = "dark"


def _read_yaml(path: Path) -> Dict[str, Any]:
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"config file {path} is not valid YAML: {exc}") from exc
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a mapping")
    return data


def _config_file(explicit: Optional[str], env: Mapping[str, str]) -> Optional[Path]:
    if explicit:
        return Path(explicit)
    if env.get(ENV_PREFIX + "CONFIG"):
        return Path(env[ENV_PREFIX + "CONFIG"])
    default = DEFAULT_CONFIG_PATH.expanduser()
    return default if default.is_file() else None


def _from_env(env: Mapping[str, str]) -> Dict[str, str]:
    values = {}
    for name in Settings.model_fields:
        key = ENV_PREFIX + name.upper()
        if key in env:
            values[name] = env[key]
    return values


def load_settings(
    config_path: Optional[str] = None,
    overrides: Optional[Mapping[str, Any]] = None,
    env: Optional[Mapping[str, str]] = None,
    use_dotenv: bool = True,
) -> Settings:
    """
    Merge every settings source into a Settings value.

    Args:
        config_path: explicit YAML file
        overrides: command-line values; None entries are ignored
        env: environment to read instead of os.environ
        use_dotenv: read ./.env into os.environ first

    Raises:
        ConfigError: unreadable file or an invalid value
    """
    if env is None:
        if use_dotenv:
            load_dotenv(Path.cwd() / ".env", override=False)
        env = os.environ
    merged: Dict[str, Any] = {}
    path = _config_file(config_path, env)
    if path is not None:
        logger.debug("reading settings from %s", path)
        merged.update(_read_yaml(path))
    merged.update(_from_env(env))
    merged.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        return Settings.model_validate(merged)
    except ValidationError as exc:
        raise ConfigError(f"invalid settings: {exc}") from exc
