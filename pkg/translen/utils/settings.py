"""
Settings loading shared by the sub-package config loaders.

Each sub-package keeps a JSON settings file under its own ``config/``
directory; missing files or sections fall back to the caller's defaults.
"""

import copy
import json
import os
from pathlib import Path
from typing import Any, Callable, Dict, Optional

from dotenv import load_dotenv

from translen.exceptions import ConfigError
from translen.logger_utils.logger_utils import setup_logger, ENCODING
from translen.utils.path_utils import resolve_path

logger = setup_logger("settings", module="utils")

PACKAGE_DIR = Path(__file__).resolve().parent.parent
ENV_PATH = resolve_path("../.env", PACKAGE_DIR)

_environment_loaded = False


def load_environment() -> None:
    """Load the project .env file once; real environment variables win."""
    global _environment_loaded
    if _environment_loaded:
        return
    _environment_loaded = True
    if ENV_PATH.exists():
        load_dotenv(dotenv_path=ENV_PATH, override=False)
        logger.info(f"Environment variables loaded from: {ENV_PATH}")
    else:
        logger.debug(f".env file not found at: {ENV_PATH}")


def convert_string_booleans(config_dict: Dict[str, Any]) -> Dict[str, Any]:
    """Recursively convert 'true'/'false' strings into Python booleans."""
    for key, value in config_dict.items():
        if isinstance(value, dict):
            convert_string_booleans(value)
        elif isinstance(value, str):
            if value.lower() == "true":
                config_dict[key] = True
            elif value.lower() == "false":
                config_dict[key] = False
    return config_dict


def load_settings(config_path: Path, defaults: Dict[str, Any]) -> Dict[str, Any]:
    """
    Load a JSON settings file and fill in missing sections from defaults.

    Args:
        config_path: Path of the JSON settings file
        defaults: Section name -> default section mapping

    Returns:
        Dict: The merged settings

    Raises:
        ConfigError: If the file exists but cannot be parsed
    """
    settings = copy.deepcopy(defaults)
    if not config_path.exists():
        logger.warning(f"Settings file not found at: {config_path}. Using defaults.")
        return settings

    try:
        with open(config_path, "r", encoding=ENCODING) as f:
            loaded = json.load(f)
    except json.JSONDecodeError as e:
        error_msg = f"Error parsing JSON in {config_path}: {e.msg} at line {e.lineno}, column {e.colno}"
        logger.error(error_msg)
        raise ConfigError(error_msg)

    for section, default_section in defaults.items():
        if section not in loaded:
            logger.warning(f"Section '{section}' missing in {config_path.name}. Using defaults.")
            continue
        if isinstance(default_section, dict) and isinstance(loaded[section], dict):
            settings[section].update(loaded[section])
        else:
            settings[section] = loaded[section]

    logger.debug(f"Loaded settings from: {config_path}")
    return convert_string_booleans(settings)


def env_override(settings: Dict[str, Any], section: str, key: str, env_name: str,
                 cast: Callable[[str], Any]) -> Optional[Any]:
    """Apply an environment variable override to settings[section][key]."""
    load_environment()
    raw = os.environ.get(env_name)
    if raw is None:
        return None
    try:
        value = cast(raw)
    except ValueError:
        raise ConfigError(f"Environment variable {env_name}={raw!r} is not a valid {cast.__name__}")
    settings.setdefault(section, {})[key] = value
    logger.debug(f"{env_name} overrides {section}.{key} = {value!r}")
    return value
