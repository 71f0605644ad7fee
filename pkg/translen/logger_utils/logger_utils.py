import logging
import os
import json
from pathlib import Path
from logging.handlers import RotatingFileHandler
from typing import Dict, Optional

ENCODING = "utf-8"
DEFAULT_LOG_LEVEL = "INFO"
DEFAULT_LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DEFAULT_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

# Base directory for the package - go up one level from current file
PROJECT_DIR = Path(__file__).resolve().parent.parent

# Logger config file
LOGGER_CONFIG_PATH = Path(__file__).resolve().parent / "config" / "logger_config.json"

# Logs directory, TRANSLEN_LOG_DIR wins when set
LOGS_DIR = PROJECT_DIR / "logs"

LOG_DIR_ENV = "TRANSLEN_LOG_DIR"
LOG_LEVEL_ENV = "TRANSLEN_LOG_LEVEL"

# Console handlers of every logger built here, so the CLI can retune them
_CONSOLE_HANDLERS: Dict[str, logging.Handler] = {}


def load_logger_config():
    """Load logger configuration from JSON file if it exists."""
    if LOGGER_CONFIG_PATH.exists():
        try:
            with open(LOGGER_CONFIG_PATH, "r", encoding=ENCODING) as f:
                return json.load(f)
        except Exception as e:
            print(f"[Logger] Failed to load config: {e}")
    return {}


def get_logs_dir() -> Path:
    """Return the directory rotating log files are written to."""
    override = os.environ.get(LOG_DIR_ENV)
    return Path(override) if override else LOGS_DIR


def _level(name: Optional[str]) -> int:
    return getattr(logging, (name or DEFAULT_LOG_LEVEL).upper(), logging.INFO)


def setup_logger(name="translen", module=None):
    """
    Set up a logger with configuration from the config file.

    Args:
        name: The base name for the logger
        module: Optional sub-package name to use module-specific config

    Returns:
        A configured logger instance
    """
    config = load_logger_config()
    logging_config = config.get("logging", {})

    logger = logging.getLogger(name)

    # Prevent duplicate handlers if already configured
    if logger.handlers:
        return logger

    module_config = None
    if module and module in logging_config.get("modules", {}):
        module_config = logging_config["modules"][module]

    # Console handler writes to stderr, stdout belongs to CLI output
    console_config = logging_config.get("console", {})
    console_level = _level(os.environ.get(LOG_LEVEL_ENV) or console_config.get("level"))
    console_formatter = logging.Formatter(
        fmt=console_config.get("format", DEFAULT_LOG_FORMAT),
        datefmt=console_config.get("date_format", DEFAULT_DATE_FORMAT)
    )

    console_handler = logging.StreamHandler()
    console_handler.setLevel(console_level)
    console_handler.setFormatter(console_formatter)
    logger.addHandler(console_handler)
    _CONSOLE_HANDLERS[name] = console_handler

    file_config = dict(logging_config.get("file", {}))

    # Override with module-specific config if available
    if module_config:
        for key in ["level", "log_filename"]:
            if key in module_config:
                file_config[key] = module_config[key]

    file_level = _level(file_config.get("level"))

    if file_config.get("enabled", True):
        logs_dir = get_logs_dir()
        logs_dir.mkdir(parents=True, exist_ok=True)
        log_path = logs_dir / file_config.get("log_filename", "translen.log")

        file_formatter = logging.Formatter(
            fmt=file_config.get("format", DEFAULT_LOG_FORMAT),
            datefmt=file_config.get("date_format", DEFAULT_DATE_FORMAT)
        )

        file_handler = RotatingFileHandler(
            filename=log_path,
            maxBytes=file_config.get("max_size_bytes", 1048576),  # Default 1MB
            backupCount=file_config.get("backup_count", 5),
            encoding=file_config.get("encoding", ENCODING)
        )
        file_handler.setLevel(file_level)
        file_handler.setFormatter(file_formatter)
        logger.addHandler(file_handler)
    else:
        file_level = console_level

    # Set logger level to the most verbose of the handlers
    logger.setLevel(min(console_level, file_level))

    return logger


def set_console_level(level: str) -> None:
    """Retune the console handler of every translen logger, e.g. from --log-level."""
    numeric = _level(level)
    for name, handler in _CONSOLE_HANDLERS.items():
        handler.setLevel(numeric)
        logger = logging.getLogger(name)
        if numeric < logger.level:
            logger.setLevel(numeric)
