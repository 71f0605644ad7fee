"""
Path helpers shared by the settings loaders, configuration files and CLI outputs.
"""

import os
from pathlib import Path
from typing import Optional, Union

from translen.logger_utils.logger_utils import setup_logger

logger = setup_logger("path_utils", module="utils")

PathLike = Union[str, Path]


def resolve_path(path_input: PathLike, base_dir: Optional[Path] = None) -> Path:
    """
    Absolute path for a user or package path.

    "~" and environment variables are expanded. Relative paths are taken
    from base_dir when given (a sub-package's own directory for its
    settings files), otherwise from the working directory.
    """
    path = Path(os.path.expandvars(os.path.expanduser(str(path_input))))
    if not path.is_absolute():
        path = (base_dir / path) if base_dir is not None else path
    return path.resolve()


def ensure_directory_exists(dir_path: Path, description: str = "directory") -> Path:
    """Create dir_path and its parents if missing."""
    if dir_path.is_dir():
        return dir_path
    try:
        dir_path.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        logger.error(f"Could not create {description} at {dir_path}: {e}")
        raise
    logger.info(f"Created {description} at: {dir_path}")
    return dir_path
