"""
File operation utilities for the translen package.
"""

import json
from pathlib import Path
from typing import Any, Union

from translen.logger_utils.logger_utils import setup_logger, ENCODING
from translen.utils.path_utils import resolve_path, ensure_directory_exists

logger = setup_logger("file_tools", module="utils")


def write_json(file_path: Union[str, Path], content: Any) -> Path:
    """
    Write a JSON document, creating parent directories as needed.

    Args:
        file_path: Destination path
        content: JSON-serializable document

    Returns:
        Path: The resolved path written to
    """
    path = resolve_path(file_path)
    ensure_directory_exists(path.parent, description="output directory")
    with open(path, "w", encoding=ENCODING) as f:
        json.dump(content, f, indent=2)
        f.write("\n")
    logger.info(f"Wrote JSON document: {path}")
    return path


def write_text(file_path: Union[str, Path], text: str) -> Path:
    """
    Write text with LF line endings, creating parent directories as needed.

    Returns:
        Path: The resolved path written to
    """
    path = resolve_path(file_path)
    ensure_directory_exists(path.parent, description="output directory")
    with open(path, "w", encoding=ENCODING, newline="\n") as f:
        f.write(text)
    logger.info(f"Wrote {len(text)} characters to: {path}")
    return path
