from pathlib import Path
from typing import Any, Dict

from translen.logger_utils.logger_utils import setup_logger
from translen.utils.path_utils import resolve_path
from translen.utils.settings import load_settings

logger = setup_logger("bounds_config_loader", module="bounds")

MODULE_DIR = Path(__file__).resolve().parent
CONFIG_PATH = resolve_path("config/bounds_config.json", MODULE_DIR)

DEFAULTS: Dict[str, Any] = {
    "certify": {
        "max_j": 200,
        "mode": "boolean",
        "debug_exact_spot_check": False,
    },
}


def load_config() -> Dict[str, Any]:
    """Load the certificate settings."""
    return load_settings(CONFIG_PATH, DEFAULTS)
