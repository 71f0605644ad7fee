from pathlib import Path
from typing import Any, Dict

from translen.logger_utils.logger_utils import setup_logger
from translen.utils.path_utils import resolve_path
from translen.utils.settings import load_settings

logger = setup_logger("report_config_loader", module="report")

MODULE_DIR = Path(__file__).resolve().parent
CONFIG_PATH = resolve_path("config/report_config.json", MODULE_DIR)

DEFAULTS: Dict[str, Any] = {
    "sweep": {
        "parameter_cap": 200,
        "workers": 4,
        "progress": True,
    },
    "output": {
        "format": "text",
    },
    "csv": {
        "float_precision": 12,
    },
}


def load_config() -> Dict[str, Any]:
    """Load the report and sweep settings."""
    return load_settings(CONFIG_PATH, DEFAULTS)
