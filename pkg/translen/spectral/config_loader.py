from pathlib import Path
from typing import Any, Dict

from translen.logger_utils.logger_utils import setup_logger
from translen.utils.path_utils import resolve_path
from translen.utils.settings import env_override, load_settings

logger = setup_logger("spectral_config_loader", module="spectral")

MODULE_DIR = Path(__file__).resolve().parent
CONFIG_PATH = resolve_path("config/spectral_config.json", MODULE_DIR)

TOLERANCE_ENV = "TRANSLEN_TOLERANCE"
MAX_ITERATIONS_ENV = "TRANSLEN_MAX_ITERATIONS"

DEFAULTS: Dict[str, Any] = {
    "power_iteration": {
        "tolerance": 1e-12,
        "max_iterations": 1000000,
    },
    "exponents": {
        "exponent_cap_factor": 4,
    },
}


def load_config() -> Dict[str, Any]:
    """Load the spectral settings, applying TRANSLEN_TOLERANCE / TRANSLEN_MAX_ITERATIONS."""
    config = load_settings(CONFIG_PATH, DEFAULTS)
    env_override(config, "power_iteration", "tolerance", TOLERANCE_ENV, float)
    env_override(config, "power_iteration", "max_iterations", MAX_ITERATIONS_ENV, int)
    return config
