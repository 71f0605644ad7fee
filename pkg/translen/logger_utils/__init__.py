from translen.logger_utils.logger_utils import setup_logger, set_console_level

__all__ = ["setup_logger", "set_console_level"]
