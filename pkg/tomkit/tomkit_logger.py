"""Logger module for tomkit."""

from sincpro_log import configure_global_logging, create_logger

from .tomkit_conf import settings

configure_global_logging(settings.tomkit_log_level)


def is_logger_in_debug() -> bool:
    """Check if the logger is in debug mode."""
    return settings.tomkit_log_level == "DEBUG"


logger = create_logger("tomkit")

__all__ = [
    "create_logger",
    "configure_global_logging",
    "settings",
    "logger",
    "is_logger_in_debug",
]
