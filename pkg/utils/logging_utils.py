# floer-ring/utils/logging_utils.py

import logging
import os

# --- Logging Configuration ---
# Logs go to stderr so that stdout carries only the rendered result.
# FLOER_LOG_LEVEL selects the threshold (debug, info, warning, error).
_LEVEL_NAME = os.getenv("FLOER_LOG_LEVEL", "WARNING").upper()
logging.basicConfig(
    level=getattr(logging, _LEVEL_NAME, logging.WARNING),
    format='%(asctime)s - %(levelname)s - %(message)s',
)

_DISPATCH = {
    'info': logging.info,
    'warning': logging.warning,
    'error': logging.error,
    'debug': logging.debug,
}


def log_message(level: str, message: str, **kwargs):
    """
    Directs a message to the standard Python logger.

    Args:
        level (str): The log level ('info', 'warning', 'error', 'debug').
        message (str): The log message, conventionally prefixed with the component name.
        **kwargs: Passed through to the logger (e.g., exc_info=True for exceptions).
    """
    emit = _DISPATCH.get(level.lower())
    if emit is None:
        logging.info(f"Unknown log level '{level}': {message}", **kwargs)
        return
    emit(message, **kwargs)


def set_log_level(level: str):
    """Adjusts the root logger threshold at runtime (used by the CLI --verbose flag)."""
    logging.getLogger().setLevel(getattr(logging, level.upper(), logging.WARNING))
