"""
Logging setup for relmaj.
Library modules only call logging.getLogger(__name__); the CLI installs the handler.
"""

import logging
import sys

from pythonjsonlogger import jsonlogger

LOG_FIELDS = "%(asctime)s %(name)s %(levelname)s %(message)s"


def configure_logging(level: str = "WARNING", json_format: bool = True) -> logging.Logger:
    """
    Install a single stderr handler on the package logger.

    Args:
        level (str): Logging level name
        json_format (bool): Emit JSON records instead of plain text lines

    Returns:
        logging.Logger: The configured package logger
    """
    handler = logging.StreamHandler(sys.stderr)
    if json_format:
        handler.setFormatter(jsonlogger.JsonFormatter(LOG_FIELDS))
    else:
        handler.setFormatter(logging.Formatter(LOG_FIELDS))

    package_logger = logging.getLogger("relmaj")
    package_logger.handlers[:] = [handler]
    package_logger.setLevel(level.upper())
    package_logger.propagate = False
    return package_logger
