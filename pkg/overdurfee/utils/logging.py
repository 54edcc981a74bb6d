"""
Logging module for overdurfee.

This module provides a centralized logging configuration for
consistent logging across all parts of the package. Console output goes
to stderr so that command output on stdout stays machine-readable.
"""
import logging
import os
import sys
from datetime import datetime

from overdurfee.utils.constants import LOG_DIR_ENV_VAR, LOGGER_NAME


def setup_logger(name=LOGGER_NAME, log_level=logging.INFO, log_to_file=None, log_dir=None):
    """
    Set up and configure a logger.

    Args:
        name (str): Logger name
        log_level (int): Level for the logger and its handlers
        log_to_file (bool, optional): Also write a dated log file. Defaults to
            True only when OVERDURFEE_LOG_DIR is set.
        log_dir (str, optional): Directory for the log file

    Returns:
        logging.Logger: The configured logger
    """
    logger = logging.getLogger(name)
    logger.setLevel(log_level)
    if logger.hasHandlers():
        logger.handlers.clear()

    fmt = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s'
    )
    # Console handler
    ch = logging.StreamHandler(sys.stderr)
    ch.setFormatter(fmt)
    logger.addHandler(ch)

    env_dir = os.environ.get(LOG_DIR_ENV_VAR)
    if log_to_file is None:
        log_to_file = bool(env_dir)
    if log_to_file:
        log_dir = log_dir or env_dir or "logs"
        os.makedirs(log_dir, exist_ok=True)
        fn = datetime.now().strftime(f"{name}_%Y%m%d.log")
        fh = logging.FileHandler(os.path.join(log_dir, fn))
        fh.setFormatter(fmt)
        logger.addHandler(fh)

    return logger


def set_level(log_level, name=LOGGER_NAME):
    """Change the level of the package logger and all of its handlers."""
    logger = logging.getLogger(name)
    logger.setLevel(log_level)
    for handler in logger.handlers:
        handler.setLevel(log_level)


# root package logger
package_logger = setup_logger(log_level=logging.WARNING)


def get_logger(module_name: str):
    """Get a child logger for a specific module."""
    return logging.getLogger(f"{LOGGER_NAME}.{module_name}")
