# overdurfee/utils/constants.py
"""
Constants for the overdurfee package.

This module contains all constant values used across the package,
including series limits, identity names, output formats and the default
settings for the verification sweeps.
"""

import os

from overdurfee.utils.errors import PreconditionError

# Series truncation limits
DEFAULT_MAX_ORDER = 200
MAX_ORDER_ENV_VAR = "OVERDURFEE_MAX_ORDER"
DEFAULT_SERIES_ORDER = 20

# Logging
LOG_DIR_ENV_VAR = "OVERDURFEE_LOG_DIR"
LOGGER_NAME = "overdurfee"

# Text grammar for overpartitions: "7,6o,5" (o marks an overlined part)
OVERLINE_MARK = "o"
PART_SEPARATOR = ","

# Output
OUTPUT_FORMATS = ("text", "json", "csv")
DEFAULT_OUTPUT_FORMAT = "text"

# Command vocabularies
COUNT_KINDS = ("p", "pbar", "g", "dki", "dkk", "squares")

SERIES_NAMES = (
    "partitions",
    "overpartitions-product",
    "overpartitions-sum",
    "g",
    "dki",
    "dkk",
    "at-most-squares",
    "durfee-refined",
)

MAP_KINDS = ("phi", "thm21-forward", "thm21-inverse")

IDENTITY_NAMES = ("eq4", "thm21", "thm22", "eq5", "weighted", "refined")

# Readings of the k-window difference condition
OVERLINE_REFERENCES = ("leading", "trailing")

# Exit codes
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

# Default sweep settings for the verification suites
DEFAULT_VERIFY_CONFIG = {
    "max_n": 20,
    "k_values": (2, 3, 4),
    "enumeration_max_n": 30,     # brute-force oracles stop here for eq4
    "bijection_max_weight": 20,
    "literal_weight_max_n": 14,
    "jobs": 1,
}


def get_max_order():
    """
    Read the series order cap from the environment.

    Returns:
        int: Value of OVERDURFEE_MAX_ORDER, or DEFAULT_MAX_ORDER when unset
    """
    raw = os.environ.get(MAX_ORDER_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise PreconditionError(f"{MAX_ORDER_ENV_VAR} must be an integer, got {raw!r}")
    if value < 0:
        raise PreconditionError(f"{MAX_ORDER_ENV_VAR} must be non-negative, got {value}")
    return value
