"""Configuration and parsing helpers shared by the library, CLI and MCP server."""

import os
import re
from typing import Optional, Tuple

from dotenv import load_dotenv

from .errors import UsageError

# Load environment variables from .env file
load_dotenv()

ENUM_CAP_VAR = "SEMIPERM_ENUM_CAP"
DP_CAP_VAR = "SEMIPERM_DP_CAP"
WORKERS_VAR = "SEMIPERM_WORKERS"
LOG_LEVEL_VAR = "SEMIPERM_LOG_LEVEL"

DEFAULT_ENUM_CAP = 10
DEFAULT_DP_CAP = 20
DEFAULT_WORKERS = 1

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _positive_int_from_env(name: str, default: int) -> int:
    """
    Read a positive integer from the environment.

    Args:
        name: Environment variable name
        default: Value used when the variable is unset or empty

    Returns:
        The configured value

    Raises:
        UsageError: If the variable is set but not a positive integer
    """
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    if not re.fullmatch(r"\d+", raw) or int(raw) < 1:
        raise UsageError(f"{name} must be a positive integer, got {raw!r}")
    return int(raw)


def get_enum_cap() -> int:
    """Largest n accepted by permanent enumeration."""
    return _positive_int_from_env(ENUM_CAP_VAR, DEFAULT_ENUM_CAP)


def get_dp_cap() -> int:
    """Largest n accepted by the subset dynamic program."""
    return _positive_int_from_env(DP_CAP_VAR, DEFAULT_DP_CAP)


def get_workers() -> int:
    """Thread pool size for suites and searches (1 means serial)."""
    return _positive_int_from_env(WORKERS_VAR, DEFAULT_WORKERS)


def get_log_level(default: str = "WARNING") -> str:
    """Log level name from the environment, validated."""
    level = os.getenv(LOG_LEVEL_VAR, "").strip().upper() or default
    if level not in _LOG_LEVELS:
        raise UsageError(f"{LOG_LEVEL_VAR} must be one of {', '.join(_LOG_LEVELS)}, got {level!r}")
    return level


def parse_index_list(text: str) -> Tuple[int, ...]:
    """
    Parse a comma separated list of 1-based indices (e.g. "1,3,4").

    Args:
        text: Input text

    Returns:
        Tuple of integers in the given order

    Raises:
        UsageError: If an item is not a positive integer
    """
    items = [part.strip() for part in text.split(",") if part.strip()]
    if not items:
        raise UsageError(f"Expected a comma separated index list, got {text!r}")
    indices = []
    for item in items:
        if not re.fullmatch(r"\d+", item) or int(item) < 1:
            raise UsageError(f"Index {item!r} is not a positive integer")
        indices.append(int(item))
    return tuple(indices)


def parse_semiring_name(text: str) -> Tuple[str, Optional[int]]:
    """
    Split a semiring name such as "divisor_lattice(12)" into id and parameter.

    Args:
        text: Semiring name as given on the command line

    Returns:
        Tuple of (id string, parameter or None)
    """
    match = re.fullmatch(r"\s*([a-z_]+)\s*(?:\(\s*(\d+)\s*\))?\s*", text)
    if not match:
        raise UsageError(f"Malformed semiring name {text!r}")
    param = int(match.group(2)) if match.group(2) else None
    return match.group(1), param
