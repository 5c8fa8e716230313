"""Exception types raised by the semiring toolkit and their CLI exit statuses."""

from typing import Any, Optional


class SemiringError(Exception):
    """Base class for every error raised by this package."""


class CarrierMismatchError(SemiringError, ValueError):
    """An element does not belong to the semiring it is used with."""


class InvalidElementError(SemiringError, ValueError):
    """An element payload is outside its carrier or cannot be parsed."""


class ShapeError(SemiringError, ValueError):
    """Matrices disagree in shape or semiring."""


class IndexOutOfRangeError(SemiringError, IndexError):
    """A 1-based index, index tuple or permutation is invalid."""


class PreconditionError(SemiringError, ValueError):
    """
    An operation precondition does not hold.

    The offending data is kept on ``witness`` so callers can print it.
    """

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness


class CapExceededError(SemiringError, RuntimeError):
    """A matrix is larger than the configured enumeration / DP cap."""

    def __init__(self, message: str, cap_name: str, cap: int, size: int):
        super().__init__(message)
        self.cap_name = cap_name
        self.cap = cap
        self.size = size


class MatrixFormatError(SemiringError, ValueError):
    """A matrix document is malformed."""


class UsageError(SemiringError):
    """Bad command-line arguments or configuration values."""


EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INPUT_FORMAT = 3
EXIT_CAP_EXCEEDED = 4


def exit_status_for(exc: BaseException) -> int:
    """
    Map an exception to the command-line exit status.

    Args:
        exc: Exception raised while running a command

    Returns:
        Exit status (2 usage, 3 input format, 4 cap exceeded)
    """
    if isinstance(exc, CapExceededError):
        return EXIT_CAP_EXCEEDED
    if isinstance(exc, (MatrixFormatError, InvalidElementError, OSError)):
        return EXIT_INPUT_FORMAT
    return EXIT_USAGE
