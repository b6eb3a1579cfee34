"""Exception hierarchy for jchsim."""

from typing import Any


class JCHError(Exception):
    """Base class for all jchsim errors."""
    pass


class ValidationError(JCHError, ValueError):
    """Raised when parameters fail validation.

    The full report is kept on ``report`` so callers can show every problem,
    not just the first.
    """

    def __init__(self, message: str, report: Any = None):
        super().__init__(message)
        self.report = report


class DimensionMismatchError(JCHError, ValueError):
    """Raised when vector lengths or chain sizes disagree."""
    pass


class UnsupportedProfileError(JCHError):
    """Raised when a closed form is requested for a profile that has none."""
    pass


class DegenerateDressedBasisError(JCHError, ValueError):
    """Raised when beta = delta = 0 leaves the dressed basis undefined."""
    pass


class ModeUnoccupiedError(JCHError):
    """Raised when a mode carries too little weight for a conditional position."""
    pass


class ConfigError(JCHError):
    """Raised for config parse, schema, or preset lookup failures."""
    pass
