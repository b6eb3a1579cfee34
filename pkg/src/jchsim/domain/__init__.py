"""
Domain model - parameters, basis conventions, states and validation.
"""

from .errors import (
    ConfigError,
    DegenerateDressedBasisError,
    DimensionMismatchError,
    JCHError,
    ModeUnoccupiedError,
    UnsupportedProfileError,
    ValidationError,
)
from .params import ChainParams, CouplingProfile, ProfileKind, SpinChainParams
from .state import (
    Branch,
    Mode,
    SingleExcitationState,
    SpinChainState,
    basis_decode,
    basis_index,
    inner_product,
    norm,
)
from .validation import ValidationReport, validate

__all__ = [
    "Branch",
    "ChainParams",
    "ConfigError",
    "CouplingProfile",
    "DegenerateDressedBasisError",
    "DimensionMismatchError",
    "JCHError",
    "Mode",
    "ModeUnoccupiedError",
    "ProfileKind",
    "SingleExcitationState",
    "SpinChainParams",
    "SpinChainState",
    "UnsupportedProfileError",
    "ValidationError",
    "ValidationReport",
    "basis_decode",
    "basis_index",
    "inner_product",
    "norm",
    "validate",
]
