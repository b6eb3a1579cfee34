"""
Parameter validation for JCH chains.

Validation collects every problem instead of stopping at the first, so a
config with several mistakes is reported in one pass. Nothing is coerced.
"""

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from jchsim.log import get_logger

from .errors import ValidationError
from .params import ChainParams, ProfileKind, _custom_weight_errors

log = get_logger(__name__)


@dataclass
class ValidationReport:
    """Outcome of ``validate``."""

    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.errors

    def raise_for_errors(self) -> None:
        """
        Raise if any error was recorded.

        Raises:
            ValidationError: With all errors joined, report attached
        """
        if self.errors:
            log.debug("params.invalid", **self.to_dict())
            raise ValidationError("; ".join(self.errors), report=self)

    def to_dict(self) -> dict[str, Any]:
        return {"valid": self.valid, "errors": list(self.errors), "warnings": list(self.warnings)}


def validate(params: ChainParams) -> ValidationReport:
    """
    Validate chain parameters.

    Args:
        params: Chain configuration to check

    Returns:
        ValidationReport with errors and warnings

    Example:
        >>> validate(ChainParams(100, beta=1.0, kappa=1e-3)).valid
        True
        >>> validate(ChainParams(1, beta=1.0, kappa=1.0)).errors
        ['n_cavities ≥ 2 required, got 1']
    """
    report = ValidationReport()

    if not isinstance(params.n_cavities, (int, np.integer)):
        report.errors.append(
            f"n_cavities must be an integer, got {type(params.n_cavities).__name__}"
        )
    elif params.n_cavities < 2:
        report.errors.append(f"n_cavities ≥ 2 required, got {params.n_cavities}")

    for name in ("beta", "kappa", "delta"):
        value = getattr(params, name)
        if not np.isfinite(value):
            report.errors.append(f"{name} must be finite, got {value}")

    if params.beta < 0:
        report.errors.append(f"beta must be non-negative, got {params.beta}")
    if params.kappa < 0:
        report.errors.append(f"kappa must be non-negative, got {params.kappa}")

    if params.profile.kind is ProfileKind.CUSTOM and report.valid:
        report.errors.extend(_custom_weight_errors(params.profile, params.n_cavities))

    if params.beta == 0 and params.kappa == 0:
        report.warnings.append("beta = kappa = 0: evolution is a global phase only")

    for warning in report.warnings:
        log.warning("params.warning", detail=warning)

    return report
