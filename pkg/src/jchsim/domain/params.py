"""
Physical parameters of a JCH chain and of its reference Heisenberg chain.

Energies use hbar = 1. The atom and cavity frequencies enter the
one-excitation dynamics only through the detuning delta = omega - epsilon
(the remainder is a global phase), so only delta is stored.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from .errors import ValidationError


class ProfileKind(Enum):
    """Inter-cavity coupling patterns."""
    UNIFORM = "uniform"
    PARABOLIC = "parabolic"
    CUSTOM = "custom"


@dataclass(frozen=True)
class CouplingProfile:
    """
    Nearest-neighbour coupling weights A_{i,i+1} of the path graph.

    Uniform gives 1 on every bond, parabolic gives sqrt(i(N-i)) (1-based i),
    custom takes the weights verbatim.
    """

    kind: ProfileKind
    weights: Optional[tuple[float, ...]] = None

    @classmethod
    def uniform(cls) -> "CouplingProfile":
        return cls(ProfileKind.UNIFORM)

    @classmethod
    def parabolic(cls) -> "CouplingProfile":
        return cls(ProfileKind.PARABOLIC)

    @classmethod
    def custom(cls, weights) -> "CouplingProfile":
        return cls(ProfileKind.CUSTOM, tuple(float(w) for w in weights))

    @property
    def has_closed_form(self) -> bool:
        """True when the spectral module can diagonalize this profile."""
        return self.kind is not ProfileKind.CUSTOM

    def bond_weights(self, n_sites: int) -> np.ndarray:
        """
        Weights of the n_sites - 1 bonds.

        Args:
            n_sites: Number of sites in the chain

        Returns:
            Real array of length n_sites - 1
        """
        if self.kind is ProfileKind.UNIFORM:
            return np.ones(n_sites - 1)
        if self.kind is ProfileKind.PARABOLIC:
            i = np.arange(1, n_sites, dtype=float)
            return np.sqrt(i * (n_sites - i))
        return np.asarray(self.weights, dtype=float)

    def adjacency(self, n_sites: int) -> np.ndarray:
        """Dense symmetric adjacency matrix A (hard-wall path graph)."""
        w = self.bond_weights(n_sites)
        return np.diag(w, 1) + np.diag(w, -1)


@dataclass(frozen=True)
class ChainParams:
    """
    Configuration of a JCH chain.

    Attributes:
        n_cavities: Number of cavities N
        beta: Atom-photon coupling within a cavity
        kappa: Photon hopping between neighbouring cavities
        delta: Detuning omega - epsilon
        profile: Coupling pattern of the hopping term

    Construction does not reject bad values; call
    ``validate(params).raise_for_errors()`` (every solver does).
    """

    n_cavities: int
    beta: float
    kappa: float
    delta: float = 0.0
    profile: CouplingProfile = field(default_factory=CouplingProfile.uniform)

    @property
    def dimension(self) -> int:
        """Size of the one-excitation space, 2N."""
        return 2 * self.n_cavities


@dataclass(frozen=True)
class SpinChainParams:
    """Single-magnon Heisenberg chain H = -(J/2) A."""

    n_sites: int
    j_coupling: float
    profile: CouplingProfile = field(default_factory=CouplingProfile.uniform)

    def __post_init__(self) -> None:
        if self.n_sites < 2:
            raise ValidationError(f"n_sites must be >= 2, got {self.n_sites}")
        if self.j_coupling <= 0:
            raise ValidationError(f"j_coupling must be > 0, got {self.j_coupling}")
        if self.profile.kind is ProfileKind.CUSTOM:
            errors = _custom_weight_errors(self.profile, self.n_sites)
            if errors:
                raise ValidationError("; ".join(errors))


def _custom_weight_errors(profile: CouplingProfile, n_sites: int) -> list[str]:
    """Problems with a custom profile's weights, empty when none."""
    if profile.weights is None:
        return ["custom profile requires weights"]
    errors = []
    if len(profile.weights) != n_sites - 1:
        errors.append(
            f"custom weights must have length {n_sites - 1}, got {len(profile.weights)}"
        )
    if any(not np.isfinite(w) or w <= 0 for w in profile.weights):
        errors.append("weights must be positive")
    return errors
