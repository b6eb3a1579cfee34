"""
One-excitation states and the interleaved basis.

Basis ordering is site-major: index 2(Q-1) is the photonic state
|Q> ⊗ |g,1> and index 2(Q-1)+1 the atomic state |Q> ⊗ |e,0>, Q = 1..N.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionMismatchError, ValidationError

NORM_TOLERANCE = 1e-10


class Mode(Enum):
    """Where the excitation sits: cavity photon, atom, or a spin-chain magnon."""
    PHOTONIC = "photonic"
    ATOMIC = "atomic"
    SPIN = "spin"


class Branch(Enum):
    """Dressed-state branch, upper (+) or lower (-)."""
    PLUS = "plus"
    MINUS = "minus"


def basis_index(q: int, mode: Mode, n_cavities: int) -> int:
    """
    Position of (cavity, mode) in the interleaved basis.

    Args:
        q: Cavity number, 1..N
        mode: PHOTONIC or ATOMIC
        n_cavities: Chain length N

    Returns:
        Index in 0..2N-1

    Raises:
        ValidationError: If q is out of range or mode is SPIN
    """
    if not 1 <= q <= n_cavities:
        raise ValidationError(f"cavity Q must be in 1..{n_cavities}, got {q}")
    if mode is Mode.PHOTONIC:
        return 2 * (q - 1)
    if mode is Mode.ATOMIC:
        return 2 * (q - 1) + 1
    raise ValidationError(f"mode {mode.value} has no place in the JCH basis")


def basis_decode(index: int, n_cavities: int) -> tuple[int, Mode]:
    """Inverse of ``basis_index``."""
    if not 0 <= index < 2 * n_cavities:
        raise ValidationError(f"index must be in 0..{2 * n_cavities - 1}, got {index}")
    q, parity = divmod(index, 2)
    return q + 1, Mode.ATOMIC if parity else Mode.PHOTONIC


def _frozen_amplitudes(amplitudes) -> np.ndarray:
    amps = np.array(amplitudes, dtype=complex)
    if amps.ndim != 1:
        raise DimensionMismatchError(f"amplitudes must be a vector, got shape {amps.shape}")
    amps.setflags(write=False)
    return amps


def _check_norm(amps: np.ndarray) -> None:
    n = float(np.linalg.norm(amps))
    if abs(n - 1.0) > NORM_TOLERANCE:
        raise ValidationError(f"state must have unit norm, got {n:.15g}")


@dataclass(frozen=True, eq=False)
class SingleExcitationState:
    """Complex amplitudes over the 2N-dimensional one-excitation basis."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = _frozen_amplitudes(self.amplitudes)
        if amps.size < 4 or amps.size % 2:
            raise DimensionMismatchError(
                f"JCH state needs an even length >= 4, got {amps.size}"
            )
        _check_norm(amps)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def normalized(cls, amplitudes) -> "SingleExcitationState":
        """Build a state from an unnormalized vector."""
        amps = np.asarray(amplitudes, dtype=complex)
        n = np.linalg.norm(amps)
        if n == 0:
            raise ValidationError("cannot normalize the zero vector")
        return cls(amps / n)

    @property
    def n_cavities(self) -> int:
        return self.amplitudes.size // 2

    @property
    def photonic(self) -> np.ndarray:
        return self.amplitudes[0::2]

    @property
    def atomic(self) -> np.ndarray:
        return self.amplitudes[1::2]

    def mirrored(self) -> "SingleExcitationState":
        """Reflect about the chain midpoint (Q -> N+1-Q), modes unchanged."""
        return SingleExcitationState(
            self.amplitudes.reshape(-1, 2)[::-1].reshape(-1)
        )


@dataclass(frozen=True, eq=False)
class SpinChainState:
    """Amplitudes over the single-up-spin basis |1>..|N>."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = _frozen_amplitudes(self.amplitudes)
        if amps.size < 2:
            raise DimensionMismatchError(f"spin state needs length >= 2, got {amps.size}")
        _check_norm(amps)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def normalized(cls, amplitudes) -> "SpinChainState":
        amps = np.asarray(amplitudes, dtype=complex)
        n = np.linalg.norm(amps)
        if n == 0:
            raise ValidationError("cannot normalize the zero vector")
        return cls(amps / n)

    @property
    def n_sites(self) -> int:
        return self.amplitudes.size

    def mirrored(self) -> "SpinChainState":
        return SpinChainState(self.amplitudes[::-1])


def _vector(state) -> np.ndarray:
    if isinstance(state, (SingleExcitationState, SpinChainState)):
        return state.amplitudes
    return np.asarray(state, dtype=complex)


def inner_product(a, b) -> complex:
    """
    Hermitian inner product <a|b>.

    Raises:
        DimensionMismatchError: If the vectors differ in length
    """
    va, vb = _vector(a), _vector(b)
    if va.shape != vb.shape:
        raise DimensionMismatchError(f"length mismatch: {va.size} vs {vb.size}")
    return complex(np.vdot(va, vb))


def norm(state) -> float:
    """l2 norm, sqrt(<state|state>)."""
    return float(np.sqrt(inner_product(state, state).real))
