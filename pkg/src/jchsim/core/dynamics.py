"""
Initial states and exact time evolution.

JCH states are propagated through the closed-form block spectrum: project
once onto the |±,k> eigenbasis, rotate phases per sample, and map back.
The reference Heisenberg chain H = -(J/2) A is propagated the same way on
the spatial eigenbasis alone.
"""

from dataclasses import dataclass
from typing import Union

import numpy as np

from jchsim.domain.errors import DimensionMismatchError, ValidationError
from jchsim.domain.params import ChainParams, SpinChainParams
from jchsim.domain.state import (
    NORM_TOLERANCE,
    Branch,
    SingleExcitationState,
    SpinChainState,
)
from jchsim.spectral.adjacency import AdjacencyEigs, adjacency_eigs
from jchsim.spectral.blocks import BlockSpectrum, dressed_state

State = Union[SingleExcitationState, SpinChainState]


@dataclass(frozen=True)
class LocalizedStart:
    """Excitation on a single site."""
    q0: int = 1


@dataclass(frozen=True)
class GaussianStart:
    """Gaussian packet exp(-(Q-qc)^2/(2 width^2)) exp(-i wavenumber Q)."""
    qc: float
    width: float
    wavenumber: float = np.pi / 2


@dataclass(frozen=True, eq=False)
class Trajectory:
    """
    Sampled evolution of one initial state.

    Attributes:
        times: Strictly increasing sample times
        amplitudes: (T, dim) complex array, one row per sample
        params: ChainParams for JCH runs, SpinChainParams for spin runs
    """

    times: np.ndarray
    amplitudes: np.ndarray
    params: Union[ChainParams, SpinChainParams]

    def __post_init__(self) -> None:
        check_times(self.times)
        if self.amplitudes.ndim != 2 or self.amplitudes.shape[0] != self.times.size:
            raise DimensionMismatchError(
                f"amplitudes shape {self.amplitudes.shape} does not match "
                f"{self.times.size} samples"
            )
        deviation = np.max(np.abs(np.linalg.norm(self.amplitudes, axis=1) - 1.0))
        if deviation > NORM_TOLERANCE:
            raise ValidationError(f"trajectory lost normalization ({deviation:.3e})")
        self.times.setflags(write=False)
        self.amplitudes.setflags(write=False)

    @property
    def is_spin(self) -> bool:
        return isinstance(self.params, SpinChainParams)

    @property
    def n_sites(self) -> int:
        width = self.amplitudes.shape[1]
        return width if self.is_spin else width // 2

    def __len__(self) -> int:
        return self.times.size

    def state(self, index: int) -> State:
        if self.is_spin:
            return SpinChainState(self.amplitudes[index])
        return SingleExcitationState(self.amplitudes[index])

    @property
    def states(self) -> list[State]:
        return [self.state(i) for i in range(len(self))]


def check_times(times: np.ndarray) -> np.ndarray:
    """
    Validate a sample grid.

    Raises:
        ValidationError: If times is empty, not 1-D or not strictly increasing
    """
    grid = np.asarray(times, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValidationError("times must be a non-empty vector")
    if np.any(np.diff(grid) <= 0):
        raise ValidationError("times must be strictly increasing")
    return grid


def _check_sites(n: int) -> None:
    if n < 2:
        raise ValidationError(f"n_cavities ≥ 2 required, got {n}")


def _site_index(q0: int, n: int) -> int:
    if not 1 <= q0 <= n:
        raise ValidationError(f"site must be in 1..{n}, got {q0}")
    return q0 - 1


def gaussian_profile(n: int, qc: float, width: float, wavenumber: float) -> np.ndarray:
    """Unnormalized spatial Gaussian over Q = 1..n."""
    if width <= 0:
        raise ValidationError(f"width must be > 0, got {width}")
    q = np.arange(1, n + 1, dtype=float)
    return np.exp(-((q - qc) ** 2) / (2.0 * width**2)) * np.exp(-1j * wavenumber * q)


def initial_localized_superposition(n: int, q0: int = 1) -> SingleExcitationState:
    """(|g,1> + |e,0>)/sqrt(2) on cavity q0."""
    _check_sites(n)
    site = _site_index(q0, n)
    amps = np.zeros(2 * n, dtype=complex)
    amps[2 * site] = amps[2 * site + 1] = 1.0 / np.sqrt(2.0)
    return SingleExcitationState(amps)


def initial_dressed(
    n: int, q0: int, branch: Branch, params: ChainParams
) -> SingleExcitationState:
    """
    Single-cavity dressed state |±,1> placed on cavity q0.

    Raises:
        DegenerateDressedBasisError: If beta = delta = 0
    """
    _check_sites(n)
    site = _site_index(q0, n)
    plus, minus = dressed_state(1, params.delta, params.beta)
    coeffs = plus if branch is Branch.PLUS else minus
    amps = np.zeros(2 * n, dtype=complex)
    amps[2 * site] = coeffs.c_ground_photon
    amps[2 * site + 1] = coeffs.c_excited_atom
    return SingleExcitationState.normalized(amps)


def initial_gaussian_jch(
    n: int, qc: float, width: float, wavenumber: float = np.pi / 2
) -> SingleExcitationState:
    """
    Gaussian packet in both modes, (|g,1> + |e,0>)/sqrt(2) on every site.

    Normalized over the finite chain; qc may be non-integer.
    """
    _check_sites(n)
    envelope = gaussian_profile(n, qc, width, wavenumber)
    amps = np.repeat(envelope, 2) / np.sqrt(2.0)
    return SingleExcitationState.normalized(amps)


def initial_spin(n: int, start: Union[LocalizedStart, GaussianStart]) -> SpinChainState:
    """Single-magnon initial state, localized or Gaussian."""
    _check_sites(n)
    if isinstance(start, LocalizedStart):
        amps = np.zeros(n, dtype=complex)
        amps[_site_index(start.q0, n)] = 1.0
        return SpinChainState(amps)
    return SpinChainState.normalized(
        gaussian_profile(n, start.qc, start.width, start.wavenumber)
    )


def _check_spectrum(state: SingleExcitationState, spectrum: BlockSpectrum) -> None:
    if state.n_cavities != spectrum.n_cavities:
        raise DimensionMismatchError(
            f"state has {state.n_cavities} cavities, spectrum {spectrum.n_cavities}"
        )


def evolve(
    state0: SingleExcitationState, spectrum: BlockSpectrum, t: float
) -> SingleExcitationState:
    """
    Exact propagation psi(t) = sum e^{-i E t} |±,k><±,k|psi(0)>.

    Args:
        state0: Initial state
        spectrum: Block spectrum of the same chain
        t: Time, negative values run backwards

    Returns:
        The evolved state

    Raises:
        DimensionMismatchError: If state and spectrum disagree on N
    """
    _check_spectrum(state0, spectrum)
    coefficients = spectrum.project(state0.amplitudes)
    rotated = coefficients * np.exp(-1j * spectrum.energies * t)
    return SingleExcitationState(spectrum.reconstruct(rotated))


def evolve_series(
    state0: SingleExcitationState, spectrum: BlockSpectrum, times
) -> Trajectory:
    """
    Evolve onto a grid of times, projecting the initial state once.

    Raises:
        ValidationError: If times are not strictly increasing
        DimensionMismatchError: If state and spectrum disagree on N
    """
    grid = check_times(times)
    _check_spectrum(state0, spectrum)
    coefficients = spectrum.project(state0.amplitudes)
    phases = np.exp(-1j * grid[:, None, None] * spectrum.energies[None, :, :])
    amplitudes = spectrum.reconstruct(coefficients[None, :, :] * phases)
    return Trajectory(grid, amplitudes, spectrum.params)


def expected_energy(state: SingleExcitationState, spectrum: BlockSpectrum) -> float:
    """<psi|H|psi> from the block spectrum."""
    _check_spectrum(state, spectrum)
    weights = np.abs(spectrum.project(state.amplitudes)) ** 2
    return float(np.sum(weights * spectrum.energies))


def _spin_basis(state0: SpinChainState, spin_params: SpinChainParams) -> AdjacencyEigs:
    if state0.n_sites != spin_params.n_sites:
        raise DimensionMismatchError(
            f"state has {state0.n_sites} sites, params {spin_params.n_sites}"
        )
    return adjacency_eigs(spin_params.profile, spin_params.n_sites)


def spin_evolve(
    state0: SpinChainState, spin_params: SpinChainParams, t: float
) -> SpinChainState:
    """
    Single-magnon Heisenberg evolution under -(J/2) A.

    Raises:
        UnsupportedProfileError: For custom profiles (use the dense oracle)
    """
    eigs = _spin_basis(state0, spin_params)
    energies = -0.5 * spin_params.j_coupling * eigs.eigenvalues
    coefficients = eigs.vectors.T @ state0.amplitudes
    return SpinChainState(eigs.vectors @ (coefficients * np.exp(-1j * energies * t)))


def spin_evolve_series(
    state0: SpinChainState, spin_params: SpinChainParams, times
) -> Trajectory:
    """Vectorized ``spin_evolve`` over a grid of times."""
    grid = check_times(times)
    eigs = _spin_basis(state0, spin_params)
    energies = -0.5 * spin_params.j_coupling * eigs.eigenvalues
    coefficients = eigs.vectors.T @ state0.amplitudes
    rotated = coefficients[None, :] * np.exp(-1j * np.outer(grid, energies))
    return Trajectory(grid, rotated @ eigs.vectors.T, spin_params)
