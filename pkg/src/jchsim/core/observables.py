"""
Occupations, conditional position and dispersion, analytic envelopes and
speed extraction.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

import numpy as np
from scipy.stats import linregress

from jchsim.domain.errors import ModeUnoccupiedError, ValidationError
from jchsim.domain.params import CouplingProfile, SpinChainParams
from jchsim.domain.state import Mode, SingleExcitationState, SpinChainState

from .dynamics import LocalizedStart, Trajectory, initial_spin, spin_evolve

MODE_WEIGHT_THRESHOLD = 1e-12
MIN_FIT_SAMPLES = 5


@dataclass(frozen=True, eq=False)
class OccupationProfile:
    """Photon and atom occupation per cavity."""

    photonic: np.ndarray
    atomic: np.ndarray

    @property
    def total(self) -> float:
        return float(self.photonic.sum() + self.atomic.sum())


@dataclass(frozen=True)
class DispersionSample:
    """Conditional position of one mode: mean, spread and the mode's weight."""

    mode: Mode
    q_mean: float
    q_std: float
    mode_weight: float


@dataclass(frozen=True, eq=False)
class DispersionSeries:
    """``DispersionSample`` fields sampled along a trajectory."""

    mode: Mode
    times: np.ndarray
    q_mean: np.ndarray
    q_std: np.ndarray
    mode_weight: np.ndarray


def occupations(state: SingleExcitationState) -> OccupationProfile:
    """|amplitude|^2 per cavity, split by mode."""
    return OccupationProfile(np.abs(state.photonic) ** 2, np.abs(state.atomic) ** 2)


def mode_occupation(amplitudes: np.ndarray, mode: Mode) -> np.ndarray:
    """
    Occupation of one mode from raw amplitudes (leading axes carried through).

    JCH amplitudes are interleaved (photon, atom) per site; spin-chain
    amplitudes are used as they are with Mode.SPIN.
    """
    if mode is Mode.SPIN:
        return np.abs(amplitudes) ** 2
    offset = 0 if mode is Mode.PHOTONIC else 1
    return np.abs(amplitudes[..., offset::2]) ** 2


def _check_mode(mode: Mode, spin: bool) -> None:
    if spin != (mode is Mode.SPIN):
        kind = "spin-chain" if spin else "JCH"
        raise ValidationError(f"mode {mode.value} does not apply to a {kind} state")


def _moments(p: np.ndarray, mode: Mode) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    weight = p.sum(axis=-1)
    if np.any(weight <= MODE_WEIGHT_THRESHOLD):
        raise ModeUnoccupiedError(
            f"{mode.value} mode unoccupied (weight {float(np.min(weight)):.3e})"
        )
    q = np.arange(1, p.shape[-1] + 1, dtype=float)
    mean = (p @ q) / weight
    variance = (p * (q - mean[..., None]) ** 2).sum(axis=-1) / weight
    return mean, np.sqrt(np.maximum(variance, 0.0)), weight


def conditional_position(
    state: Union[SingleExcitationState, SpinChainState], mode: Mode
) -> DispersionSample:
    """
    Position statistics of one mode, normalized by that mode's weight.

    Raises:
        ModeUnoccupiedError: If the mode carries weight ≤ 1e-12
    """
    _check_mode(mode, isinstance(state, SpinChainState))
    mean, std, weight = _moments(mode_occupation(state.amplitudes, mode), mode)
    return DispersionSample(mode, float(mean), float(std), float(weight))


def occupation_series(trajectory: Trajectory, mode: Mode) -> np.ndarray:
    """(T, N) occupation of one mode along a trajectory."""
    _check_mode(mode, trajectory.is_spin)
    return mode_occupation(trajectory.amplitudes, mode)


def dispersion_series(trajectory: Trajectory, mode: Mode) -> DispersionSeries:
    """Conditional mean, spread and weight at every sample."""
    mean, std, weight = _moments(occupation_series(trajectory, mode), mode)
    return DispersionSeries(mode, trajectory.times, mean, std, weight)


def _check_rate(j_coupling: float) -> None:
    if j_coupling <= 0:
        raise ValidationError(f"J must be > 0, got {j_coupling}")


def _scalar_or_array(value):
    return float(value) if np.ndim(value) == 0 else value


def triangle_wave(n: int, j_coupling: float, t):
    """
    Wavefront of a localized start bouncing between the chain ends.

    Q = ((N-1)/pi) arcsin(sin(pi (J t / N - 1/2))) + (N+1)/2, so Q(0) = 1 and
    the slope magnitude is J (N-1)/N.
    """
    _check_rate(j_coupling)
    phase = np.pi * (j_coupling * np.asarray(t, dtype=float) / n - 0.5)
    return _scalar_or_array((n - 1) / np.pi * np.arcsin(np.sin(phase)) + (n + 1) / 2)


def triangle_wave_centered(n: int, j_coupling: float, t):
    """Triangle wave shifted by a quarter period to start at (N+1)/2."""
    _check_rate(j_coupling)
    phase = np.pi * j_coupling * np.asarray(t, dtype=float) / n
    return _scalar_or_array((n - 1) / np.pi * np.arcsin(np.sin(phase)) + (n + 1) / 2)


def gaussian_envelope(n: int, j_coupling: float, t, wavenumber: float = np.pi / 2):
    """
    Centered triangle wave oriented along the packet's group velocity.

    A packet exp(-i k Q) moves with velocity -J sin(k); for positive sin(k)
    it heads to Q = 1 first and the centered wave is mirrored about (N+1)/2.
    A packet with sin(k) = 0 does not move.
    """
    _check_rate(j_coupling)
    speed = j_coupling * abs(np.sin(wavenumber))
    if speed < 1e-12 * j_coupling:
        return _scalar_or_array(np.full(np.shape(t), (n + 1) / 2, dtype=float))
    forward = np.asarray(triangle_wave_centered(n, speed, t))
    if np.sin(wavenumber) > 0:
        forward = (n + 1) - forward
    return _scalar_or_array(forward)


def parabolic_position(n: int, j_coupling: float, t):
    """<Q(t)> = (N + 1 - (N-1) cos J t)/2 for the parabolic chain from site 1."""
    _check_rate(j_coupling)
    return _scalar_or_array(
        0.5 * (n + 1 - (n - 1) * np.cos(j_coupling * np.asarray(t, dtype=float)))
    )


class DispersionFraction(Enum):
    """How far the wavefront has travelled when the reference is sampled."""
    QUARTER = 0.25
    HALF = 0.5


def front_time(n: int, j_coupling: float, fraction: DispersionFraction) -> float:
    """First time the triangle wave reaches fraction * N."""
    _check_rate(j_coupling)
    return (fraction.value * n - 1.0) * n / ((n - 1) * j_coupling)


def heisenberg_dispersion_reference(
    n: int,
    j_coupling: float,
    fraction: DispersionFraction,
    profile: Optional[CouplingProfile] = None,
) -> float:
    """
    Spread of a spin-chain magnon started on site 1, sampled when its
    wavefront is a quarter or half way along the chain.
    """
    if n < 2:
        raise ValidationError(f"n_cavities ≥ 2 required, got {n}")
    params = SpinChainParams(n, j_coupling, profile or CouplingProfile.uniform())
    state = spin_evolve(
        initial_spin(n, LocalizedStart(1)), params, front_time(n, j_coupling, fraction)
    )
    return conditional_position(state, Mode.SPIN).q_std


class SpeedMethod(Enum):
    """
    How to turn a trajectory into a speed.

    CENTROID fits the conditional mean, which suits non-dispersing packets.
    PEAK fits the most occupied site, which tracks the front of a spreading
    localized start.
    """
    AUTO = "auto"
    CENTROID = "centroid"
    PEAK = "peak"


@dataclass(frozen=True)
class SpeedEstimate:
    """Least-squares speed fit."""

    speed: float
    slope: float
    residual: float
    n_samples: int
    method: SpeedMethod


def _resolve_method(method: SpeedMethod, first: np.ndarray) -> SpeedMethod:
    if method is not SpeedMethod.AUTO:
        return method
    # a point mass at t=0 marks a localized start
    return SpeedMethod.PEAK if np.max(first) >= 1.0 - 1e-9 else SpeedMethod.CENTROID


def measure_speed(
    trajectory: Trajectory,
    mode: Mode,
    window: Optional[tuple[float, float]] = None,
    method: SpeedMethod = SpeedMethod.AUTO,
) -> SpeedEstimate:
    """
    Fit the speed of one mode over a time window.

    The window should end before the mode first reaches a chain end.

    Args:
        trajectory: Sampled evolution
        mode: Mode to follow
        window: (t_start, t_end), inclusive; the whole trajectory when omitted
        method: CENTROID, PEAK, or AUTO (PEAK for localized starts)

    Returns:
        SpeedEstimate with |slope| as the speed and the RMS fit residual

    Raises:
        ModeUnoccupiedError: If the mode is empty in the window
        ValidationError: If fewer than 5 samples fall in the window
    """
    occupation = occupation_series(trajectory, mode)
    times = trajectory.times
    mask = np.ones(times.size, dtype=bool)
    if window is not None:
        mask = (times >= window[0]) & (times <= window[1])
    if int(mask.sum()) < MIN_FIT_SAMPLES:
        raise ValidationError(
            f"speed fit needs ≥ {MIN_FIT_SAMPLES} samples in the window, got {int(mask.sum())}"
        )

    weight = occupation.sum(axis=-1)
    resolved = _resolve_method(method, occupation[0] / max(weight[0], MODE_WEIGHT_THRESHOLD))
    selected = occupation[mask]
    if resolved is SpeedMethod.CENTROID:
        position, _, _ = _moments(selected, mode)
    else:
        _moments(selected, mode)
        position = np.argmax(selected, axis=-1).astype(float) + 1.0

    fit = linregress(times[mask], position)
    residual = position - (fit.intercept + fit.slope * times[mask])
    return SpeedEstimate(
        speed=abs(float(fit.slope)),
        slope=float(fit.slope),
        residual=float(np.sqrt(np.mean(residual**2))),
        n_samples=int(mask.sum()),
        method=resolved,
    )
