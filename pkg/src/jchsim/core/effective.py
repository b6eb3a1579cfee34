"""
Limit-regime effective models and their speed predictions.

Three regimes have simple effective Hamiltonians:

- small kappa (delta = 0, kappa << beta): both modes hop as one Heisenberg
  chain, H = -(kappa/2) A⊗I, speed kappa each;
- large kappa (delta = 0, kappa >> beta): the photon hops alone,
  H = -kappa A⊗(I+Z)/2, speed 2 kappa, the atom stays put;
- large detuning (|delta| >> kappa, beta): photon and atom hop at very
  different speeds and an A⊗X term couples the two chains.

Thresholds sit one decade past where the limit behaviour is clean. They are
engineering choices, not derived bounds.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional

import numpy as np

from jchsim.domain.errors import ValidationError
from jchsim.domain.params import ChainParams
from jchsim.domain.state import Mode, SingleExcitationState, basis_index
from jchsim.domain.validation import validate
from jchsim.spectral.blocks import jch_spectrum

from .dynamics import Trajectory, evolve_series
from .oracle import (
    ATOM_PROJECTOR,
    PAULI_X,
    PHOTON_PROJECTOR,
    DenseHamiltonian,
    build_dense,
    oracle_evolve_series,
)

SMALL_KAPPA_RATIO = 1e-2
LARGE_KAPPA_RATIO = 1e2
LARGE_DETUNING_RATIO = 1e2

NO_PREDICTION = "intermediate regime - no prediction"
DETUNING_SIGN_CAVEAT = (
    "formulas are even in delta; the exact dynamics is not symmetric under "
    "delta -> -delta and that asymmetry is not modelled"
)


class Regime(Enum):
    """Parameter regimes with a known effective model."""
    SMALL_KAPPA = "small_kappa"
    LARGE_KAPPA = "large_kappa"
    LARGE_DETUNING = "large_detuning"
    INTERMEDIATE = "intermediate"


@dataclass(frozen=True)
class SpeedPrediction:
    """Heisenberg speeds of the photonic and atomic modes in a regime."""

    j_photonic: Optional[float]
    j_atomic: Optional[float]
    regime: Regime
    validity_note: str

    @property
    def has_prediction(self) -> bool:
        return self.regime is not Regime.INTERMEDIATE

    def to_dict(self) -> dict[str, Any]:
        return {
            "regime": self.regime.value,
            "j_photonic": self.j_photonic,
            "j_atomic": self.j_atomic,
            "validity_note": self.validity_note,
        }


def classify_regime(params: ChainParams) -> Regime:
    """
    Place params in a regime.

    small_kappa: delta = 0 and kappa/beta ≤ 1e-2
    large_kappa: delta = 0 and kappa/beta ≥ 1e2
    large_detuning: |delta| ≥ 1e2 max(kappa, beta)
    """
    validate(params).raise_for_errors()
    kappa, beta, delta = params.kappa, params.beta, params.delta
    if delta == 0:
        if beta > 0 and kappa <= SMALL_KAPPA_RATIO * beta:
            return Regime.SMALL_KAPPA
        if kappa > 0 and kappa >= LARGE_KAPPA_RATIO * beta:
            return Regime.LARGE_KAPPA
        return Regime.INTERMEDIATE
    if abs(delta) >= LARGE_DETUNING_RATIO * max(kappa, beta):
        return Regime.LARGE_DETUNING
    return Regime.INTERMEDIATE


def _detuning_fraction(params: ChainParams) -> float:
    """2 beta^2 / (delta^2 + 4 beta^2)."""
    denominator = params.delta**2 + 4.0 * params.beta**2
    return 2.0 * params.beta**2 / denominator if denominator > 0 else 0.0


def predicted_speeds(params: ChainParams) -> SpeedPrediction:
    """
    Speeds of each mode from the effective model of the params' regime.

    Intermediate params get a prediction with both speeds None and the
    NO_PREDICTION note.
    """
    regime = classify_regime(params)
    kappa = params.kappa
    if regime is Regime.SMALL_KAPPA:
        return SpeedPrediction(
            kappa, kappa, regime, f"kappa/beta ≤ {SMALL_KAPPA_RATIO:g} at zero detuning"
        )
    if regime is Regime.LARGE_KAPPA:
        return SpeedPrediction(
            2.0 * kappa, 0.0, regime, f"kappa/beta ≥ {LARGE_KAPPA_RATIO:g} at zero detuning"
        )
    if regime is Regime.LARGE_DETUNING:
        fraction = _detuning_fraction(params)
        return SpeedPrediction(
            2.0 * kappa * (1.0 - fraction),
            kappa * fraction,
            regime,
            f"|delta| ≥ {LARGE_DETUNING_RATIO:g} max(kappa, beta); {DETUNING_SIGN_CAVEAT}",
        )
    return SpeedPrediction(None, None, regime, NO_PREDICTION)


def effective_hamiltonian(
    params: ChainParams,
    regime: Optional[Regime] = None,
    include_x_term: bool = True,
) -> DenseHamiltonian:
    """
    Effective one-excitation Hamiltonian of a regime, interleaved basis.

    The large-detuning model is
    -kappa A⊗[c_p (I+Z)/2 + c_a (I-Z)/2 + c_x X] with
    c_p = 1 - 2b^2/(d^2+4b^2), c_a = 2b^2/(d^2+4b^2), c_x = d b/(d^2+4b^2).

    Args:
        params: Chain parameters
        regime: Regime to build, classified from params when omitted
        include_x_term: Keep the A⊗X coupling (large detuning only)

    Raises:
        ValidationError: For the intermediate regime
    """
    validate(params).raise_for_errors()
    regime = regime or classify_regime(params)
    adjacency = params.profile.adjacency(params.n_cavities)
    kappa = params.kappa

    if regime is Regime.SMALL_KAPPA:
        local = 0.5 * np.eye(2)
    elif regime is Regime.LARGE_KAPPA:
        local = PHOTON_PROJECTOR
    elif regime is Regime.LARGE_DETUNING:
        fraction = _detuning_fraction(params)
        denominator = params.delta**2 + 4.0 * params.beta**2
        local = (1.0 - fraction) * PHOTON_PROJECTOR + fraction * ATOM_PROJECTOR
        if include_x_term and denominator > 0:
            local = local + (params.delta * params.beta / denominator) * PAULI_X
    else:
        raise ValidationError(f"no effective model for regime {regime.value}")

    return DenseHamiltonian(-kappa * np.kron(adjacency, local), params)


def x_term_matrix(n: int, j: int) -> np.ndarray:
    """
    X_{j,j+1} in the one-excitation basis (1-based j).

    sigma+_j a_{j+1} + sigma-_j a†_{j+1} + sigma+_{j+1} a_j + sigma-_{j+1} a†_j
    """
    if not 1 <= j < n:
        raise ValidationError(f"bond j must be in 1..{n - 1}, got {j}")
    matrix = np.zeros((2 * n, 2 * n))
    for atom_site, photon_site in ((j, j + 1), (j + 1, j)):
        a = basis_index(atom_site, Mode.ATOMIC, n)
        p = basis_index(photon_site, Mode.PHOTONIC, n)
        matrix[a, p] = matrix[p, a] = 1.0
    return matrix


def nnn_hop_matrix(n: int, j: int) -> np.ndarray:
    """
    sigma+_j sigma-_{j+2} - sigma+_{j+2} sigma-_j + a†_j a_{j+2} - a†_{j+2} a_j
    in the one-excitation basis (1-based j).
    """
    if not 1 <= j <= n - 2:
        raise ValidationError(f"site j must be in 1..{n - 2}, got {j}")
    matrix = np.zeros((2 * n, 2 * n))
    for mode in (Mode.ATOMIC, Mode.PHOTONIC):
        near = basis_index(j, mode, n)
        far = basis_index(j + 2, mode, n)
        matrix[near, far] = 1.0
        matrix[far, near] = -1.0
    return matrix


def x_term_commutator_check(n: int) -> float:
    """
    Largest entry of [X_{j,j+1}, X_{j+1,j+2}] - nnn_hop(j) over all j.

    Within one excitation, [X_{j,j+1}, X_{j+1,j+2}] equals the antisymmetric
    next-nearest-neighbour hop with a plus sign; reversing the order of the
    commutator flips it.
    """
    if n < 3:
        raise ValidationError(f"commutator check needs n ≥ 3, got {n}")
    defect = 0.0
    for j in range(1, n - 1):
        left, right = x_term_matrix(n, j), x_term_matrix(n, j + 1)
        commutator = left @ right - right @ left
        defect = max(defect, float(np.max(np.abs(commutator - nnn_hop_matrix(n, j)))))
    return defect


def _full_trajectory(params: ChainParams, state0: SingleExcitationState, times) -> Trajectory:
    if params.profile.has_closed_form:
        return evolve_series(state0, jch_spectrum(params), times)
    return oracle_evolve_series(state0, build_dense(params), times)


def _max_occupation_gap(a: Trajectory, b: Trajectory) -> float:
    return float(np.max(np.abs(np.abs(a.amplitudes) ** 2 - np.abs(b.amplitudes) ** 2)))


def fidelity_defect(
    params: ChainParams,
    state0: SingleExcitationState,
    times,
    regime: Optional[Regime] = None,
) -> float:
    """
    Max occupation deviation between full and effective dynamics.

    Occupations are compared directly, without undoing the frame change that
    produces the effective model. That rotation mixes photon and atom on each
    site, so occupations are only approximately invariant under it, and the
    gap shrinks as |delta| grows.
    """
    effective = effective_hamiltonian(params, regime)
    full = _full_trajectory(params, state0, times)
    return _max_occupation_gap(full, oracle_evolve_series(state0, effective, times))


def x_term_defect(params: ChainParams, state0: SingleExcitationState, times) -> float:
    """
    Max occupation deviation the A⊗X term causes in the large-detuning model.

    Scales as (kappa delta beta / (delta^2 + 4 beta^2))^2.
    """
    with_x = effective_hamiltonian(params, Regime.LARGE_DETUNING, include_x_term=True)
    without_x = effective_hamiltonian(params, Regime.LARGE_DETUNING, include_x_term=False)
    return _max_occupation_gap(
        oracle_evolve_series(state0, with_x, times),
        oracle_evolve_series(state0, without_x, times),
    )
