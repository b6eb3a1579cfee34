"""
Dense-matrix reference for the one-excitation Hamiltonian.

Everything here is built from the definition alone (Kronecker products and
a numerical symmetric eigensolver), independently of the closed-form
spectrum, so it can be used to check it. Custom coupling profiles, which
have no closed form, also run through this path.
"""

from dataclasses import dataclass
from typing import Any, Union

import numpy as np
from scipy.linalg import eigh, subspace_angles

from jchsim.domain.errors import DimensionMismatchError, ValidationError
from jchsim.domain.params import ChainParams, SpinChainParams
from jchsim.domain.state import SingleExcitationState, SpinChainState
from jchsim.domain.validation import validate
from jchsim.log import get_logger
from jchsim.spectral.blocks import BlockSpectrum

from .dynamics import State, Trajectory, check_times

log = get_logger(__name__)

MAX_DENSE_SITES = 512
CLUSTER_TOLERANCE = 1e-8

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]])
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]])
PHOTON_PROJECTOR = np.array([[1.0, 0.0], [0.0, 0.0]])  # (I + Z)/2
ATOM_PROJECTOR = np.array([[0.0, 0.0], [0.0, 1.0]])  # (I - Z)/2


@dataclass(frozen=True, eq=False)
class DenseHamiltonian:
    """Real symmetric Hamiltonian matrix with the parameters it came from."""

    matrix: np.ndarray
    params: Union[ChainParams, SpinChainParams]

    def __post_init__(self) -> None:
        self.matrix.setflags(write=False)

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]


def _check_dense_size(n: int) -> None:
    if n > MAX_DENSE_SITES:
        raise ValidationError(f"dense oracle supports N ≤ {MAX_DENSE_SITES}, got {n}")


def build_dense(params: ChainParams) -> DenseHamiltonian:
    """
    (delta/2) I⊗Z + beta I⊗X - kappa A⊗(I+Z)/2 in the interleaved basis.

    Args:
        params: Chain parameters, any profile

    Returns:
        DenseHamiltonian of size 2N x 2N

    Example:
        >>> build_dense(ChainParams(2, beta=1.0, kappa=1.0)).matrix[0, 2]
        -1.0
    """
    validate(params).raise_for_errors()
    _check_dense_size(params.n_cavities)
    identity = np.eye(params.n_cavities)
    adjacency = params.profile.adjacency(params.n_cavities)
    matrix = (
        0.5 * params.delta * np.kron(identity, PAULI_Z)
        + params.beta * np.kron(identity, PAULI_X)
        - params.kappa * np.kron(adjacency, PHOTON_PROJECTOR)
    )
    return DenseHamiltonian(matrix, params)


def build_dense_spin(spin_params: SpinChainParams) -> DenseHamiltonian:
    """Single-magnon Heisenberg matrix -(J/2) A."""
    _check_dense_size(spin_params.n_sites)
    matrix = -0.5 * spin_params.j_coupling * spin_params.profile.adjacency(spin_params.n_sites)
    return DenseHamiltonian(matrix, spin_params)


def _as_matrix(hamiltonian) -> np.ndarray:
    if isinstance(hamiltonian, DenseHamiltonian):
        return hamiltonian.matrix
    return np.asarray(hamiltonian, dtype=float)


def dense_eigensystem(hamiltonian) -> tuple[np.ndarray, np.ndarray]:
    """
    Numerical eigendecomposition of a real symmetric matrix.

    Args:
        hamiltonian: DenseHamiltonian or square array

    Returns:
        (eigenvalues ascending, orthonormal eigenvector columns)

    Raises:
        ValidationError: If the matrix is not square and symmetric
    """
    matrix = _as_matrix(hamiltonian)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {matrix.shape}")
    scale = max(1.0, float(np.max(np.abs(matrix)))) if matrix.size else 1.0
    if np.max(np.abs(matrix - matrix.T), initial=0.0) > 1e-12 * scale:
        raise ValidationError("matrix is not symmetric")
    eigenvalues, vectors = eigh(matrix)
    return eigenvalues, vectors


def _propagator_inputs(state: State, hamiltonian):
    matrix = _as_matrix(hamiltonian)
    if state.amplitudes.size != matrix.shape[0]:
        raise DimensionMismatchError(
            f"state length {state.amplitudes.size} vs matrix size {matrix.shape[0]}"
        )
    eigenvalues, vectors = dense_eigensystem(matrix)
    return eigenvalues, vectors, vectors.T @ state.amplitudes


def oracle_evolve(state: State, hamiltonian, t: float) -> State:
    """
    psi(t) = V exp(-i Lambda t) V^T psi(0) from a dense eigensolve.

    Returns a state of the same kind as the input.
    """
    eigenvalues, vectors, coefficients = _propagator_inputs(state, hamiltonian)
    return type(state)(vectors @ (coefficients * np.exp(-1j * eigenvalues * t)))


def oracle_evolve_series(state: State, hamiltonian: DenseHamiltonian, times) -> Trajectory:
    """Dense-path counterpart of ``evolve_series``, used for custom profiles."""
    grid = check_times(times)
    eigenvalues, vectors, coefficients = _propagator_inputs(state, hamiltonian)
    rotated = coefficients[None, :] * np.exp(-1j * np.outer(grid, eigenvalues))
    return Trajectory(grid, rotated @ vectors.T, hamiltonian.params)


@dataclass
class SpectrumComparison:
    """Agreement between the closed-form and the numerical spectrum."""

    max_eigenvalue_deviation: float
    max_subspace_angle: float
    energy_scale: float
    n_clusters: int

    def passed(self, eigenvalue_tolerance: float = 1e-9, angle_tolerance: float = 1e-7) -> bool:
        """Eigenvalues within tolerance * energy_scale, angles below angle_tolerance."""
        return (
            self.max_eigenvalue_deviation <= eigenvalue_tolerance * self.energy_scale
            and self.max_subspace_angle <= angle_tolerance
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "max_eigenvalue_deviation": self.max_eigenvalue_deviation,
            "max_subspace_angle": self.max_subspace_angle,
            "energy_scale": self.energy_scale,
            "n_clusters": self.n_clusters,
        }


def _clusters(eigenvalues: np.ndarray, tolerance: float) -> list[slice]:
    """Runs of sorted eigenvalues whose consecutive gaps are within tolerance."""
    breaks = np.flatnonzero(np.diff(eigenvalues) > tolerance) + 1
    edges = [0, *breaks.tolist(), eigenvalues.size]
    return [slice(lo, hi) for lo, hi in zip(edges[:-1], edges[1:])]


def compare_spectra(analytic: BlockSpectrum, numeric) -> SpectrumComparison:
    """
    Compare a closed-form spectrum against a numerical eigensystem.

    Eigenvalues are matched as sorted multisets. Eigenvectors are compared
    through principal angles between matching eigenspaces, where eigenvalues
    closer than 1e-8 * max(1, max|E|) form one degenerate cluster.

    Args:
        analytic: Closed-form spectrum
        numeric: (eigenvalues, vectors) from ``dense_eigensystem``, or a
            DenseHamiltonian to decompose

    Returns:
        SpectrumComparison report

    Raises:
        DimensionMismatchError: If the sizes differ
    """
    if isinstance(numeric, DenseHamiltonian):
        numeric = dense_eigensystem(numeric)
    numeric_values, numeric_vectors = numeric

    values = analytic.eigenvalues()
    if values.size != numeric_values.size:
        raise DimensionMismatchError(
            f"analytic spectrum has {values.size} levels, numeric {numeric_values.size}"
        )
    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = analytic.vectors()[:, order]

    scale = max(1.0, float(np.max(np.abs(numeric_values))))
    clusters = _clusters(numeric_values, CLUSTER_TOLERANCE * scale)
    angle = max(
        float(np.max(subspace_angles(vectors[:, c], numeric_vectors[:, c])))
        for c in clusters
    )
    report = SpectrumComparison(
        max_eigenvalue_deviation=float(np.max(np.abs(values - numeric_values))),
        max_subspace_angle=angle,
        energy_scale=scale,
        n_clusters=len(clusters),
    )
    log.debug("oracle.compare", n=analytic.n_cavities, **report.to_dict())
    return report
