"""
Closed-form one-excitation spectrum of the JCH chain.

In the basis |k> ⊗ {|g,1>, |e,0>}, with |k> an eigenvector of A, the
Hamiltonian (delta/2) I⊗Z + beta I⊗X - kappa A⊗(I+Z)/2 splits into 2x2 blocks

    H(k) = [[delta/2 - kappa lambda_k, beta],
            [beta,                     -delta/2]]

Each block's eigenvectors are written with a mixing angle,
theta = atan2(2 beta, a - d) / 2, which equals the normalized
(delta + 2E, 2beta) form for beta > 0 and stays well defined at beta = 0.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from jchsim.domain.errors import DegenerateDressedBasisError, ValidationError
from jchsim.domain.params import ChainParams
from jchsim.domain.validation import validate

from .adjacency import AdjacencyEigs, adjacency_eigs

PLUS, MINUS = 0, 1


@dataclass(frozen=True)
class DressedCoefficients:
    """Coefficients of |g,n> (photon) and |e,n-1> (atom) in a dressed state."""

    c_ground_photon: float
    c_excited_atom: float

    def __post_init__(self) -> None:
        total = self.c_ground_photon**2 + self.c_excited_atom**2
        if abs(total - 1.0) > 1e-12:
            raise ValidationError(f"dressed coefficients must be normalized, got {total}")


def _mixing(a, d, b):
    """Plus and minus eigenvectors (photon, atom) of [[a, b], [b, d]]."""
    theta = 0.5 * np.arctan2(2.0 * b, a - d)
    c, s = np.cos(theta), np.sin(theta)
    return np.stack([c, s], axis=-1), np.stack([s, -c], axis=-1)


def rabi(n: int, delta: float, beta: float) -> float:
    """Generalized Rabi frequency chi(n) = sqrt(n beta^2 + delta^2/4)."""
    if n < 1:
        raise ValidationError(f"excitation count n must be >= 1, got {n}")
    return float(np.sqrt(n * beta**2 + delta**2 / 4.0))


def dressed_state(
    n: int, delta: float, beta: float
) -> tuple[DressedCoefficients, DressedCoefficients]:
    """
    Single-cavity dressed states |+,n> and |-,n>.

    Args:
        n: Excitation count, >= 1
        delta: Detuning
        beta: Atom-photon coupling

    Returns:
        (plus, minus) coefficients, energies +chi(n) and -chi(n)

    Raises:
        DegenerateDressedBasisError: If beta = delta = 0
    """
    if n < 1:
        raise ValidationError(f"excitation count n must be >= 1, got {n}")
    if beta == 0 and delta == 0:
        raise DegenerateDressedBasisError("dressed basis degenerate (beta = delta = 0)")
    plus, minus = _mixing(delta / 2.0, -delta / 2.0, beta * np.sqrt(n))
    return DressedCoefficients(*map(float, plus)), DressedCoefficients(*map(float, minus))


def jch_block(
    k_index: int, params: ChainParams, adjacency: Optional[AdjacencyEigs] = None
) -> np.ndarray:
    """
    The 2x2 block H(k) for spatial mode k_index (0-based).

    Args:
        k_index: Column of the adjacency eigenbasis
        params: Chain parameters (uniform or parabolic profile)
        adjacency: Precomputed eigenbasis, built from params when omitted

    Returns:
        Real symmetric 2x2 matrix in (photon, atom) order

    Raises:
        UnsupportedProfileError: For custom profiles
    """
    validate(params).raise_for_errors()
    eigs = adjacency or adjacency_eigs(params.profile, params.n_cavities)
    if not 0 <= k_index < eigs.n_sites:
        raise ValidationError(f"k_index must be in 0..{eigs.n_sites - 1}, got {k_index}")
    lam = eigs.eigenvalues[k_index]
    return np.array(
        [
            [params.delta / 2.0 - params.kappa * lam, params.beta],
            [params.beta, -params.delta / 2.0],
        ]
    )


@dataclass(frozen=True, eq=False)
class BlockSpectrum:
    """
    Eigenpairs of every block, plus the spatial basis they sit on.

    energies[k] = (E+, E-) and mixing[k, branch] = (photon, atom)
    coefficients, branch 0 = plus, 1 = minus.
    """

    params: ChainParams
    adjacency: AdjacencyEigs
    energies: np.ndarray
    mixing: np.ndarray

    def __post_init__(self) -> None:
        self.energies.setflags(write=False)
        self.mixing.setflags(write=False)

    @property
    def n_cavities(self) -> int:
        return self.adjacency.n_sites

    @property
    def e_plus(self) -> np.ndarray:
        return self.energies[:, PLUS]

    @property
    def e_minus(self) -> np.ndarray:
        return self.energies[:, MINUS]

    def mix_plus(self, k_index: int) -> DressedCoefficients:
        return DressedCoefficients(*map(float, self.mixing[k_index, PLUS]))

    def mix_minus(self, k_index: int) -> DressedCoefficients:
        return DressedCoefficients(*map(float, self.mixing[k_index, MINUS]))

    def eigenvalues(self) -> np.ndarray:
        """All 2N energies; entry 2k + branch matches column 2k + branch of vectors()."""
        return self.energies.reshape(-1)

    def vectors(self) -> np.ndarray:
        """Full 2N x 2N eigenvector matrix in the interleaved basis."""
        u = self.adjacency.vectors
        n = self.n_cavities
        # [site, mode, k, branch]
        v = np.einsum("qk,kbm->qmkb", u, self.mixing)
        return v.reshape(2 * n, 2 * n)

    def project(self, amplitudes: np.ndarray) -> np.ndarray:
        """Coefficients <±,k|psi> as an (N, 2) array."""
        psi = amplitudes.reshape(self.n_cavities, 2)
        spatial = self.adjacency.vectors.T @ psi
        return np.einsum("kbm,km->kb", self.mixing, spatial)

    def reconstruct(self, coefficients: np.ndarray) -> np.ndarray:
        """
        Inverse of ``project``; leading axes of coefficients are carried through.

        Args:
            coefficients: (..., N, 2) array of <±,k|psi>

        Returns:
            (..., 2N) amplitudes
        """
        spatial = np.einsum("kbm,...kb->...km", self.mixing, coefficients)
        psi = np.einsum("qk,...km->...qm", self.adjacency.vectors, spatial)
        return psi.reshape(*coefficients.shape[:-2], 2 * self.n_cavities)


def jch_spectrum(params: ChainParams) -> BlockSpectrum:
    """
    Diagonalize the one-excitation Hamiltonian in closed form.

    Args:
        params: Chain parameters with a uniform or parabolic profile

    Returns:
        BlockSpectrum with E+ >= E- for every k

    Raises:
        ValidationError: If params are invalid
        UnsupportedProfileError: For custom profiles
    """
    validate(params).raise_for_errors()
    eigs = adjacency_eigs(params.profile, params.n_cavities)

    a = params.delta / 2.0 - params.kappa * eigs.eigenvalues
    d = np.full_like(a, -params.delta / 2.0)
    b = np.full_like(a, params.beta)

    mean = 0.5 * (a + d)
    radius = np.hypot(0.5 * (a - d), b)
    energies = np.stack([mean + radius, mean - radius], axis=-1)

    plus, minus = _mixing(a, d, b)
    mixing = np.stack([plus, minus], axis=1)
    return BlockSpectrum(params, eigs, energies, mixing)
