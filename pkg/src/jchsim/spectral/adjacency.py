"""
Spatial eigenbases of the path-graph adjacency matrix A.

Uniform chain: lambda_k = 2 cos(k pi / (N+1)), |k> = sqrt(2/(N+1)) sin(Q k pi / (N+1)).
The textbook prefactor sqrt(2)(-1)^k sin(N k pi/(N+1)) / [sqrt(N+1) sin(k pi/(N+1))]
reduces to +-sqrt(2/(N+1)); the sign is fixed so the first entry is positive.

Parabolic chain: A_{i,i+1} = sqrt(i(N-i)), lambda_k = N - 1 - 2k with
Krawtchouk eigenvectors.

Index convention: column j (0-based) is uniform k = j + 1 and parabolic
k = j. Eigenvalues are descending in both cases.
"""

from dataclasses import dataclass

import numpy as np

from jchsim.domain.errors import UnsupportedProfileError, ValidationError
from jchsim.domain.params import CouplingProfile, ProfileKind

from .krawtchouk import krawtchouk_eigenvectors


@dataclass(frozen=True, eq=False)
class AdjacencyEigs:
    """Eigenvalues (descending) and orthonormal eigenvector columns of A."""

    eigenvalues: np.ndarray
    vectors: np.ndarray

    def __post_init__(self) -> None:
        self.eigenvalues.setflags(write=False)
        self.vectors.setflags(write=False)

    @property
    def n_sites(self) -> int:
        return self.eigenvalues.size


def _check_size(n: int) -> None:
    if n < 2:
        raise ValidationError(f"n_cavities ≥ 2 required, got {n}")


def uniform_adjacency_eigs(n: int) -> AdjacencyEigs:
    """
    Closed-form eigensystem of the uniform path graph.

    Args:
        n: Number of sites

    Returns:
        AdjacencyEigs with lambda_k = 2 cos(k pi/(n+1)), k = 1..n
    """
    _check_size(n)
    k = np.arange(1, n + 1)
    q = np.arange(1, n + 1)
    angle = np.pi / (n + 1)
    eigenvalues = 2.0 * np.cos(k * angle)
    vectors = np.sqrt(2.0 / (n + 1)) * np.sin(np.outer(q, k) * angle)
    return AdjacencyEigs(eigenvalues, vectors)


def parabolic_adjacency_eigs(n: int) -> AdjacencyEigs:
    """
    Closed-form eigensystem of the parabolic path graph.

    Args:
        n: Number of sites

    Returns:
        AdjacencyEigs with lambda_k = n - 1 - 2k, k = 0..n-1
    """
    _check_size(n)
    eigenvalues = (n - 1 - 2 * np.arange(n)).astype(float)
    return AdjacencyEigs(eigenvalues, krawtchouk_eigenvectors(n - 1))


def adjacency_eigs(profile: CouplingProfile, n: int) -> AdjacencyEigs:
    """
    Dispatch on the coupling profile.

    Raises:
        UnsupportedProfileError: For custom profiles (use the dense oracle)
    """
    if profile.kind is ProfileKind.UNIFORM:
        return uniform_adjacency_eigs(n)
    if profile.kind is ProfileKind.PARABOLIC:
        return parabolic_adjacency_eigs(n)
    raise UnsupportedProfileError(
        "custom coupling profiles have no closed-form spectrum; "
        "use jchsim.core.oracle (build_dense / oracle_evolve) instead"
    )
