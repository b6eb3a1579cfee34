"""
Closed-form spectra: adjacency eigenbases, Krawtchouk polynomials, JCH blocks.
"""

from .adjacency import (
    AdjacencyEigs,
    adjacency_eigs,
    parabolic_adjacency_eigs,
    uniform_adjacency_eigs,
)
from .blocks import (
    BlockSpectrum,
    DressedCoefficients,
    dressed_state,
    jch_block,
    jch_spectrum,
    rabi,
)
from .krawtchouk import krawtchouk, krawtchouk_eigenvectors, recurrence_defect

__all__ = [
    "AdjacencyEigs",
    "BlockSpectrum",
    "DressedCoefficients",
    "adjacency_eigs",
    "dressed_state",
    "jch_block",
    "jch_spectrum",
    "krawtchouk",
    "krawtchouk_eigenvectors",
    "parabolic_adjacency_eigs",
    "rabi",
    "recurrence_defect",
    "uniform_adjacency_eigs",
]
