"""
jchsim core - time evolution, observables, dense oracle, effective models
and the sweep engine.
"""

from .dynamics import (
    GaussianStart,
    LocalizedStart,
    Trajectory,
    evolve,
    evolve_series,
    initial_dressed,
    initial_gaussian_jch,
    initial_localized_superposition,
    initial_spin,
    spin_evolve,
    spin_evolve_series,
)
from .effective import (
    Regime,
    SpeedPrediction,
    classify_regime,
    effective_hamiltonian,
    predicted_speeds,
    x_term_commutator_check,
)
from .engine import SweepEngine
from .observables import (
    DispersionFraction,
    DispersionSample,
    OccupationProfile,
    SpeedMethod,
    conditional_position,
    heisenberg_dispersion_reference,
    measure_speed,
    occupations,
)
from .oracle import (
    DenseHamiltonian,
    SpectrumComparison,
    build_dense,
    compare_spectra,
    dense_eigensystem,
    oracle_evolve,
)

__all__ = [
    "DenseHamiltonian",
    "DispersionFraction",
    "DispersionSample",
    "GaussianStart",
    "LocalizedStart",
    "OccupationProfile",
    "Regime",
    "SpectrumComparison",
    "SpeedMethod",
    "SpeedPrediction",
    "SweepEngine",
    "Trajectory",
    "build_dense",
    "classify_regime",
    "compare_spectra",
    "conditional_position",
    "dense_eigensystem",
    "effective_hamiltonian",
    "evolve",
    "evolve_series",
    "heisenberg_dispersion_reference",
    "initial_dressed",
    "initial_gaussian_jch",
    "initial_localized_superposition",
    "initial_spin",
    "measure_speed",
    "occupations",
    "oracle_evolve",
    "predicted_speeds",
    "spin_evolve",
    "spin_evolve_series",
    "x_term_commutator_check",
]
