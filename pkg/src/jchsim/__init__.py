"""
jchsim - Exact single-excitation dynamics of Jaynes-Cummings-Hubbard chains.

A chain of coupled cavities, each holding one two-level atom, carries a single
excitation shared between photonic and atomic modes. For uniform and parabolic
inter-cavity coupling the one-excitation Hamiltonian diagonalizes in closed
form; this package propagates states spectrally, checks every closed form
against a dense numeric oracle, and reproduces the limit-regime results
(Heisenberg correspondence, large detuning) as CSV data with plot scripts.
"""

__version__ = "0.1.0"
__author__ = "Scott Senger"
__email__ = "scottsen@tia.net"
