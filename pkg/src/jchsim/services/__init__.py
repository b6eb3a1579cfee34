"""
jchsim services - experiment orchestration.

Services tie the physics modules to configs and output files; they hold no
physics of their own.
"""

from .experiment_service import ExperimentRunner

__all__ = [
    "ExperimentRunner",
]
