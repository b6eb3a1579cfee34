"""
Experiment configuration.

A config file is YAML (JSON is accepted as is). It holds either one flat
mapping with an ``experiment`` key, or sections keyed by experiment name:

    spacetime:
      n_cavities: 100
      kappa_over_beta: 1.0e-3
    dispersion-sweep:
      sweep_points: 13

Unknown keys are errors. Every default is filled in by ``resolved()``.
"""

import math
from pathlib import Path
from typing import Any, Literal, Optional, Union

import numpy as np
import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from jchsim.domain.errors import ConfigError
from jchsim.domain.params import ChainParams, CouplingProfile, SpinChainParams

EXPERIMENTS = ("spacetime", "dispersion-sweep", "profiles", "spin-chain", "limits-report")

Experiment = Literal["spacetime", "dispersion-sweep", "profiles", "spin-chain", "limits-report"]


class LimitPoint(BaseModel):
    """One parameter point of a limits report."""

    model_config = ConfigDict(extra="forbid")

    kappa_over_beta: float = Field(gt=0)
    delta_over_beta: float = 0.0


class ExperimentConfig(BaseModel):
    """Declarative description of one experiment run."""

    model_config = ConfigDict(extra="forbid")

    experiment: Experiment
    system: Literal["jch", "spin"] = "jch"

    n_cavities: int = Field(default=100, ge=2, le=512)
    beta: float = Field(default=1.0, gt=0)
    kappa_over_beta: float = Field(default=1.0, ge=0)
    delta_over_beta: float = 0.0
    profile: Literal["uniform", "parabolic", "custom"] = "uniform"
    weights: Optional[list[float]] = None
    j_coupling: float = Field(default=1.0, gt=0)

    initial: Literal["localized", "dressed", "gaussian"] = "localized"
    q0: int = Field(default=1, ge=1)
    branch: Literal["plus", "minus"] = "plus"
    qc: Optional[float] = None
    width: Optional[float] = Field(default=None, gt=0)
    wavenumber: float = math.pi / 2

    t_max: Optional[float] = Field(default=None, gt=0)
    n_samples: int = Field(default=400, ge=1)

    sweep_min: float = Field(default=1e-3, gt=0)
    sweep_max: float = Field(default=1e3, gt=0)
    sweep_points: int = Field(default=25, ge=1)
    sample_time_factor: Optional[float] = Field(default=None, gt=0)

    snapshots: Optional[list[float]] = None
    envelope: Literal["auto", "triangle", "triangle-centered", "parabolic", "none"] = "auto"

    speed_method: Literal["auto", "centroid", "peak"] = "auto"
    speed_window: Optional[tuple[float, float]] = None
    limit_points: Optional[list[LimitPoint]] = None

    out_dir: Optional[str] = None

    @model_validator(mode="after")
    def _check_consistency(self) -> "ExperimentConfig":
        if self.sweep_min > self.sweep_max:
            raise ValueError("sweep_min must not exceed sweep_max")
        if self.q0 > self.n_cavities:
            raise ValueError(f"q0 must be in 1..{self.n_cavities}")
        if self.profile == "custom":
            if self.weights is None or len(self.weights) != self.n_cavities - 1:
                raise ValueError(f"custom profile needs {self.n_cavities - 1} weights")
            if any(w <= 0 for w in self.weights):
                raise ValueError("weights must be positive")
        elif self.weights is not None:
            raise ValueError("weights are only used with profile: custom")
        if self.speed_window is not None:
            lo, hi = self.speed_window
            if not 0 <= lo < hi:
                raise ValueError("speed_window must satisfy 0 ≤ start < end")
        if self.snapshots is not None and any(t < 0 for t in self.snapshots):
            raise ValueError("snapshots must be non-negative")
        if self.is_spin and self.initial == "dressed":
            raise ValueError("dressed initial states need the jch system")
        if (
            self.experiment == "limits-report"
            and self.limit_points is None
            and self.kappa_over_beta == 0
        ):
            raise ValueError("limits-report needs kappa_over_beta > 0 or limit_points")
        return self

    @property
    def is_spin(self) -> bool:
        return self.experiment == "spin-chain" or self.system == "spin"

    @property
    def kappa(self) -> float:
        return self.kappa_over_beta * self.beta

    @property
    def delta(self) -> float:
        return self.delta_over_beta * self.beta

    def coupling_profile(self) -> CouplingProfile:
        if self.profile == "custom":
            return CouplingProfile.custom(self.weights or ())
        if self.profile == "parabolic":
            return CouplingProfile.parabolic()
        return CouplingProfile.uniform()

    def chain_params(
        self,
        kappa_over_beta: Optional[float] = None,
        delta_over_beta: Optional[float] = None,
    ) -> ChainParams:
        """Chain parameters, optionally at another sweep or limit point."""
        kob = self.kappa_over_beta if kappa_over_beta is None else kappa_over_beta
        dob = self.delta_over_beta if delta_over_beta is None else delta_over_beta
        return ChainParams(
            n_cavities=self.n_cavities,
            beta=self.beta,
            kappa=kob * self.beta,
            delta=dob * self.beta,
            profile=self.coupling_profile(),
        )

    def spin_params(self, j_coupling: Optional[float] = None) -> SpinChainParams:
        return SpinChainParams(
            self.n_cavities, j_coupling or self.j_coupling, self.coupling_profile()
        )

    @property
    def resolved_qc(self) -> float:
        return self.qc if self.qc is not None else self.n_cavities / 2

    @property
    def resolved_width(self) -> float:
        return self.width if self.width is not None else self.n_cavities / 10

    @property
    def resolved_t_max(self) -> float:
        """t_max, defaulting to N/J for spin runs and N/kappa for JCH runs."""
        if self.t_max is not None:
            return self.t_max
        if self.is_spin:
            return self.n_cavities / self.j_coupling
        rate = self.kappa if self.kappa > 0 else self.beta
        return self.n_cavities / rate

    @property
    def resolved_sample_time_factor(self) -> float:
        if self.sample_time_factor is not None:
            return self.sample_time_factor
        return 0.125 if self.initial == "gaussian" else 0.25

    @property
    def resolved_snapshots(self) -> list[float]:
        if self.snapshots is not None:
            return sorted(set(self.snapshots))
        t_max = self.resolved_t_max
        return [0.0, t_max / 2, t_max]

    @property
    def resolved_speed_window(self) -> tuple[float, float]:
        """Fit window as fractions of N/J."""
        if self.speed_window is not None:
            return self.speed_window
        return (0.05, 0.25) if self.initial == "gaussian" else (0.1, 0.4)

    def times(self) -> np.ndarray:
        """Sample grid 0..t_max with n_samples points (just t = 0 for one sample)."""
        return np.linspace(0.0, self.resolved_t_max, self.n_samples)

    def sweep_values(self) -> np.ndarray:
        """Log-spaced kappa/beta values of a dispersion sweep."""
        return np.geomspace(self.sweep_min, self.sweep_max, self.sweep_points)

    def resolved(self) -> dict[str, Any]:
        """All settings with defaults filled in, JSON-compatible."""
        data = self.model_dump(mode="json")
        data.update(
            system="spin" if self.is_spin else "jch",
            qc=self.resolved_qc,
            width=self.resolved_width,
            t_max=self.resolved_t_max,
            sample_time_factor=self.resolved_sample_time_factor,
            snapshots=self.resolved_snapshots,
            speed_window=list(self.resolved_speed_window),
        )
        data.pop("out_dir", None)
        return data


def _key_lines(node: Any, section: Optional[str]) -> dict[str, int]:
    """1-based line of every key in the selected mapping of a composed YAML tree."""
    if not isinstance(node, yaml.MappingNode):
        return {}
    if section is not None:
        for key_node, value_node in node.value:
            if key_node.value == section:
                return _key_lines(value_node, None)
        return {}
    return {key.value: key.start_mark.line + 1 for key, _ in node.value}


def _select_section(
    data: dict[str, Any], experiment: Optional[str]
) -> tuple[dict[str, Any], Optional[str]]:
    """Pick the flat mapping to validate, and the section it came from."""
    if "experiment" in data:
        if experiment is not None and data["experiment"] != experiment:
            raise ConfigError(
                f"config is a {data['experiment']!r} experiment, not {experiment!r}"
            )
        return data, None

    sections = [key for key in data if key in EXPERIMENTS]
    unknown = [key for key in data if key not in EXPERIMENTS]
    if unknown:
        raise ConfigError(f"unknown experiment section(s): {', '.join(map(str, unknown))}")
    if experiment is None:
        if len(sections) != 1:
            raise ConfigError("config has several sections; name the experiment to run")
        experiment = sections[0]
    if experiment not in data:
        raise ConfigError(f"config has no section for experiment {experiment!r}")
    section = data[experiment] or {}
    if not isinstance(section, dict):
        raise ConfigError(f"section {experiment!r} must be a mapping")
    return {**section, "experiment": experiment}, experiment


def _format_errors(error: ValidationError, lines: dict[str, int], source: str) -> str:
    messages = []
    for item in error.errors():
        key = str(item["loc"][0]) if item["loc"] else "<config>"
        where = f"{source}:{lines[key]}" if key in lines else source
        if item["type"] == "extra_forbidden":
            messages.append(f"{where}: unknown key {key!r}")
        else:
            field = ".".join(str(part) for part in item["loc"]) or "<config>"
            messages.append(f"{where}: {field}: {item['msg']}")
    return "; ".join(messages)


def parse_config(
    text: str, experiment: Optional[str] = None, source: str = "<config>"
) -> ExperimentConfig:
    """
    Parse and validate config text.

    Args:
        text: YAML or JSON document
        experiment: Experiment the caller is about to run, if known
        source: Name used in diagnostics

    Returns:
        Validated ExperimentConfig

    Raises:
        ConfigError: On syntax errors, unknown keys or invalid values, with
            the line of the offending key where known
    """
    try:
        data = yaml.safe_load(text)
        tree = yaml.compose(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        where = f"{source}:{mark.line + 1}" if mark is not None else source
        raise ConfigError(f"{where}: cannot parse config: {getattr(e, 'problem', e)}") from e

    if not isinstance(data, dict):
        raise ConfigError(f"{source}: config must be a mapping")

    flat, section = _select_section(data, experiment)
    try:
        return ExperimentConfig.model_validate(flat)
    except ValidationError as e:
        raise ConfigError(_format_errors(e, _key_lines(tree, section), source)) from e


def load_config(path: Union[str, Path], experiment: Optional[str] = None) -> ExperimentConfig:
    """
    Load an experiment config file.

    Raises:
        ConfigError: If the file is missing or invalid
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {e.strerror}") from e
    return parse_config(text, experiment, source=str(path))
