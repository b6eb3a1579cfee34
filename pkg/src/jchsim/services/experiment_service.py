"""
Experiment service - runs one configured experiment and writes its files.

Responsibilities:
- Build initial states and trajectories from a config
- Evaluate sweep and limit points through the sweep engine
- Overlay the analytic envelopes on space-time data
- Hand tables and plot scripts to OutputStorage
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional

import numpy as np

from jchsim.core.dynamics import (
    GaussianStart,
    LocalizedStart,
    Trajectory,
    evolve_series,
    initial_dressed,
    initial_gaussian_jch,
    initial_localized_superposition,
    initial_spin,
    spin_evolve_series,
)
from jchsim.core.effective import NO_PREDICTION, predicted_speeds
from jchsim.core.engine import SweepEngine
from jchsim.core.observables import (
    DispersionFraction,
    SpeedMethod,
    conditional_position,
    dispersion_series,
    gaussian_envelope,
    heisenberg_dispersion_reference,
    measure_speed,
    occupation_series,
    parabolic_position,
    triangle_wave,
    triangle_wave_centered,
)
from jchsim.core.oracle import build_dense, build_dense_spin, oracle_evolve_series
from jchsim.domain.params import ChainParams, ProfileKind, SpinChainParams
from jchsim.domain.state import Branch, Mode, SingleExcitationState, SpinChainState
from jchsim.log import get_logger
from jchsim.spectral.blocks import jch_spectrum

from . import plots
from .config import ExperimentConfig, LimitPoint
from .storage import OutputStorage

log = get_logger(__name__)

JCH_MODES = (Mode.PHOTONIC, Mode.ATOMIC)


def build_initial_state(config: ExperimentConfig, params: ChainParams) -> SingleExcitationState:
    """JCH initial state named by the config."""
    n = config.n_cavities
    if config.initial == "gaussian":
        return initial_gaussian_jch(
            n, config.resolved_qc, config.resolved_width, config.wavenumber
        )
    if config.initial == "dressed":
        return initial_dressed(n, config.q0, Branch(config.branch), params)
    return initial_localized_superposition(n, config.q0)


def build_spin_state(config: ExperimentConfig) -> SpinChainState:
    """Spin-chain initial state named by the config."""
    if config.initial == "gaussian":
        start = GaussianStart(config.resolved_qc, config.resolved_width, config.wavenumber)
        return initial_spin(config.n_cavities, start)
    return initial_spin(config.n_cavities, LocalizedStart(config.q0))


def jch_trajectory(params: ChainParams, state: SingleExcitationState, times) -> Trajectory:
    """Closed-form propagation, or the dense oracle for custom profiles."""
    if params.profile.has_closed_form:
        return evolve_series(state, jch_spectrum(params), times)
    return oracle_evolve_series(state, build_dense(params), times)


def spin_trajectory(params: SpinChainParams, state: SpinChainState, times) -> Trajectory:
    """Spin-chain counterpart of ``jch_trajectory``."""
    if params.profile.has_closed_form:
        return spin_evolve_series(state, params, times)
    return oracle_evolve_series(state, build_dense_spin(params), times)


def _starts_at_first_site(config: ExperimentConfig) -> bool:
    return config.initial != "gaussian" and config.q0 == 1


def envelope_function(
    config: ExperimentConfig,
) -> Optional[Callable[[float, np.ndarray], np.ndarray]]:
    """
    Analytic position curve for the config as a function of (J, times).

    ``auto`` picks the triangle wave for a uniform chain started on site 1,
    the cosine law for a parabolic chain started on site 1 and the oriented
    centered triangle for a Gaussian on a uniform chain; anything else gets
    no envelope.
    """
    n = config.n_cavities
    choice = config.envelope
    if choice == "auto":
        if config.profile == "uniform" and _starts_at_first_site(config):
            choice = "triangle"
        elif config.profile == "parabolic" and _starts_at_first_site(config):
            choice = "parabolic"
        elif config.profile == "uniform" and config.initial == "gaussian":
            return lambda j, t: gaussian_envelope(n, j, t, config.wavenumber)
        else:
            return None
    if choice == "triangle":
        return lambda j, t: triangle_wave(n, j, t)
    if choice == "triangle-centered":
        return lambda j, t: triangle_wave_centered(n, j, t)
    if choice == "parabolic":
        return lambda j, t: parabolic_position(n, j, t)
    return None


def _reference_spreads(config: ExperimentConfig) -> tuple[float, float]:
    """
    Heisenberg spreads for the sweep's horizontal reference lines.

    A uniform chain started on site 1 is sampled when the wavefront is a
    quarter and half way along; other setups evolve the same initial shape
    to J t = f N and J t = 2 f N, f the sample time factor.
    """
    n = config.n_cavities
    profile = config.coupling_profile()
    if profile.kind is ProfileKind.UNIFORM and _starts_at_first_site(config):
        return (
            heisenberg_dispersion_reference(n, 1.0, DispersionFraction.QUARTER, profile),
            heisenberg_dispersion_reference(n, 1.0, DispersionFraction.HALF, profile),
        )
    factor = config.resolved_sample_time_factor
    times = np.array([factor * n, 2.0 * factor * n])
    trajectory = spin_trajectory(config.spin_params(1.0), build_spin_state(config), times)
    return tuple(float(q) for q in dispersion_series(trajectory, Mode.SPIN).q_std)


def dispersion_point(task: tuple[ExperimentConfig, float]) -> tuple[float, float, float]:
    """Photonic and atomic spread at T = f N / kappa for one kappa/beta."""
    config, kappa_over_beta = task
    params = config.chain_params(kappa_over_beta)
    sample_time = config.resolved_sample_time_factor * config.n_cavities / params.kappa
    trajectory = jch_trajectory(
        params, build_initial_state(config, params), np.array([sample_time])
    )
    state = trajectory.state(0)
    log.debug("sweep.point", kappa_over_beta=kappa_over_beta, time=sample_time)
    return (
        kappa_over_beta,
        conditional_position(state, Mode.PHOTONIC).q_std,
        conditional_position(state, Mode.ATOMIC).q_std,
    )


@dataclass(frozen=True)
class LimitRow:
    """Predicted and measured speeds at one parameter point."""

    kappa_over_beta: float
    delta_over_beta: float
    regime: str
    j_predicted_photonic: Optional[float]
    j_measured_photonic: Optional[float]
    j_predicted_atomic: Optional[float]
    j_measured_atomic: Optional[float]
    rel_error: Optional[float]
    note: str

    def values(self) -> list:
        return [getattr(self, name) for name in LIMIT_COLUMNS]


LIMIT_COLUMNS = [
    "kappa_over_beta",
    "delta_over_beta",
    "regime",
    "j_predicted_photonic",
    "j_measured_photonic",
    "j_predicted_atomic",
    "j_measured_atomic",
    "rel_error",
    "note",
]


def limit_point(task: tuple[ExperimentConfig, LimitPoint]) -> LimitRow:
    """
    Measure both mode speeds and compare with the regime's prediction.

    Each mode is followed on its own time scale, [w0, w1] N / J_predicted;
    a mode predicted not to move is followed on the other mode's scale.
    """
    config, point = task
    params = config.chain_params(point.kappa_over_beta, point.delta_over_beta)
    prediction = predicted_speeds(params)
    log.debug("limits.point", kappa_over_beta=point.kappa_over_beta, **prediction.to_dict())
    if not prediction.has_prediction:
        return LimitRow(
            point.kappa_over_beta, point.delta_over_beta, prediction.regime.value,
            None, None, None, None, None, NO_PREDICTION,
        )

    state = build_initial_state(config, params)
    n = config.n_cavities
    lo, hi = config.resolved_speed_window
    method = SpeedMethod(config.speed_method)
    predicted = {Mode.PHOTONIC: prediction.j_photonic, Mode.ATOMIC: prediction.j_atomic}
    fastest = max(predicted.values())

    measured = {}
    for mode, j_predicted in predicted.items():
        rate = j_predicted if j_predicted > 0 else fastest
        times = np.linspace(0.0, hi * n / rate, config.n_samples)
        trajectory = jch_trajectory(params, state, times)
        estimate = measure_speed(trajectory, mode, (lo * n / rate, hi * n / rate), method)
        measured[mode] = estimate.speed

    errors = [
        abs(measured[mode] - j) / j for mode, j in predicted.items() if j > 0
    ]
    return LimitRow(
        point.kappa_over_beta,
        point.delta_over_beta,
        prediction.regime.value,
        prediction.j_photonic,
        measured[Mode.PHOTONIC],
        prediction.j_atomic,
        measured[Mode.ATOMIC],
        max(errors),
        prediction.validity_note,
    )


class ExperimentRunner:
    """
    Runs the experiment a config describes.

    Dependencies:
    - OutputStorage (file output)
    - SweepEngine (parallel sweep and limit points)
    """

    def __init__(
        self,
        config: ExperimentConfig,
        storage: Optional[OutputStorage] = None,
        engine: Optional[SweepEngine] = None,
    ):
        """
        Initialize runner.

        Args:
            config: Validated experiment config
            storage: Output target (default: config.out_dir or ./jch-output)
            engine: Sweep engine (default: single process)
        """
        self.config = config
        out_dir = Path(config.out_dir) if config.out_dir else None
        self.storage = storage or OutputStorage(out_dir, config.resolved())
        self.engine = engine or SweepEngine()

    def run(self) -> list[Path]:
        """Run the configured experiment and return the files written."""
        handlers = {
            "spacetime": self.run_spacetime,
            "dispersion-sweep": self.run_dispersion_sweep,
            "profiles": self.run_profiles,
            "spin-chain": self.run_spin_chain,
            "limits-report": self.run_limits_report,
        }
        log.info(
            "experiment.start",
            experiment=self.config.experiment,
            n=self.config.n_cavities,
            out_dir=str(self.storage.out_dir),
        )
        files = handlers[self.config.experiment]()
        log.info("experiment.done", experiment=self.config.experiment, files=len(files))
        return files

    def run_spacetime(self) -> list[Path]:
        """
        Occupation of every cavity over time, per mode, plus the envelope.

        Writes spacetime_photonic.csv, spacetime_atomic.csv, envelope.csv
        (when an envelope applies) and spacetime.gp.
        """
        if self.config.is_spin:
            return self.run_spin_chain()

        params = self.config.chain_params()
        times = self.config.times()
        trajectory = jch_trajectory(params, build_initial_state(self.config, params), times)

        files = [
            self.storage.write_grid(
                f"spacetime_{mode.value}.csv", times, occupation_series(trajectory, mode)
            )
            for mode in JCH_MODES
        ]
        envelope = self._jch_envelope(params, times)
        if envelope is not None:
            files.append(
                self.storage.write_csv(
                    "envelope.csv",
                    ["time", "photonic", "atomic"],
                    zip(times, envelope[Mode.PHOTONIC], envelope[Mode.ATOMIC]),
                )
            )
        grids = [path.name for path in files[:2]]
        script = plots.spacetime_script(
            "spacetime.gp", grids, "envelope.csv" if envelope is not None else None
        )
        files.append(self.storage.write_text("spacetime.gp", script))
        return files

    def _jch_envelope(self, params: ChainParams, times: np.ndarray):
        """Envelope per mode at the predicted speeds (kappa when none is predicted)."""
        curve = envelope_function(self.config)
        if curve is None:
            return None
        prediction = predicted_speeds(params)
        if self.config.envelope == "auto" and not prediction.has_prediction:
            return None
        speeds = {
            Mode.PHOTONIC: prediction.j_photonic if prediction.has_prediction else params.kappa,
            Mode.ATOMIC: prediction.j_atomic if prediction.has_prediction else params.kappa,
        }
        start = 1.0 if self.config.initial != "gaussian" else self.config.resolved_qc
        return {
            mode: curve(j, times) if j and j > 0 else np.full(times.size, start)
            for mode, j in speeds.items()
        }

    def run_dispersion_sweep(self) -> list[Path]:
        """
        Spread of each mode at T = f N / kappa across log-spaced kappa/beta.

        Writes dispersion.csv and dispersion.gp.
        """
        values = self.config.sweep_values()
        results = self.engine.map(dispersion_point, [(self.config, v) for v in values])
        reference_kappa, reference_2kappa = _reference_spreads(self.config)
        rows = [
            (kob, dq_ph, dq_at, reference_kappa, reference_2kappa)
            for kob, dq_ph, dq_at in results
        ]
        table = self.storage.write_csv(
            "dispersion.csv",
            ["kappa_over_beta", "dq_photonic", "dq_atomic", "dq_heis_J_kappa", "dq_heis_J_2kappa"],
            rows,
        )
        script = self.storage.write_text(
            "dispersion.gp", plots.dispersion_script("dispersion.gp", table.name)
        )
        return [table, script]

    def run_profiles(self) -> list[Path]:
        """
        Occupation against cavity at the snapshot times.

        Writes profiles.csv and profiles.gp.
        """
        snapshots = np.array(self.config.resolved_snapshots)
        cavities = np.arange(1, self.config.n_cavities + 1)
        if self.config.is_spin:
            trajectory = spin_trajectory(
                self.config.spin_params(), build_spin_state(self.config), snapshots
            )
            columns = ["spin"]
            grids = [occupation_series(trajectory, Mode.SPIN)]
        else:
            params = self.config.chain_params()
            trajectory = jch_trajectory(
                params, build_initial_state(self.config, params), snapshots
            )
            columns = ["photonic", "atomic"]
            grids = [occupation_series(trajectory, mode) for mode in JCH_MODES]

        rows = (
            [t, int(q), *(grid[i, q - 1] for grid in grids)]
            for i, t in enumerate(snapshots)
            for q in cavities
        )
        table = self.storage.write_csv("profiles.csv", ["time", "cavity", *columns], rows)
        script = self.storage.write_text(
            "profiles.gp", plots.profiles_script("profiles.gp", table.name, columns)
        )
        return [table, script]

    def run_spin_chain(self) -> list[Path]:
        """
        Heisenberg chain space-time diagram and <Q>, Delta Q over time.

        Writes spacetime_spin.csv, position.csv, spacetime.gp and position.gp.
        """
        times = self.config.times()
        trajectory = spin_trajectory(
            self.config.spin_params(), build_spin_state(self.config), times
        )
        grid = self.storage.write_grid(
            "spacetime_spin.csv", times, occupation_series(trajectory, Mode.SPIN)
        )
        series = dispersion_series(trajectory, Mode.SPIN)
        curve = envelope_function(self.config)
        envelope = (
            curve(self.config.j_coupling, times) if curve is not None else [None] * times.size
        )
        position = self.storage.write_csv(
            "position.csv",
            ["time", "q_mean", "q_std", "envelope"],
            zip(times, series.q_mean, series.q_std, envelope),
        )
        return [
            grid,
            position,
            self.storage.write_text(
                "spacetime.gp", plots.spacetime_script("spacetime.gp", [grid.name], None)
            ),
            self.storage.write_text(
                "position.gp", plots.position_script("position.gp", position.name)
            ),
        ]

    def run_limits_report(self) -> list[Path]:
        """
        Measured against predicted speeds at each limit point.

        Writes limits.csv.
        """
        points = self.config.limit_points or [
            LimitPoint(
                kappa_over_beta=self.config.kappa_over_beta,
                delta_over_beta=self.config.delta_over_beta,
            )
        ]
        rows = self.engine.map(limit_point, [(self.config, p) for p in points])
        table = self.storage.write_csv(
            "limits.csv", LIMIT_COLUMNS, (row.values() for row in rows)
        )
        return [table]
