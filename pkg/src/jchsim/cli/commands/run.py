"""
Experiment commands - 'jch spacetime', 'jch dispersion-sweep', ...
"""

from pathlib import Path
from typing import Optional

import click

from jchsim.core.engine import SweepEngine
from jchsim.core.types import SweepConfig
from jchsim.services.experiment_service import ExperimentRunner
from jchsim.services.storage import DEFAULT_OUT_DIR, OutputStorage

from .options import config_options, resolve_config


def _run_experiment(
    experiment: str,
    config_path: Optional[Path],
    preset: Optional[str],
    out: Optional[Path],
    jobs: int,
) -> None:
    config = resolve_config(config_path, preset, experiment)
    out_dir = out or (Path(config.out_dir) if config.out_dir else DEFAULT_OUT_DIR)

    click.echo(f"🔬 Running {experiment} (N={config.n_cavities}, {config.profile} coupling)")
    runner = ExperimentRunner(
        config,
        storage=OutputStorage(out_dir, config.resolved()),
        engine=SweepEngine(SweepConfig(jobs=jobs)),
    )
    files = runner.run()

    metrics = runner.engine.last_metrics
    if metrics is not None:
        click.echo(
            f"⚡ {metrics.items} sweep points in {metrics.elapsed_seconds:.2f}s "
            f"on {metrics.workers_used} worker(s), {metrics.formatted_rate}"
        )
    click.echo(f"✅ Wrote {len(files)} files to {out_dir}")
    for path in files:
        click.echo(f"   {path.name}")


def experiment_command(experiment: str, summary: str) -> click.Command:
    """Build the click command for one experiment."""

    @click.command(name=experiment, help=summary)
    @config_options
    @click.option(
        "--out",
        type=click.Path(file_okay=False, path_type=Path),
        envvar="JCH_OUT_DIR",
        default=None,
        help="Output directory (default: $JCH_OUT_DIR or ./jch-output)",
    )
    @click.option(
        "--jobs",
        type=click.IntRange(min=1),
        default=1,
        show_default=True,
        help="Worker processes for sweep points",
    )
    def command(config_path, preset, out, jobs):
        _run_experiment(experiment, config_path, preset, out, jobs)

    return command


spacetime_command = experiment_command(
    "spacetime", "Space-time occupation diagrams of both modes."
)
dispersion_sweep_command = experiment_command(
    "dispersion-sweep", "Mode dispersion at a fixed time across kappa/beta."
)
profiles_command = experiment_command(
    "profiles", "Pulse profiles at snapshot times."
)
spin_chain_command = experiment_command(
    "spin-chain", "Single-magnon Heisenberg chain: space-time, <Q> and Delta Q."
)
limits_report_command = experiment_command(
    "limits-report", "Measured against predicted speeds in the limit regimes."
)
