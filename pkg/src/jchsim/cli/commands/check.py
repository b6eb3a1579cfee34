"""
'jch check' command - Compare the closed-form spectrum with the dense oracle.
"""

import sys

import click
from rich import box
from rich.console import Console
from rich.table import Table

from jchsim.core.oracle import build_dense, compare_spectra
from jchsim.spectral.blocks import jch_spectrum

from .options import config_options, resolve_config

console = Console()


@click.command()
@config_options
@click.option(
    "--eigenvalue-tolerance",
    type=float,
    default=1e-9,
    show_default=True,
    help="Allowed eigenvalue deviation, relative to max |E|",
)
@click.option(
    "--angle-tolerance",
    type=float,
    default=1e-7,
    show_default=True,
    help="Allowed principal angle between eigenspaces",
)
def check_command(config_path, preset, eigenvalue_tolerance, angle_tolerance):
    """Verify the analytic spectrum of a config against dense diagonalization.

    \b
    Example:
        jch check --preset uniform-small-kappa
    """
    config = resolve_config(config_path, preset, None)
    params = config.chain_params()
    report = compare_spectra(jch_spectrum(params), build_dense(params))
    passed = report.passed(eigenvalue_tolerance, angle_tolerance)

    table = Table(title=f"Spectrum check, N={params.n_cavities}", box=box.ROUNDED)
    table.add_column("Metric", style="cyan")
    table.add_column("Value", style="yellow")
    table.add_row("profile", params.profile.kind.value)
    table.add_row("kappa/beta", f"{config.kappa_over_beta:g}")
    table.add_row("delta/beta", f"{config.delta_over_beta:g}")
    table.add_row("max eigenvalue deviation", f"{report.max_eigenvalue_deviation:.3e}")
    table.add_row("energy scale", f"{report.energy_scale:.3e}")
    table.add_row("max subspace angle", f"{report.max_subspace_angle:.3e}")
    table.add_row("eigenspace clusters", str(report.n_clusters))
    console.print(table)

    if passed:
        console.print("[bold green]✅ Spectrum matches the oracle[/bold green]")
    else:
        console.print("[bold red]❌ Spectrum deviates from the oracle[/bold red]")
        sys.exit(2)
