"""
jchsim CLI - exact single-excitation simulations of the JCH chain.

Commands:
    spacetime         - Occupation of every cavity over time
    dispersion-sweep  - Dispersion at a fixed time across kappa/beta
    profiles          - Pulse profiles at snapshot times
    spin-chain        - Reference Heisenberg chain runs
    limits-report     - Measured vs predicted speeds in the limit regimes
    check             - Closed-form spectrum vs dense diagonalization
    presets           - List shipped presets
"""

import sys
from typing import NoReturn

import click

from jchsim import __version__
from jchsim.cli.commands.check import check_command
from jchsim.cli.commands.presets import presets_command
from jchsim.cli.commands.run import (
    dispersion_sweep_command,
    limits_report_command,
    profiles_command,
    spacetime_command,
    spin_chain_command,
)
from jchsim.domain.errors import ConfigError, JCHError
from jchsim.log import configure_logging


@click.group()
@click.version_option(version=__version__, prog_name="jch")
@click.option("--verbose", "-v", is_flag=True, help="Log debug events to stderr")
def cli(verbose: bool) -> None:
    """jch - exact one-excitation dynamics of a Jaynes-Cummings-Hubbard chain."""
    configure_logging(verbose)


# Register commands
cli.add_command(spacetime_command, name="spacetime")
cli.add_command(dispersion_sweep_command, name="dispersion-sweep")
cli.add_command(profiles_command, name="profiles")
cli.add_command(spin_chain_command, name="spin-chain")
cli.add_command(limits_report_command, name="limits-report")
cli.add_command(check_command, name="check")
cli.add_command(presets_command, name="presets")


def main() -> NoReturn:
    """Main entry point for the CLI.

    Exit codes: 0 success, 1 config or usage error, 2 runtime error,
    130 interrupted.
    """
    try:
        cli.main(standalone_mode=False)
        sys.exit(0)
    except click.exceptions.Abort:
        click.echo("\n\nInterrupted by user", err=True)
        sys.exit(130)
    except KeyboardInterrupt:
        click.echo("\n\nInterrupted by user", err=True)
        sys.exit(130)
    except click.ClickException as e:
        e.show()
        sys.exit(1)
    except ConfigError as e:
        click.echo(f"❌ Config error: {e}", err=True)
        sys.exit(1)
    except (JCHError, OSError, RuntimeError, ValueError) as e:
        click.echo(f"\n❌ Error: {e}", err=True)
        sys.exit(2)


if __name__ == "__main__":
    main()
