"""Options shared by the experiment commands, and config resolution."""

from pathlib import Path
from typing import Callable, Optional

import click

from jchsim.domain.errors import ConfigError
from jchsim.services.config import ExperimentConfig, load_config
from jchsim.services.presets import load_preset


def config_options(func: Callable) -> Callable:
    """--config / --preset, as used by every command that reads a config."""
    func = click.option(
        "--preset",
        default=None,
        help="Named preset, e.g. uniform-small-kappa (see 'jch presets')",
    )(func)
    func = click.option(
        "--config",
        "config_path",
        type=click.Path(dir_okay=False, path_type=Path),
        default=None,
        help="Experiment config file (YAML or JSON)",
    )(func)
    return func


def resolve_config(
    config_path: Optional[Path], preset: Optional[str], experiment: Optional[str]
) -> ExperimentConfig:
    """
    Load the config named on the command line.

    Raises:
        click.UsageError: If neither or both of --config and --preset are given
        ConfigError: If the config is invalid
    """
    if (config_path is None) == (preset is None):
        raise click.UsageError("give exactly one of --config or --preset")
    if preset is not None:
        return load_preset(preset, experiment)
    if not config_path.exists():
        raise ConfigError(f"config file not found: {config_path}")
    return load_config(config_path, experiment)
