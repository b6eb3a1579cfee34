"""Experiment presets shipped with the package."""

from importlib import resources
from typing import Any, Optional

import yaml

from jchsim.domain.errors import ConfigError

from .config import ExperimentConfig, parse_config

PRESET_FILE = "presets.yaml"

# Keys of a preset entry that are not experiment settings
META_KEYS = ("description", "aliases")


def _load_presets() -> dict[str, dict[str, Any]]:
    text = resources.files("jchsim.services").joinpath(PRESET_FILE).read_text(encoding="utf-8")
    return yaml.safe_load(text)


def _alias_table(presets: dict[str, dict[str, Any]]) -> dict[str, str]:
    """Alias -> preset name."""
    return {alias: name for name, entry in presets.items() for alias in entry.get("aliases", ())}


def list_presets() -> dict[str, dict[str, Any]]:
    """Preset name -> {"experiment", "description", "aliases"}."""
    return {
        name: {
            "experiment": entry["experiment"],
            "description": entry.get("description", ""),
            "aliases": list(entry.get("aliases", ())),
        }
        for name, entry in _load_presets().items()
    }


def resolve_preset_name(name: str) -> str:
    """
    Canonical preset name for a name or alias.

    Raises:
        ConfigError: If neither a preset nor an alias has that name
    """
    presets = _load_presets()
    if name in presets:
        return name
    aliases = _alias_table(presets)
    if name in aliases:
        return aliases[name]
    raise ConfigError(f"unknown preset {name!r} (see 'jch presets')")


def load_preset(name: str, experiment: Optional[str] = None) -> ExperimentConfig:
    """
    Expand a preset into a validated config.

    Args:
        name: Preset name or alias, e.g. ``uniform-small-kappa`` or ``fig2a``
        experiment: Experiment the caller runs; must match the preset's

    Raises:
        ConfigError: If the preset is unknown or belongs to another experiment
    """
    canonical = resolve_preset_name(name)
    entry = {
        key: value for key, value in _load_presets()[canonical].items() if key not in META_KEYS
    }
    return parse_config(yaml.safe_dump(entry), experiment, source=f"preset {canonical}")
