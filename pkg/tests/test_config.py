"""
Tests for experiment config parsing and presets.
"""

import tempfile
from pathlib import Path

import numpy as np
import pytest

from jchsim.domain.errors import ConfigError
from jchsim.domain.params import ProfileKind
from jchsim.services.config import EXPERIMENTS, load_config, parse_config
from jchsim.services.presets import list_presets, load_preset, resolve_preset_name


@pytest.fixture
def temp_dir():
    """Create temporary directory for config files."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


class TestDefaults:
    """Tests for documented defaults."""

    def test_minimal_spacetime(self):
        """Test a minimal config is filled with defaults."""
        config = parse_config(
            "experiment: spacetime\nn_cavities: 100\nkappa_over_beta: 1.0e-3\n"
        )
        assert config.delta == 0.0
        assert config.beta == 1.0
        assert config.initial == "localized"
        assert config.n_samples == 400
        assert config.resolved_t_max == pytest.approx(100 / 1e-3)

    def test_spin_t_max(self):
        """Test spin runs default to t_max = N/J."""
        config = parse_config("experiment: spin-chain\nn_cavities: 50\nj_coupling: 2.0\n")
        assert config.is_spin
        assert config.resolved_t_max == pytest.approx(25.0)

    def test_gaussian_defaults(self):
        """Test Gaussian starts default to qc = N/2 and s = N/10."""
        config = parse_config("experiment: spacetime\ninitial: gaussian\n")
        assert config.resolved_qc == 50.0
        assert config.resolved_width == 10.0
        assert config.resolved_sample_time_factor == 0.125
        assert config.resolved_speed_window == (0.05, 0.25)

    def test_times(self):
        """Test the sample grid spans 0..t_max."""
        config = parse_config("experiment: spacetime\nt_max: 2.0\nn_samples: 5\n")
        assert np.allclose(config.times(), [0.0, 0.5, 1.0, 1.5, 2.0])

    def test_single_sample(self):
        """Test one sample means just t = 0."""
        config = parse_config("experiment: spacetime\nn_samples: 1\n")
        assert list(config.times()) == [0.0]

    def test_sweep_values(self):
        """Test sweep points are log spaced between the endpoints."""
        config = parse_config("experiment: dispersion-sweep\nsweep_points: 7\n")
        values = config.sweep_values()
        assert values[0] == pytest.approx(1e-3)
        assert values[-1] == pytest.approx(1e3)
        assert values[3] == pytest.approx(1.0)

    def test_chain_params(self):
        """Test physical params scale with beta."""
        config = parse_config(
            "experiment: spacetime\nbeta: 2.0\nkappa_over_beta: 3.0\ndelta_over_beta: 5.0\n"
        )
        params = config.chain_params()
        assert (params.kappa, params.delta) == (6.0, 10.0)
        assert config.chain_params(kappa_over_beta=0.5).kappa == 1.0

    def test_custom_profile(self):
        """Test custom weights reach the chain params."""
        config = parse_config(
            "experiment: spacetime\nn_cavities: 3\nprofile: custom\nweights: [1.0, 2.0]\n"
        )
        assert config.chain_params().profile.kind is ProfileKind.CUSTOM

    def test_resolved(self):
        """Test the resolved config fills defaults and omits out_dir."""
        resolved = parse_config("experiment: spin-chain\nout_dir: here\n").resolved()
        assert resolved["system"] == "spin"
        assert resolved["t_max"] == pytest.approx(100.0)
        assert resolved["speed_window"] == [0.1, 0.4]
        assert "out_dir" not in resolved


class TestErrors:
    """Tests for config errors."""

    def test_unknown_key(self):
        """Test an unknown key is named with its line."""
        with pytest.raises(ConfigError, match=r"run.yaml:3: unknown key 'kapa'"):
            parse_config(
                "experiment: spacetime\nn_cavities: 10\nkapa: 1.0\n", source="run.yaml"
            )

    def test_unknown_key_in_section(self):
        """Test line numbers count from the top of the file."""
        text = "spacetime:\n  n_cavities: 10\n  kapa: 1.0\n"
        with pytest.raises(ConfigError, match=r"cfg:3: unknown key 'kapa'"):
            parse_config(text, "spacetime", source="cfg")

    def test_out_of_range(self):
        """Test field constraints are reported."""
        with pytest.raises(ConfigError, match="n_cavities"):
            parse_config("experiment: spacetime\nn_cavities: 1\n")

    def test_sweep_bounds(self):
        """Test sweep_min may not exceed sweep_max."""
        with pytest.raises(ConfigError, match="sweep_min must not exceed sweep_max"):
            parse_config("experiment: dispersion-sweep\nsweep_min: 10\nsweep_max: 1\n")

    def test_q0_range(self):
        """Test q0 is bounded by the chain."""
        with pytest.raises(ConfigError, match=r"q0 must be in 1..5"):
            parse_config("experiment: spacetime\nn_cavities: 5\nq0: 6\n")

    def test_custom_weight_count(self):
        """Test custom profiles need N-1 weights."""
        with pytest.raises(ConfigError, match="needs 2 weights"):
            parse_config("experiment: spacetime\nn_cavities: 3\nprofile: custom\nweights: [1]\n")

    def test_weights_without_custom(self):
        """Test weights are refused for closed-form profiles."""
        with pytest.raises(ConfigError, match="only used with profile: custom"):
            parse_config("experiment: spacetime\nn_cavities: 3\nweights: [1, 1]\n")

    def test_dressed_spin(self):
        """Test spin runs cannot start from a dressed state."""
        with pytest.raises(ConfigError, match="dressed"):
            parse_config("experiment: spin-chain\ninitial: dressed\n")

    def test_limits_report_zero_kappa(self):
        """Test a limits report without points needs a positive kappa."""
        text = "experiment: limits-report\nkappa_over_beta: 0\n"
        with pytest.raises(ConfigError, match="kappa_over_beta > 0 or limit_points"):
            parse_config(text)

    def test_limits_report_zero_kappa_with_points(self):
        """Test explicit limit points make a zero kappa irrelevant."""
        text = (
            "experiment: limits-report\nkappa_over_beta: 0\n"
            "limit_points:\n  - {kappa_over_beta: 1.0e-3}\n"
        )
        assert len(parse_config(text).limit_points) == 1

    def test_syntax_error(self):
        """Test YAML errors carry a line."""
        with pytest.raises(ConfigError, match="cannot parse config"):
            parse_config("experiment: [spacetime\n", source="bad.yaml")

    def test_not_a_mapping(self):
        """Test the document must be a mapping."""
        with pytest.raises(ConfigError, match="must be a mapping"):
            parse_config("- spacetime\n- profiles\n")

    def test_missing_file(self, temp_dir):
        """Test a missing file is a config error."""
        with pytest.raises(ConfigError, match="cannot read config"):
            load_config(temp_dir / "absent.yaml")


class TestSections:
    """Tests for sectioned configs."""

    TEXT = "spacetime:\n  n_cavities: 20\ndispersion-sweep:\n  sweep_points: 3\n"

    def test_select_section(self):
        """Test the named section is used."""
        config = parse_config(self.TEXT, "dispersion-sweep")
        assert config.experiment == "dispersion-sweep"
        assert config.sweep_points == 3
        assert config.n_cavities == 100

    def test_several_sections_need_a_name(self):
        """Test an ambiguous file is refused."""
        with pytest.raises(ConfigError, match="several sections"):
            parse_config(self.TEXT)

    def test_single_section(self):
        """Test one section needs no name."""
        assert parse_config("profiles:\n  system: spin\n").experiment == "profiles"

    def test_missing_section(self):
        """Test the requested section must exist."""
        with pytest.raises(ConfigError, match="no section for experiment 'profiles'"):
            parse_config(self.TEXT, "profiles")

    def test_unknown_section(self):
        """Test misspelled sections are errors."""
        with pytest.raises(ConfigError, match="unknown experiment section"):
            parse_config("spactime:\n  n_cavities: 20\n")

    def test_flat_experiment_mismatch(self):
        """Test a flat config must match the command."""
        with pytest.raises(ConfigError, match="not 'profiles'"):
            parse_config("experiment: spacetime\n", "profiles")

    def test_json(self, temp_dir):
        """Test JSON files load as they are."""
        path = temp_dir / "run.json"
        path.write_text('{"experiment": "spacetime", "n_cavities": 12, "t_max": 3.5}')
        config = load_config(path, "spacetime")
        assert config.n_cavities == 12
        assert config.resolved_t_max == 3.5

    def test_json_unknown_key(self, temp_dir):
        """Test JSON keys get line numbers too."""
        path = temp_dir / "run.json"
        path.write_text('{\n  "experiment": "spacetime",\n  "kapa": 1\n}\n')
        with pytest.raises(ConfigError, match=r"run.json:3: unknown key 'kapa'"):
            load_config(path)


class TestPresets:
    """Tests for shipped presets."""

    def test_uniform_small_kappa(self):
        """Test the two-Heisenberg preset expands as documented."""
        config = load_preset("uniform-small-kappa")
        assert config.experiment == "spacetime"
        assert config.n_cavities == 100
        assert config.kappa_over_beta == pytest.approx(1e-3)
        assert config.initial == "localized"

    @pytest.mark.parametrize("name", sorted(list_presets()))
    def test_every_preset_loads(self, name):
        """Test every preset validates against its own experiment."""
        entry = list_presets()[name]
        assert entry["experiment"] in EXPERIMENTS
        assert entry["description"]
        assert load_preset(name, entry["experiment"]).experiment == entry["experiment"]

    @pytest.mark.parametrize(
        "alias, name, experiment",
        [
            ("fig2a", "uniform-small-kappa", "spacetime"),
            ("fig2b", "uniform-small-kappa", "spacetime"),
            ("fig2c", "uniform-kappa-10", "spacetime"),
            ("fig2d", "uniform-kappa-10", "spacetime"),
            ("fig2e", "uniform-large-kappa", "spacetime"),
            ("fig2f", "uniform-large-kappa", "spacetime"),
            ("fig3", "dispersion-uniform", "dispersion-sweep"),
            ("fig4a", "heisenberg-uniform", "spin-chain"),
            ("fig4b", "heisenberg-parabolic", "spin-chain"),
            ("fig4c", "heisenberg-gaussian", "spin-chain"),
            ("fig5a", "heisenberg-uniform", "spin-chain"),
            ("fig5b", "heisenberg-parabolic", "spin-chain"),
            ("fig5c", "heisenberg-gaussian", "spin-chain"),
            ("fig6a", "parabolic-small-kappa", "spacetime"),
            ("fig6b", "parabolic-small-kappa", "spacetime"),
            ("fig6c", "parabolic-kappa-1", "spacetime"),
            ("fig6d", "parabolic-kappa-1", "spacetime"),
            ("fig6e", "parabolic-large-kappa", "spacetime"),
            ("fig6f", "parabolic-large-kappa", "spacetime"),
            ("fig7", "dispersion-parabolic", "dispersion-sweep"),
            ("fig8a", "gaussian-small-kappa", "spacetime"),
            ("fig8b", "gaussian-small-kappa", "spacetime"),
            ("fig8c", "gaussian-kappa-1", "spacetime"),
            ("fig8d", "gaussian-kappa-1", "spacetime"),
            ("fig8e", "gaussian-large-kappa", "spacetime"),
            ("fig8f", "gaussian-large-kappa", "spacetime"),
            ("fig9", "dispersion-gaussian", "dispersion-sweep"),
            ("fig10a", "profiles-uniform", "profiles"),
            ("fig10b", "profiles-parabolic", "profiles"),
            ("fig10c", "profiles-gaussian", "profiles"),
            ("fig11a", "detuned-uniform", "spacetime"),
            ("fig11b", "detuned-parabolic", "spacetime"),
            ("fig11c", "detuned-gaussian", "spacetime"),
        ],
    )
    def test_alias(self, alias, name, experiment):
        """Test each short alias expands to the same config as its preset."""
        assert resolve_preset_name(alias) == name
        assert alias in list_presets()[name]["aliases"]
        config = load_preset(alias, experiment)
        assert config.experiment == experiment
        assert config == load_preset(name)

    def test_alias_matches_documented_parameters(self):
        """Test fig2a is the N = 100, kappa/beta = 1e-3 localized run."""
        config = load_preset("fig2a")
        assert (config.n_cavities, config.initial) == (100, "localized")
        assert config.kappa_over_beta == pytest.approx(1e-3)

    def test_aliases_are_unique(self):
        """Test no alias names two presets or shadows a preset name."""
        presets = list_presets()
        aliases = [alias for entry in presets.values() for alias in entry["aliases"]]
        assert len(aliases) == len(set(aliases))
        assert not set(aliases) & set(presets)

    def test_unknown_preset(self):
        """Test unknown names are config errors."""
        with pytest.raises(ConfigError, match="unknown preset"):
            load_preset("nope")

    def test_experiment_mismatch(self):
        """Test a preset cannot run under another experiment."""
        with pytest.raises(ConfigError, match="limits-report"):
            load_preset("limits", "spacetime")

    def test_limit_points(self):
        """Test the limits preset covers every regime."""
        points = load_preset("limits").limit_points
        assert len(points) == 4
        assert points[2].delta_over_beta == pytest.approx(1e3)
