"""
Test experiment config files
"""
import math

import pytest

from models.orbit import OrbitMode
from services.config_loader import load_config, load_config_text, parse_config_text
from services.experiments import run_distance_experiment
from services.presets import constellation_preset_text, figure_preset, figure_preset_text
from utils.errors import ConfigParseError, ConfigurationError


class TestParse:
    """Test statement parsing"""

    def test_values(self):
        """Test JSON scalars, lists and bare words"""
        values = parse_config_text(
            "# comment\n"
            "n_points = [100, 400, 1000]\n"
            "altitude_km = 550\n"
            "orbit_mode = paper  # trailing comment\n"
        )
        assert values == {'n_points': [100, 400, 1000], 'altitude_km': 550, 'orbit_mode': 'paper'}

    def test_malformed_line_number(self):
        """Test parse errors carry the line"""
        with pytest.raises(ConfigParseError) as exc:
            parse_config_text("seed = 1\n\nthis is not valid\n")
        assert exc.value.line == 3
        assert exc.value.exit_code == 2
        assert 'line 3' in exc.value.message

    def test_unknown_key(self):
        """Test unknown keys are rejected, not ignored"""
        with pytest.raises(ConfigParseError) as exc:
            parse_config_text("seed = 1\nwarp_factor = 9\n")
        assert 'warp_factor' in exc.value.message
        assert exc.value.line == 2

    def test_repeated_key(self):
        """Test a key set twice"""
        with pytest.raises(ConfigParseError):
            parse_config_text("seed = 1\nseed = 2\n")


class TestLoadConfig:
    """Test building experiment configs"""

    def test_preset_only(self):
        """Test a bare preset expands to the figure preset"""
        assert load_config_text("preset = fig5\n") == figure_preset('fig5')

    def test_conflicting_gamma_keys(self):
        """Test gamma_deg and gamma_rad together"""
        with pytest.raises(ConfigurationError) as exc:
            load_config_text("gamma_deg = 53\ngamma_rad = 0.9\n")
        assert 'gamma_deg' in exc.value.message

    def test_sweep_gives_one_row_per_value(self):
        """Test three n_points give three rows"""
        cfg = load_config_text(
            "source_model = bpp\ntarget_model = fibonacci\n"
            "n_points = [100, 400, 1000]\niterations = 1\n"
        )
        assert cfg.n_points_sweep == (100, 400, 1000)
        assert len(run_distance_experiment(cfg)) == 3

    def test_degrees_converted(self):
        """Test gamma in degrees becomes radians"""
        cfg = load_config_text(
            "source_model = bpp\ntarget_model = orbit\nn_points = [44]\n"
            "altitude_km = 550\ngamma_deg = [70, 53]\norbit_mode = paper\n"
        )
        assert cfg.gamma_sweep_rad == pytest.approx((math.radians(70), math.radians(53)))
        assert cfg.orbit_mode is OrbitMode.PAPER_LITERAL

    def test_overrides_win(self):
        """Test command-line values override file values"""
        cfg = load_config_text("preset = fig6\niterations = 500\nseed = 3\n",
                               overrides={'n_iterations': 7, 'base_seed': None})
        assert cfg.n_iterations == 7
        assert cfg.base_seed == 3

    def test_series_keys_apply_to_preset(self):
        """Test series keys narrow every series of a preset"""
        cfg = load_config_text("preset = fig5\naltitude_km = [550]\nn_points = [88]\n")
        assert all(s.altitudes_km == (550.0,) for s in cfg.series)
        assert all(s.n_points == (88,) for s in cfg.series)

    def test_validation_names_key(self):
        """Test invalid values are reported by key"""
        with pytest.raises(ConfigurationError) as exc:
            load_config_text("n_points = [0]\n")
        assert 'n_points' in exc.value.message
        with pytest.raises(ConfigurationError) as exc:
            load_config_text("solver = exact\nn_points = [100]\n")
        assert 'n_points' in exc.value.message
        with pytest.raises(ConfigurationError) as exc:
            load_config_text("altitude_km = [high]\n")
        assert 'altitude_km' in exc.value.message

    def test_unknown_preset(self):
        """Test unknown preset names"""
        with pytest.raises(ConfigurationError):
            load_config_text("preset = fig9\n")

    def test_missing_file(self, tmp_path):
        """Test unreadable files"""
        with pytest.raises(ConfigurationError):
            load_config(tmp_path / 'missing.cfg')

    def test_file(self, tmp_path):
        """Test loading from disk"""
        path = tmp_path / 'exp.cfg'
        path.write_text("preset = fig3\niterations = 5\n")
        cfg = load_config(path)
        assert cfg.name == 'fig3' and cfg.n_iterations == 5


class TestPresetText:
    """Test printed presets load back"""

    @pytest.mark.parametrize('name', ['fig3', 'fig4', 'fig5', 'fig6'])
    def test_figures_round_trip(self, name):
        """Test figure text reloads into the preset"""
        assert load_config_text(figure_preset_text(name)) == figure_preset(name)

    @pytest.mark.parametrize('name,n_points,altitude', [
        ('starlink', 1584, 550.0),
        ('iridium', 81, 778.0),
        ('oneweb', 720, 1200.0),
    ])
    def test_constellations_load(self, name, n_points, altitude):
        """Test constellation text is a valid experiment"""
        cfg = load_config_text(constellation_preset_text(name))
        assert cfg.n_points_sweep == (n_points,)
        assert cfg.altitude_sweep_km == (altitude,)
        assert cfg.target_model == 'orbit'
