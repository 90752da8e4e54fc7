"""Tests unitaires pour DesignConfig, load_config() et SweepGrid"""

import pytest

from nlfm.core.errors import ConfigError
from nlfm.synthesis.config import DesignConfig, SweepGrid, config_from_mapping, load_config
from nlfm.synthesis.core.windows import WindowFamily


# ============================================================================
# Tests DesignConfig
# ============================================================================

class TestDesignConfig:
    """Tests pour DesignConfig."""

    def test_defaults(self):
        config = DesignConfig().validate()
        assert config.pulse_length == 2.5e-6
        assert config.bandwidth == 100e6
        assert config.sample_rate == 500e6
        assert config.method == "polynomial"
        assert config.degree == 9
        assert config.output_dir == "nlfm_out"

    def test_spline_requires_lambda(self):
        with pytest.raises(ConfigError, match="lambda"):
            DesignConfig(method="spline").validate()

    @pytest.mark.parametrize("changes", [
        {"window": "hamming"},
        {"method": "cubic"},
        {"pulse_length": 0.0},
        {"bandwidth": -1.0},
        {"sample_rate": float("inf")},
        {"n_points": 1},
        {"oversample": 0},
        {"level_db": 0.0},
        {"degree": -1},
        {"method": "spline", "lam": -1.0},
        {"window": "taylor", "nbar": 0},
    ])
    def test_invalid_values(self, changes):
        with pytest.raises(ConfigError):
            DesignConfig(**changes).validate()

    def test_lfm_skips_window_validation(self):
        config = DesignConfig(method="lfm", k=-1.0).validate()
        assert config.window_label == "lfm"
        assert config.method_label == "lfm"

    def test_window_spec(self):
        spec = DesignConfig(window="taylor", nbar=4, eta_db=35.0).window_spec()
        assert spec.family is WindowFamily.TAYLOR
        assert (spec.nbar, spec.eta_db) == (4, 35.0)

    def test_fit_method(self):
        assert DesignConfig(method="spline", lam=1e-21).fit_method().to_dict() == {
            "kind": "smoothing_spline", "lambda": 1e-21,
        }
        assert DesignConfig(degree=7).fit_method().degree == 7

    def test_method_label(self):
        assert DesignConfig(method="spline", lam=0.0).method_label == "smoothing_spline"
        assert DesignConfig().method_label == "polynomial"


# ============================================================================
# Tests config_from_mapping() / load_config()
# ============================================================================

class TestLoadConfig:
    """Tests pour load_config()."""

    def test_units_converted(self):
        config = config_from_mapping({"T": "10us", "B": "50MHz", "fs": "200 MHz", "lambda": "1e-21"})
        assert config.pulse_length == pytest.approx(10e-6)
        assert config.bandwidth == pytest.approx(50e6)
        assert config.sample_rate == pytest.approx(200e6)
        assert config.lam == 1e-21

    def test_unknown_key(self):
        with pytest.raises(ConfigError, match="inconnue"):
            config_from_mapping({"colour": "blue"})

    def test_bad_number(self):
        with pytest.raises(ConfigError):
            config_from_mapping({"degree": "nine"})

    def test_case_normalized(self):
        config = config_from_mapping({"window": "Taylor", "method": "SPLINE", "lambda": "0"})
        assert config.window == "taylor"
        assert config.method == "spline"

    def test_file_then_overrides(self, write_config):
        path = write_config(window="taylor", T="10us", method="spline", **{"lambda": "1e-20"})
        config = load_config(path, {"t": "2.5us", "out": "results", "k": None})

        assert config.window == "taylor"
        assert config.pulse_length == pytest.approx(2.5e-6)
        assert config.lam == 1e-20
        assert config.output_dir == "results"

    def test_defaults_without_file(self):
        assert load_config() == DesignConfig()

    def test_missing_file(self, temp_dir):
        with pytest.raises(OSError):
            load_config(temp_dir / "absent.conf")

    def test_invalid_file_value(self, write_config):
        with pytest.raises(ConfigError):
            load_config(write_config(fs="fast"))


# ============================================================================
# Tests SweepGrid
# ============================================================================

class TestSweepGrid:
    """Tests pour SweepGrid."""

    def test_parse_and_points(self):
        grid = SweepGrid.parse(["lambda=1e-22,1e-21", "k=40,73.68"])

        assert grid.keys == ["lambda", "k"]
        assert len(grid) == 4
        assert grid.points() == [
            {"lambda": "1e-22", "k": "40"},
            {"lambda": "1e-22", "k": "73.68"},
            {"lambda": "1e-21", "k": "40"},
            {"lambda": "1e-21", "k": "73.68"},
        ]

    def test_repeated_key_extends(self):
        grid = SweepGrid.parse(["degree=5", "degree=7,9"])
        assert grid.values == {"degree": ["5", "7", "9"]}

    def test_hyphenated_key(self):
        assert SweepGrid.parse(["n-points=101"]).keys == ["n_points"]

    @pytest.mark.parametrize("specs", [[], ["T=1us"], ["k="], ["lambda"]])
    def test_invalid_grid(self, specs):
        with pytest.raises(ConfigError):
            SweepGrid.parse(specs)

    def test_invalid_objective(self):
        with pytest.raises(ConfigError):
            SweepGrid.parse(["k=40"], objective="isl")

    @pytest.mark.parametrize("specs,window,method", [
        (["lambda=0,1e-21", "n_points=501"], "gaussian", "spline"),
        (["degree=5,9", "k=40"], "gaussian", "polynomial"),
        (["nbar=4,5", "eta_db=35"], "taylor", "spline"),
    ])
    def test_applicable_keys(self, specs, window, method):
        base = DesignConfig(window=window, method=method, lam=0.0)
        grid = SweepGrid.parse(specs)
        assert grid.check_applicable(base) is grid

    @pytest.mark.parametrize("spec,window,method", [
        ("lambda=0,1e-21", "gaussian", "polynomial"),
        ("degree=5,9", "gaussian", "spline"),
        ("k=40,100", "taylor", "polynomial"),
        ("nbar=4,6", "gaussian", "spline"),
        ("eta_db=35", "gaussian", "polynomial"),
        ("n_points=101", "gaussian", "lfm"),
        ("k=40", "gaussian", "lfm"),
    ])
    def test_inapplicable_key(self, spec, window, method):
        base = DesignConfig(window=window, method=method, lam=0.0)
        key = spec.partition("=")[0]
        with pytest.raises(ConfigError, match=key):
            SweepGrid.parse([spec]).check_applicable(base)
