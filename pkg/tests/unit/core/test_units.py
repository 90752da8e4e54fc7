"""Tests unitaires pour la conversion des unités (parse_quantity)"""

import pytest

from nlfm.core.errors import ConfigError
from nlfm.core.units import format_microseconds, parse_quantity


class TestParseQuantity:
    """Tests pour la fonction parse_quantity()."""

    @pytest.mark.parametrize("text,expected", [
        ("2.5us", 2.5e-6),
        ("10 µs", 10e-6),
        ("10μs", 10e-6),
        ("3ms", 3e-3),
        ("40ns", 40e-9),
        ("1s", 1.0),
    ])
    def test_time_suffixes(self, text, expected):
        """Test des suffixes de temps."""
        assert parse_quantity(text, "time") == pytest.approx(expected, rel=1e-15)

    @pytest.mark.parametrize("text,expected", [
        ("100MHz", 100e6),
        ("100 mhz", 100e6),
        ("500MHZ", 500e6),
        ("2kHz", 2e3),
        ("1.5GHz", 1.5e9),
        ("50Hz", 50.0),
    ])
    def test_frequency_suffixes(self, text, expected):
        """Test des suffixes de fréquence (insensibles à la casse)."""
        assert parse_quantity(text, "frequency") == pytest.approx(expected, rel=1e-15)

    def test_plain_number_is_si(self):
        """Test qu'une valeur sans suffixe est déjà en unité SI."""
        assert parse_quantity("5e8") == 5e8
        assert parse_quantity("2.5e-6", "time") == 2.5e-6

    def test_wrong_family_rejected(self):
        """Test qu'un suffixe de fréquence est refusé pour une durée."""
        with pytest.raises(ConfigError):
            parse_quantity("100MHz", "time")
        with pytest.raises(ConfigError):
            parse_quantity("2.5us", "frequency")

    def test_unknown_suffix(self):
        """Test d'un suffixe inconnu."""
        with pytest.raises(ConfigError, match="unité inconnue"):
            parse_quantity("3 parsecs")

    def test_garbage(self):
        """Test d'une valeur non numérique."""
        with pytest.raises(ConfigError):
            parse_quantity("abc")

    def test_config_error_is_value_error(self):
        """Test que ConfigError reste attrapable comme ValueError."""
        with pytest.raises(ValueError):
            parse_quantity("")


class TestFormatMicroseconds:
    """Tests pour format_microseconds()."""

    def test_format(self):
        assert format_microseconds(2.5e-6) == "2.5"
        assert format_microseconds(10e-6) == "10"
