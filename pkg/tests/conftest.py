"""
Configuration commune pour les tests pytest.
"""

import pytest
import tempfile
from pathlib import Path

from nlfm.synthesis.config import DesignConfig


@pytest.fixture
def temp_dir():
    """Crée un répertoire temporaire pour les tests."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def small_config():
    """Conception rapide : T = 1 µs, B = 20 MHz, fs = 100 MHz (N = 100)."""
    return DesignConfig(
        window="gaussian",
        pulse_length=1e-6,
        bandwidth=20e6,
        sample_rate=100e6,
        method="polynomial",
        degree=9,
        n_points=201,
        oversample=2,
    )


@pytest.fixture
def write_config(temp_dir):
    """Fabrique de fichiers de configuration ``clé = valeur``."""
    def _write(name="design.conf", **values):
        path = temp_dir / name
        lines = [f"{key} = {value}" for key, value in values.items()]
        path.write_text("\n".join(lines) + "\n", encoding='utf-8')
        return path
    return _write
