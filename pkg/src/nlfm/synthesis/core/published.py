"""
Valeurs publiées de PSL et NMLW servant de points de comparaison.

Clé : (fenêtre, durée en µs, méthode) ; méthodes ``polynomial``,
``smoothing_spline`` et ``reference_design`` (conception de comparaison
publiée, donnée seulement pour 10 µs).
"""

from typing import Dict, Optional, Tuple

Key = Tuple[str, float, str]

PUBLISHED_PSL_DB: Dict[Key, float] = {
    ("gaussian", 2.5, "polynomial"): -31.64,
    ("gaussian", 10.0, "polynomial"): -32.46,
    ("taylor", 2.5, "polynomial"): -33.34,
    ("taylor", 10.0, "polynomial"): -33.57,
    ("gaussian", 10.0, "reference_design"): -42.3,
    ("taylor", 10.0, "reference_design"): -43.0,
    ("gaussian", 2.5, "smoothing_spline"): -41.69,
    ("gaussian", 10.0, "smoothing_spline"): -52.46,
    ("taylor", 2.5, "smoothing_spline"): -40.46,
    ("taylor", 10.0, "smoothing_spline"): -50.40,
}

PUBLISHED_NMLW: Dict[Key, float] = {
    ("gaussian", 2.5, "polynomial"): 1.39,
    ("gaussian", 10.0, "polynomial"): 1.36,
    ("taylor", 2.5, "polynomial"): 1.36,
    ("taylor", 10.0, "polynomial"): 1.35,
    ("gaussian", 10.0, "reference_design"): 1.37,
    ("taylor", 10.0, "reference_design"): 1.31,
    ("gaussian", 2.5, "smoothing_spline"): 2.01,
    ("gaussian", 10.0, "smoothing_spline"): 2.24,
    ("taylor", 2.5, "smoothing_spline"): 1.88,
    ("taylor", 10.0, "smoothing_spline"): 1.83,
}


def _key(window: str, pulse_length: float, method: str) -> Key:
    return window, round(pulse_length * 1e6, 3), method


def published_psl(window: str, pulse_length: float, method: str) -> Optional[float]:
    """PSL publié (dB) pour une durée donnée en secondes, ou None."""
    return PUBLISHED_PSL_DB.get(_key(window, pulse_length, method))


def published_nmlw(window: str, pulse_length: float, method: str) -> Optional[float]:
    return PUBLISHED_NMLW.get(_key(window, pulse_length, method))
