"""
Conversion des grandeurs saisies en CLI ou en fichier de configuration.

Les suffixes acceptés sont convertis en unités SI (secondes, hertz) :
``2.5us`` -> 2.5e-6, ``100MHz`` -> 1e8. Une valeur sans suffixe est
supposée déjà en unité SI.
"""

import re
from typing import Dict, Optional

from .errors import ConfigError

TIME_UNITS: Dict[str, float] = {
    "s": 1.0,
    "ms": 1e-3,
    "us": 1e-6,
    "µs": 1e-6,
    "μs": 1e-6,
    "ns": 1e-9,
}

FREQUENCY_UNITS: Dict[str, float] = {
    "hz": 1.0,
    "khz": 1e3,
    "mhz": 1e6,
    "ghz": 1e9,
}

_QUANTITY = re.compile(r"^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*([A-Za-zµμ]*)\s*$")


def parse_quantity(text: str, kind: Optional[str] = None) -> float:
    """
    Convertit une chaîne avec suffixe d'unité en float SI.

    Args:
        text: Valeur saisie (ex: "2.5us", "100 MHz", "5e8")
        kind: "time", "frequency" ou None pour accepter les deux familles

    Returns:
        La valeur en secondes ou en hertz.

    Raises:
        ConfigError: si la valeur ou le suffixe est inconnu
    """
    match = _QUANTITY.match(str(text))
    if not match:
        raise ConfigError(f"valeur numérique invalide: {text!r}")

    value = float(match.group(1))
    suffix = match.group(2)
    if not suffix:
        return value

    if kind in (None, "time") and suffix in TIME_UNITS:
        return value * TIME_UNITS[suffix]
    if kind in (None, "frequency") and suffix.lower() in FREQUENCY_UNITS:
        return value * FREQUENCY_UNITS[suffix.lower()]

    raise ConfigError(f"unité inconnue {suffix!r} dans {text!r}")


def format_microseconds(seconds: float) -> str:
    """2.5e-6 -> '2.5'"""
    return f"{seconds * 1e6:g}"
