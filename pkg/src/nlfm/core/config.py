"""
Lecture des fichiers de configuration plats ``clé = valeur``.

Le format est celui d'un fichier .env : une affectation par ligne,
commentaires introduits par ``#``. Le parseur est celui de python-dotenv.
"""

from pathlib import Path
from typing import Dict, Mapping, Optional

from dotenv import dotenv_values

from .errors import ConfigError


def read_key_values(path: Path) -> Dict[str, str]:
    """
    Lit un fichier ``clé = valeur``.

    Args:
        path: Chemin du fichier

    Returns:
        Dictionnaire clé -> valeur (chaînes), clés en minuscules.

    Raises:
        OSError: si le fichier est illisible
        ConfigError: si une clé n'a pas de valeur
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"fichier de configuration introuvable: {path}")

    values = dotenv_values(path, encoding='utf-8')
    result: Dict[str, str] = {}
    for key, value in values.items():
        if value is None:
            raise ConfigError(f"{path}: clé sans valeur: {key!r}")
        result[key.strip().lower().replace("-", "_")] = value.strip()
    return result


def merge_overrides(base: Mapping[str, str], overrides: Optional[Mapping[str, Optional[str]]]) -> Dict[str, str]:
    """Les options CLI (non None) écrasent les valeurs du fichier."""
    merged = dict(base)
    for key, value in (overrides or {}).items():
        if value is not None:
            merged[key] = str(value)
    return merged
