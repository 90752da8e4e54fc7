"""
Configuration d'une conception (DesignConfig) et grille de balayage (SweepGrid).

Valeurs par défaut : paramètres de conception usuels, T = 2.5 µs,
B = 100 MHz, fs = 500 MHz.
"""

import itertools
import math
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence

from ..core.config import merge_overrides, read_key_values
from ..core.errors import ConfigError, InvalidParameterError
from ..core.units import parse_quantity
from .core.acf import DEFAULT_LEVEL_DB, DEFAULT_OVERSAMPLE
from .core.curve_fit import DEFAULT_POLYNOMIAL_DEGREE
from .core.plotting import DEFAULT_SPAN
from .core.waveform import FitMethod
from .core.windows import (
    DEFAULT_GAUSSIAN_K,
    DEFAULT_N_POINTS,
    DEFAULT_TAYLOR_ETA_DB,
    DEFAULT_TAYLOR_NBAR,
    WindowSpec,
)

METHODS = ("polynomial", "spline", "lfm")
WINDOWS = ("gaussian", "taylor")
GRID_KEYS = ("k", "nbar", "eta_db", "lambda", "degree", "n_points")
OBJECTIVES = ("psl", "weighted")
DEFAULT_OUTPUT_DIR = "nlfm_out"

# clé de fichier -> (attribut, convertisseur)
_FIELDS = {
    "window": ("window", str),
    "k": ("k", float),
    "nbar": ("nbar", int),
    "eta_db": ("eta_db", float),
    "t": ("pulse_length", lambda v: parse_quantity(v, "time")),
    "b": ("bandwidth", lambda v: parse_quantity(v, "frequency")),
    "fs": ("sample_rate", lambda v: parse_quantity(v, "frequency")),
    "method": ("method", str),
    "degree": ("degree", int),
    "lambda": ("lam", float),
    "n_points": ("n_points", int),
    "oversample": ("oversample", int),
    "level_db": ("level_db", float),
    "plot_span": ("plot_span", lambda v: parse_quantity(v, "time")),
    "out": ("output_dir", str),
}


@dataclass(frozen=True)
class DesignConfig:
    """Une configuration = une conception."""

    window: str = "gaussian"
    k: float = DEFAULT_GAUSSIAN_K
    nbar: int = DEFAULT_TAYLOR_NBAR
    eta_db: float = DEFAULT_TAYLOR_ETA_DB
    pulse_length: float = 2.5e-6
    bandwidth: float = 100e6
    sample_rate: float = 500e6
    method: str = "polynomial"
    degree: int = DEFAULT_POLYNOMIAL_DEGREE
    lam: Optional[float] = None
    n_points: int = DEFAULT_N_POINTS
    oversample: int = DEFAULT_OVERSAMPLE
    level_db: float = DEFAULT_LEVEL_DB
    plot_span: float = DEFAULT_SPAN
    output_dir: str = DEFAULT_OUTPUT_DIR

    def validate(self) -> "DesignConfig":
        """Lève ConfigError à la première règle violée ; renvoie self."""
        if self.window not in WINDOWS:
            raise ConfigError(f"fenêtre inconnue: {self.window!r} (attendu: {', '.join(WINDOWS)})")
        if self.method not in METHODS:
            raise ConfigError(f"méthode inconnue: {self.method!r} (attendu: {', '.join(METHODS)})")
        for name in ("pulse_length", "bandwidth", "sample_rate", "plot_span"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise ConfigError(f"{name} doit être > 0 (reçu {value})")
        if self.method == "spline" and self.lam is None:
            raise ConfigError("lambda est obligatoire pour la méthode spline")
        if self.lam is not None and not self.lam >= 0:
            raise ConfigError(f"lambda doit être >= 0 (reçu {self.lam})")
        if self.degree < 0:
            raise ConfigError(f"degree doit être >= 0 (reçu {self.degree})")
        if self.n_points < 2:
            raise ConfigError(f"n_points doit être >= 2 (reçu {self.n_points})")
        if self.oversample < 1:
            raise ConfigError(f"oversample doit être >= 1 (reçu {self.oversample})")
        if not self.level_db < 0:
            raise ConfigError(f"level_db doit être < 0 (reçu {self.level_db})")
        if self.method != "lfm":
            try:
                self.window_spec()
            except InvalidParameterError as e:
                raise ConfigError(str(e)) from e
        return self

    def window_spec(self) -> WindowSpec:
        if self.window == "gaussian":
            return WindowSpec.gaussian(self.bandwidth, self.pulse_length, k=self.k)
        return WindowSpec.taylor(self.bandwidth, self.pulse_length, nbar=self.nbar, eta_db=self.eta_db)

    def fit_method(self) -> FitMethod:
        if self.method == "spline":
            return FitMethod.smoothing_spline(self.lam)
        return FitMethod.polynomial(self.degree)

    @property
    def window_label(self) -> str:
        return "lfm" if self.method == "lfm" else self.window

    @property
    def method_label(self) -> str:
        return {"spline": "smoothing_spline"}.get(self.method, self.method)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def with_values(self, **changes) -> "DesignConfig":
        return replace(self, **changes)


def config_from_mapping(values: Mapping[str, str], base: Optional[DesignConfig] = None) -> DesignConfig:
    """Construit un DesignConfig à partir de chaînes ``clé -> valeur``."""
    changes: Dict[str, Any] = {}
    for key, raw in values.items():
        name = key.strip().lower().replace("-", "_")
        if name not in _FIELDS:
            raise ConfigError(f"clé de configuration inconnue: {key!r}")
        attribute, convert = _FIELDS[name]
        try:
            changes[attribute] = convert(raw)
        except ValueError as e:
            raise ConfigError(f"valeur invalide pour {key!r}: {raw!r}") from e
    if "window" in changes:
        changes["window"] = changes["window"].lower()
    if "method" in changes:
        changes["method"] = changes["method"].lower()
    return replace(base or DesignConfig(), **changes)


def load_config(path: Optional[Path] = None, overrides: Optional[Mapping[str, Optional[str]]] = None) -> DesignConfig:
    """
    Charge un fichier ``clé = valeur`` puis applique les options CLI.

    Args:
        path: Fichier de configuration (None : valeurs par défaut seules)
        overrides: Valeurs issues de la ligne de commande (None = absent)

    Returns:
        DesignConfig validé.
    """
    values = read_key_values(path) if path is not None else {}
    return config_from_mapping(merge_overrides(values, overrides)).validate()


# clé de grille -> conceptions sur lesquelles elle agit
_GRID_SCOPE = {
    "k": lambda c: c.method != "lfm" and c.window == "gaussian",
    "nbar": lambda c: c.method != "lfm" and c.window == "taylor",
    "eta_db": lambda c: c.method != "lfm" and c.window == "taylor",
    "lambda": lambda c: c.method == "spline",
    "degree": lambda c: c.method == "polynomial",
    "n_points": lambda c: c.method != "lfm",
}


@dataclass(frozen=True)
class SweepGrid:
    """Listes de valeurs pour un sous-ensemble de GRID_KEYS ; produit cartésien."""

    values: Dict[str, List[str]] = field(default_factory=dict)
    objective: str = "psl"
    mlw_weight: float = 10.0

    def __post_init__(self):
        if not self.values:
            raise ConfigError("grille de balayage vide")
        for key, choices in self.values.items():
            if key not in GRID_KEYS:
                raise ConfigError(f"clé de grille inconnue: {key!r} (attendu: {', '.join(GRID_KEYS)})")
            if not choices:
                raise ConfigError(f"aucune valeur pour {key!r}")
        if self.objective not in OBJECTIVES:
            raise ConfigError(f"objectif inconnu: {self.objective!r}")

    @classmethod
    def parse(cls, specs: Sequence[str], objective: str = "psl", mlw_weight: float = 10.0) -> "SweepGrid":
        """Analyse des options ``--grid clé=v1,v2,...``."""
        values: Dict[str, List[str]] = {}
        for spec in specs or ():
            if "=" not in spec:
                raise ConfigError(f"grille mal formée: {spec!r} (attendu clé=v1,v2)")
            key, _, raw = spec.partition("=")
            key = key.strip().lower().replace("-", "_")
            values.setdefault(key, []).extend(v.strip() for v in raw.split(",") if v.strip())
        return cls(values=values, objective=objective, mlw_weight=mlw_weight)

    def check_applicable(self, base: DesignConfig) -> "SweepGrid":
        """Lève ConfigError si une clé de la grille est sans effet sur la conception de base."""
        for key in self.keys:
            if not _GRID_SCOPE[key](base):
                raise ConfigError(
                    f"clé de grille {key!r} sans effet pour window={base.window}, method={base.method}"
                )
        return self

    @property
    def keys(self) -> List[str]:
        return list(self.values)

    def points(self) -> List[Dict[str, str]]:
        """Points de la grille dans l'ordre lexicographique des listes."""
        keys = self.keys
        return [dict(zip(keys, combo)) for combo in itertools.product(*(self.values[k] for k in keys))]

    def __len__(self) -> int:
        return len(self.points())
