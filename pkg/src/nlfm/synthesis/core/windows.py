"""
Fenêtres de Gauss et de Taylor utilisées comme gabarit de DSP, et leurs
fonctions de retard de groupe T_g(f) sous forme fermée.

Le principe de la phase stationnaire relie la pente du retard de groupe à la
fenêtre : dT_g/df = c * w(f). Les deux familles sont définies directement en
fréquence continue sur [-B/2, B/2], avec T_g(±B/2) = ±T/2.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Any, Dict, Tuple

import numpy as np
from loguru import logger
from numpy.typing import ArrayLike

from ...core.errors import InvalidParameterError, OutOfBandError
from .special import erf

# Atténuation en bord de bande w(±B/2) = 0.01 (-40 dB)
DEFAULT_GAUSSIAN_K = 16.0 * math.log(100.0)
DEFAULT_TAYLOR_NBAR = 5
DEFAULT_TAYLOR_ETA_DB = 40.0
DEFAULT_N_POINTS = 1001

# Tolérance relative sur les bornes de bande (arrondi des grilles)
_BAND_SLACK = 1e-12
_POSITIVITY_GRID = 10_001


class WindowFamily(str, Enum):
    GAUSSIAN = "gaussian"
    TAYLOR = "taylor"


@lru_cache(maxsize=128)
def _taylor_coefficients(nbar: int, eta_db: float) -> Tuple[float, ...]:
    ratio = 10.0 ** (eta_db / 20.0)
    a = math.acosh(ratio) / math.pi
    sigma2 = nbar ** 2 / (a ** 2 + (nbar - 0.5) ** 2)

    orders = np.arange(1, nbar)
    squares = orders.astype(float) ** 2
    values = []
    for i, m2 in enumerate(squares):
        numer = np.prod(1.0 - m2 / sigma2 / (a ** 2 + (orders - 0.5) ** 2))
        others = np.delete(squares, i)
        denom = np.prod(1.0 - m2 / others)
        sign = 1.0 if i % 2 == 0 else -1.0
        values.append(float(sign * numer / denom))
    return tuple(values)


def taylor_coefficients(nbar: int, eta_db: float) -> np.ndarray:
    """
    Coefficients F_m (m = 1..nbar-1) de la pondération de Taylor.

    Formule produit standard avec A = arccosh(10^(eta/20))/pi et
    sigma² = nbar² / (A² + (nbar - 0.5)²). Les coefficients sont normalisés
    pour la forme w(f) = 1 + sum F_m cos(2 pi m f / B), soit le double des
    coefficients de la forme 1 + 2 sum F_m cos(...).

    Args:
        nbar: Nombre de lobes secondaires de niveau quasi constant (>= 1)
        eta_db: Rapport lobe principal / lobe secondaire en dB (> 0)

    Returns:
        Tableau de nbar - 1 coefficients (vide si nbar = 1).
    """
    if int(nbar) != nbar or nbar < 1:
        raise InvalidParameterError(f"nbar doit être un entier >= 1 (reçu {nbar})")
    if not eta_db > 0:
        raise InvalidParameterError(f"eta_db doit être > 0 (reçu {eta_db})")
    return np.array(_taylor_coefficients(int(nbar), float(eta_db)), dtype=float)


@dataclass(frozen=True)
class WindowSpec:
    """Intention de conception : forme de DSP, bande B (Hz) et durée T (s)."""

    family: WindowFamily
    bandwidth: float
    pulse_length: float
    k: float = DEFAULT_GAUSSIAN_K
    nbar: int = DEFAULT_TAYLOR_NBAR
    eta_db: float = DEFAULT_TAYLOR_ETA_DB
    coefficients: Tuple[float, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "family", WindowFamily(self.family))
        if not (self.bandwidth > 0 and math.isfinite(self.bandwidth)):
            raise InvalidParameterError(f"bande B invalide: {self.bandwidth}")
        if not (self.pulse_length > 0 and math.isfinite(self.pulse_length)):
            raise InvalidParameterError(f"durée T invalide: {self.pulse_length}")

        if self.family is WindowFamily.GAUSSIAN:
            if not (self.k > 0 and math.isfinite(self.k)):
                raise InvalidParameterError(f"k doit être > 0 (reçu {self.k})")
        else:
            coefficients = tuple(taylor_coefficients(self.nbar, self.eta_db))
            object.__setattr__(self, "coefficients", coefficients)
            self._check_taylor_positivity()

    @classmethod
    def gaussian(cls, bandwidth: float, pulse_length: float, k: float = DEFAULT_GAUSSIAN_K) -> "WindowSpec":
        return cls(WindowFamily.GAUSSIAN, bandwidth, pulse_length, k=k)

    @classmethod
    def taylor(
        cls,
        bandwidth: float,
        pulse_length: float,
        nbar: int = DEFAULT_TAYLOR_NBAR,
        eta_db: float = DEFAULT_TAYLOR_ETA_DB,
    ) -> "WindowSpec":
        return cls(WindowFamily.TAYLOR, bandwidth, pulse_length, nbar=nbar, eta_db=eta_db)

    def _check_taylor_positivity(self):
        grid = np.linspace(-0.5, 0.5, _POSITIVITY_GRID) * self.bandwidth
        lowest = float(np.min(window_weight(self, grid)))
        if lowest <= 0:
            raise InvalidParameterError(
                f"fenêtre de Taylor non positive (nbar={self.nbar}, eta={self.eta_db} dB, min={lowest:.3g})"
            )

    def parameters(self) -> Dict[str, Any]:
        """Paramètres propres à la famille (provenance des rapports)."""
        if self.family is WindowFamily.GAUSSIAN:
            return {"k": self.k}
        return {"nbar": self.nbar, "eta_db": self.eta_db}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family.value,
            "bandwidth_hz": self.bandwidth,
            "pulse_length_s": self.pulse_length,
            **self.parameters(),
        }

    @property
    def label(self) -> str:
        params = ",".join(f"{key}={value:g}" for key, value in self.parameters().items())
        return f"{self.family.value}({params})"


def _checked_band(spec: WindowSpec, f: ArrayLike) -> np.ndarray:
    freqs = np.asarray(f, dtype=float)
    half = spec.bandwidth / 2.0
    limit = half * (1.0 + _BAND_SLACK)
    if not np.all(np.isfinite(freqs)) or np.any(np.abs(freqs) > limit):
        raise OutOfBandError(f"fréquence hors de [-B/2, B/2] (B = {spec.bandwidth:g} Hz)")
    return freqs


def _unwrap(values: np.ndarray):
    return float(values) if values.ndim == 0 else values


def window_weight(spec: WindowSpec, f: ArrayLike):
    """
    Poids w(f) de la fenêtre, strictement positif sur la bande.

    Gauss : exp(-k (f / 2B)²). Taylor : 1 + sum F_m cos(2 pi m f / B).
    """
    freqs = _checked_band(spec, f)
    if spec.family is WindowFamily.GAUSSIAN:
        weights = np.exp(-spec.k * (freqs / (2.0 * spec.bandwidth)) ** 2)
    else:
        weights = np.ones_like(freqs)
        for m, coefficient in enumerate(spec.coefficients, start=1):
            weights = weights + coefficient * np.cos(2.0 * np.pi * m * freqs / spec.bandwidth)
    return _unwrap(weights)


def group_delay(spec: WindowSpec, f: ArrayLike):
    """
    Retard de groupe T_g(f) en secondes.

    Gauss : T / (2 erf(sqrt(k)/4)) * erf(f sqrt(k) / 2B).
    Taylor : T (f/B + 1/(2 pi) sum (F_m / m) sin(2 pi m f / B)).
    Strictement croissant et impair ; T_g(±B/2) = ±T/2.
    """
    freqs = _checked_band(spec, f)
    T, B = spec.pulse_length, spec.bandwidth
    if spec.family is WindowFamily.GAUSSIAN:
        root_k = math.sqrt(spec.k)
        delays = T / (2.0 * erf(root_k / 4.0)) * erf(freqs * root_k / (2.0 * B))
    else:
        series = np.zeros_like(freqs)
        for m, coefficient in enumerate(spec.coefficients, start=1):
            series = series + coefficient / m * np.sin(2.0 * np.pi * m * freqs / B)
        delays = T * (freqs / B + series / (2.0 * np.pi))
    return _unwrap(np.asarray(delays, dtype=float))


@dataclass(frozen=True)
class GroupDelaySamples:
    """Couples (t_i, f_i) échantillonnés sur T_g, t strictement croissant."""

    time: np.ndarray
    frequency: np.ndarray

    def __len__(self) -> int:
        return len(self.time)

    def points(self):
        return list(zip(self.time.tolist(), self.frequency.tolist()))


def sample_group_delay(spec: WindowSpec, n_points: int = DEFAULT_N_POINTS) -> GroupDelaySamples:
    """
    Échantillonne T_g sur une grille uniforme en fréquence, bornes incluses.

    Args:
        spec: Fenêtre de conception
        n_points: Nombre de points (>= 2)

    Returns:
        GroupDelaySamples avec extrémités exactes (±T/2, ±B/2).
    """
    if int(n_points) != n_points or n_points < 2:
        raise InvalidParameterError(f"n_points doit être un entier >= 2 (reçu {n_points})")

    n_points = int(n_points)
    half_b = spec.bandwidth / 2.0
    half_t = spec.pulse_length / 2.0

    frequency = np.linspace(-half_b, half_b, n_points)
    time = np.asarray(group_delay(spec, frequency), dtype=float).reshape(n_points)

    # Conditions aux limites imposées exactement, point milieu exactement nul
    frequency[0], frequency[-1] = -half_b, half_b
    time[0], time[-1] = -half_t, half_t
    if n_points % 2 == 1:
        middle = n_points // 2
        frequency[middle] = 0.0
        time[middle] = 0.0

    if np.any(np.diff(time) <= 0):
        raise InvalidParameterError(f"retard de groupe non strictement croissant pour {spec.label}")

    logger.debug("Retard de groupe {} échantillonné sur {} points", spec.label, n_points)
    return GroupDelaySamples(time=time, frequency=frequency)
