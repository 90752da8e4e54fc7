"""
Fonction d'autocorrélation (ACF), densité spectrale de puissance et
métriques d'évaluation : PSL, largeur du lobe principal (MLW) à -4 dB
et largeur normalisée NMLW (rapport à la LFM de même T et B).

L'ACF linéaire est calculée par FFT avec bourrage de zéros à la puissance
de deux >= 2N - 1, puis normalisée par |R(0)|. Un facteur de
suréchantillonnage optionnel interpole la courbe par Fourier avant la
lecture des métriques.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np
from scipy import signal
from scipy.stats import pearsonr

from ...core.errors import (
    DegenerateMainlobeError,
    InvalidInputError,
    InvalidParameterError,
    NumericalError,
)
from .waveform import Waveform
from .windows import WindowSpec, window_weight

DEFAULT_LEVEL_DB = -4.0
DEFAULT_OVERSAMPLE = 4
DB_FLOOR = -200.0
_MAGNITUDE_FLOOR = 1e-10


def next_power_of_two(n: int) -> int:
    return 1 << max(int(n) - 1, 0).bit_length()


@dataclass(frozen=True)
class AcfCurve:
    """Module de l'ACF normalisé (1 au retard nul) sur retards symétriques."""

    lags: np.ndarray
    magnitude: np.ndarray

    @property
    def center(self) -> int:
        return self.lags.size // 2

    @property
    def db(self) -> np.ndarray:
        """20 log10 |R|, plancher à -200 dB."""
        floored = np.maximum(self.magnitude, _MAGNITUDE_FLOOR)
        return np.maximum(20.0 * np.log10(floored), DB_FLOOR)

    @property
    def lag_step(self) -> float:
        return float(self.lags[1] - self.lags[0]) if self.lags.size > 1 else 0.0


@dataclass(frozen=True)
class Spectrum:
    """DSP centrée sur la fréquence nulle, axe dans [-fs/2, fs/2)."""

    frequency: np.ndarray
    power: np.ndarray


def _samples(waveform: Waveform) -> np.ndarray:
    samples = np.asarray(waveform.samples, dtype=complex)
    if samples.size == 0:
        raise InvalidInputError("forme d'onde vide")
    if not np.all(np.isfinite(samples)):
        raise NumericalError("échantillons non finis")
    return samples


def autocorrelation(waveform: Waveform, oversample: int = 1) -> AcfCurve:
    """
    ACF linéaire R(k) = sum x(n) x*(n - k) pour les 2N - 1 retards.

    Args:
        waveform: Impulsion à analyser
        oversample: Facteur d'interpolation de Fourier (1 = retards entiers)

    Returns:
        AcfCurve de 2N - 1 points (ou (2N - 2) * oversample + 1 si oversample > 1).
    """
    if int(oversample) != oversample or oversample < 1:
        raise InvalidParameterError(f"oversample doit être un entier >= 1 (reçu {oversample})")
    oversample = int(oversample)

    samples = _samples(waveform)
    n = samples.size
    nfft = next_power_of_two(2 * n - 1)

    spectrum = np.fft.fft(samples, nfft)
    circular = np.fft.ifft(np.abs(spectrum) ** 2)

    if oversample > 1:
        circular = signal.resample(circular, nfft * oversample)
    last = (n - 1) * oversample
    if last > 0:
        values = np.concatenate((circular[-last:], circular[: last + 1]))
    else:
        values = circular[:1]

    peak = np.abs(circular[0])
    if not peak > 0:
        raise NumericalError("énergie nulle")
    magnitude = np.abs(values) / peak
    magnitude[last] = 1.0

    lags = np.arange(-last, last + 1) / (waveform.sample_rate * oversample)
    return AcfCurve(lags=lags, magnitude=magnitude)


def direct_autocorrelation(samples: np.ndarray) -> np.ndarray:
    """R(k) par définition O(N²), k = -(N-1)..N-1 (oracle)."""
    return np.correlate(samples, samples, mode="full")


def psd(waveform: Waveform, nfft: Optional[int] = None) -> Spectrum:
    """
    |DFT(x bourré à nfft)|², axe centré [-fs/2, fs/2).

    Args:
        waveform: Impulsion
        nfft: Taille de FFT (>= N ; par défaut la puissance de deux >= N)
    """
    samples = _samples(waveform)
    if nfft is None:
        nfft = next_power_of_two(samples.size)
    if nfft < samples.size:
        raise InvalidParameterError(f"nfft = {nfft} < N = {samples.size}")
    power = np.abs(np.fft.fft(samples, nfft)) ** 2
    frequency = np.fft.fftshift(np.fft.fftfreq(nfft, d=1.0 / waveform.sample_rate))
    return Spectrum(frequency=frequency, power=np.fft.fftshift(power))


def psd_window_correlation(waveform: Waveform, spec: WindowSpec, n_bins: int = 64, nfft: Optional[int] = None) -> float:
    """
    Corrélation de Pearson entre la DSP (moyennée par bandes) et w(f).

    Vérifie empiriquement la règle de la phase stationnaire |X(f)|² ~ w(f)
    sur [-B/2, B/2] ; la moyenne par bandes gomme les ondulations de Fresnel.
    """
    if nfft is None:
        nfft = 8 * next_power_of_two(len(waveform))
    spectrum = psd(waveform, nfft)
    half = spec.bandwidth / 2.0
    edges = np.linspace(-half, half, n_bins + 1)
    index = np.digitize(spectrum.frequency, edges) - 1
    inside = (index >= 0) & (index < n_bins)

    sums = np.bincount(index[inside], weights=spectrum.power[inside], minlength=n_bins)
    counts = np.bincount(index[inside], minlength=n_bins)
    populated = counts > 0
    centers = (edges[:-1] + edges[1:]) / 2.0

    averaged = sums[populated] / counts[populated]
    target = np.asarray(window_weight(spec, centers[populated]))
    return float(pearsonr(averaged, target)[0])


def _first_minimum(side: np.ndarray) -> Optional[int]:
    """Indice du premier minimum local strict (baisse stricte puis hausse stricte)."""
    if side.size < 3:
        return None
    step = np.diff(side)
    candidates = np.nonzero((step[:-1] < 0) & (step[1:] > 0))[0]
    if candidates.size == 0:
        return None
    return int(candidates[0]) + 1


def mainlobe_extent(curve: AcfCurve) -> Tuple[Optional[int], Optional[int]]:
    """Indices (gauche, droite) du premier minimum de part et d'autre du pic."""
    c = curve.center
    right = _first_minimum(curve.magnitude[c:])
    left = _first_minimum(curve.magnitude[: c + 1][::-1])
    return (None if left is None else c - left), (None if right is None else c + right)


def psl(curve: AcfCurve) -> Optional[float]:
    """
    Niveau du plus haut lobe secondaire en dB (<= 0).

    Le lobe principal s'étend jusqu'au premier minimum local strict de chaque
    côté du pic. Renvoie None quand aucun lobe secondaire n'existe (ACF
    décroissant de façon monotone, ex. triangle d'une impulsion rectangulaire).
    """
    left, right = mainlobe_extent(curve)
    if left is None and right is None:
        return None

    outside = []
    if left is not None:
        outside.append(curve.magnitude[: left + 1])
    if right is not None:
        outside.append(curve.magnitude[right:])
    peak = float(np.max(np.concatenate(outside)))
    return float(20.0 * np.log10(max(peak, _MAGNITUDE_FLOOR)))


def _crossing(lags: np.ndarray, db: np.ndarray, level_db: float) -> float:
    below = np.nonzero(db < level_db)[0]
    if below.size == 0:
        raise DegenerateMainlobeError(f"la courbe ne descend jamais sous {level_db} dB")
    j = int(below[0])
    upper, lower = db[j - 1], db[j]
    fraction = (level_db - upper) / (lower - upper)
    return float(lags[j - 1] + fraction * (lags[j] - lags[j - 1]))


def mlw(curve: AcfCurve, level_db: float = DEFAULT_LEVEL_DB) -> float:
    """
    Largeur du lobe principal au niveau ``level_db`` (secondes).

    Premiers franchissements de part et d'autre du pic, affinés par
    interpolation linéaire en dB entre retards adjacents.
    """
    if not level_db < 0:
        raise InvalidParameterError(f"level_db doit être < 0 (reçu {level_db})")
    c = curve.center
    db = curve.db
    right = _crossing(curve.lags[c:], db[c:], level_db)
    left = _crossing(-curve.lags[: c + 1][::-1], db[: c + 1][::-1], level_db)
    return right + left


def nmlw(nlfm_curve: AcfCurve, lfm_curve: AcfCurve, level_db: float = DEFAULT_LEVEL_DB) -> float:
    """Rapport mlw(NLFM) / mlw(LFM) au même niveau."""
    return mlw(nlfm_curve, level_db) / mlw(lfm_curve, level_db)


@dataclass
class AcfReport:
    """Métriques scalaires d'une conception, brutes (fs) et affinées (suréchantillonnées)."""

    psl_db: Optional[float]
    mlw_seconds: float
    nmlw: float
    curve: AcfCurve
    label: Dict[str, Any] = field(default_factory=dict)
    psl_db_raw: Optional[float] = None
    mlw_seconds_raw: Optional[float] = None
    mlw_3db_seconds: Optional[float] = None
    oversample: int = DEFAULT_OVERSAMPLE
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "psl_db": self.psl_db,
            "psl_db_raw": self.psl_db_raw,
            "sidelobes": self.psl_db is not None,
            "mlw_seconds": self.mlw_seconds,
            "mlw_seconds_raw": self.mlw_seconds_raw,
            "mlw_3db_seconds": self.mlw_3db_seconds,
            "nmlw": self.nmlw,
            "oversample": self.oversample,
            "provenance": self.label,
            "diagnostics": self.diagnostics,
        }


def evaluate_waveform(
    waveform: Waveform,
    reference: Waveform,
    oversample: int = DEFAULT_OVERSAMPLE,
    level_db: float = DEFAULT_LEVEL_DB,
) -> AcfReport:
    """
    Calcule PSL, MLW et NMLW d'une impulsion face à sa référence LFM.

    Les valeurs principales sont lues sur la courbe suréchantillonnée ; les
    valeurs brutes (retards entiers) sont jointes au rapport.
    """
    raw = autocorrelation(waveform, 1)
    refined = autocorrelation(waveform, oversample) if oversample > 1 else raw
    reference_curve = autocorrelation(reference, oversample)

    width = mlw(refined, level_db)
    report = AcfReport(
        psl_db=psl(refined),
        mlw_seconds=width,
        nmlw=width / mlw(reference_curve, level_db),
        curve=refined,
        label=dict(waveform.label),
        psl_db_raw=psl(raw),
        mlw_seconds_raw=mlw(raw, level_db),
        mlw_3db_seconds=mlw(refined, -3.0),
        oversample=int(oversample),
    )
    for value in (report.mlw_seconds, report.nmlw, report.psl_db):
        if value is not None and not np.isfinite(value):
            raise NumericalError("métrique non finie")
    return report
