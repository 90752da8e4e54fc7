"""
Synthèse des impulsions à enveloppe constante x(t) = exp(j phi(t)).

La loi de fréquence f(t) (inverse du retard de groupe) est intégrée en phase
par trapèzes cumulés sur une grille de points milieux
t_i = -T/2 + (i + 0.5) / fs, qui reste strictement dans le domaine ajusté.
L'impulsion LFM de référence utilise la phase quadratique exacte.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Union

import numpy as np
from loguru import logger
from scipy.integrate import cumulative_trapezoid

from ...core.errors import AliasingError, InvalidParameterError, NumericalError
from .curve_fit import (
    DEFAULT_POLYNOMIAL_DEGREE,
    DataSet,
    FittedModel,
    fit_polynomial,
    fit_smoothing_spline,
)
from .windows import DEFAULT_N_POINTS, WindowSpec, sample_group_delay

MONOTONE_SCAN_POINTS = 10_000
OVERSHOOT_TOLERANCE = 0.01


@dataclass(frozen=True)
class FitMethod:
    """Méthode d'inversion : polynôme (degré) ou spline de lissage (lambda)."""

    kind: str
    degree: Optional[int] = None
    lam: Optional[float] = None

    def __post_init__(self):
        if self.kind == "polynomial":
            if self.degree is None:
                object.__setattr__(self, "degree", DEFAULT_POLYNOMIAL_DEGREE)
        elif self.kind == "smoothing_spline":
            if self.lam is None:
                raise InvalidParameterError("lambda est obligatoire pour la spline de lissage")
        else:
            raise InvalidParameterError(f"méthode inconnue: {self.kind!r}")

    @classmethod
    def polynomial(cls, degree: int = DEFAULT_POLYNOMIAL_DEGREE) -> "FitMethod":
        return cls("polynomial", degree=degree)

    @classmethod
    def smoothing_spline(cls, lam: float) -> "FitMethod":
        return cls("smoothing_spline", lam=lam)

    def fit(self, data: DataSet) -> FittedModel:
        if self.kind == "polynomial":
            return fit_polynomial(data, self.degree)
        return fit_smoothing_spline(data, self.lam)

    def to_dict(self) -> Dict[str, Any]:
        if self.kind == "polynomial":
            return {"kind": self.kind, "degree": self.degree}
        return {"kind": self.kind, "lambda": self.lam}

    @property
    def label(self) -> str:
        if self.kind == "polynomial":
            return f"polynomial(degree={self.degree})"
        return f"smoothing_spline(lambda={self.lam:g})"


@dataclass(frozen=True)
class FrequencyModel:
    """Loi f(t) ajustée, avec sa provenance et ses diagnostics."""

    fit: FittedModel
    spec: WindowSpec
    method: FitMethod
    monotone: bool
    overshoot: bool
    fit_residual_max: float
    diagnostics: List[str] = field(default_factory=list)

    def evaluate(self, t):
        return self.fit.evaluate(t)

    __call__ = evaluate

    def to_dict(self) -> Dict[str, Any]:
        return {
            "window": self.spec.to_dict(),
            "method": self.method.to_dict(),
            "monotone": self.monotone,
            "overshoot": self.overshoot,
            "fit_residual_max_hz": self.fit_residual_max,
            "diagnostics": list(self.diagnostics),
            "model": self.fit.to_dict(),
        }


def design_frequency_function(
    spec: WindowSpec,
    method: FitMethod,
    n_points: int = DEFAULT_N_POINTS,
) -> FrequencyModel:
    """
    Échantillonne T_g, ajuste l'inverse t -> f et contrôle la loi obtenue.

    Une loi non monotone est renvoyée (monotone=False) avec un diagnostic :
    la mesure de PSL révèle le dommage.
    """
    samples = sample_group_delay(spec, n_points)
    data = DataSet(x=samples.time, y=samples.frequency)
    fit = method.fit(data)

    diagnostics = []
    half_t = spec.pulse_length / 2.0
    scan = np.asarray(fit.evaluate(np.linspace(-half_t, half_t, MONOTONE_SCAN_POINTS)))
    if not np.all(np.isfinite(scan)):
        raise NumericalError(f"loi de fréquence non finie ({method.label})")

    monotone = bool(np.all(np.diff(scan) > 0))
    if not monotone:
        diagnostics.append("loi de fréquence non strictement croissante")

    edge = max(abs(scan[0]), abs(scan[-1]))
    overshoot = bool(edge > spec.bandwidth * (0.5 + OVERSHOOT_TOLERANCE))
    if overshoot:
        diagnostics.append(f"dépassement de bande: |f(±T/2)| = {edge:.6g} Hz")

    fitted = np.asarray(fit.evaluate(data.x))
    fit_residual_max = float(np.max(np.abs(fitted - data.y)))

    for message in diagnostics:
        logger.warning("{} / {}: {}", spec.label, method.label, message)
    logger.debug("Loi {} / {} ajustée, résidu max {:.3g} Hz", spec.label, method.label, fit_residual_max)

    return FrequencyModel(
        fit=fit,
        spec=spec,
        method=method,
        monotone=monotone,
        overshoot=overshoot,
        fit_residual_max=fit_residual_max,
        diagnostics=diagnostics,
    )


@dataclass(frozen=True)
class Waveform:
    """Échantillons complexes de module 1, fréquence fs (Hz), durée T (s)."""

    samples: np.ndarray
    sample_rate: float
    pulse_length: float
    label: Dict[str, Any] = field(default_factory=dict)

    def __len__(self) -> int:
        return self.samples.size

    @property
    def time(self) -> np.ndarray:
        return time_grid(self.pulse_length, self.sample_rate, len(self))

    def to_metadata(self) -> Dict[str, Any]:
        return {
            "sample_rate_hz": self.sample_rate,
            "pulse_length_s": self.pulse_length,
            "samples": len(self),
            "label": self.label,
        }


def sample_count(pulse_length: float, sample_rate: float) -> int:
    return int(round(pulse_length * sample_rate))


def time_grid(pulse_length: float, sample_rate: float, count: Optional[int] = None) -> np.ndarray:
    """Grille de points milieux t_i = -T/2 + (i + 0.5) / fs."""
    if count is None:
        count = sample_count(pulse_length, sample_rate)
    return -pulse_length / 2.0 + (np.arange(count) + 0.5) / sample_rate


def _pulse_grid(pulse_length: float, sample_rate: float) -> np.ndarray:
    count = sample_count(pulse_length, sample_rate)
    if count < 1:
        raise InvalidParameterError(
            f"T = {pulse_length:g} s et fs = {sample_rate:g} Hz ne donnent aucun échantillon (round(T fs) = 0)"
        )
    return time_grid(pulse_length, sample_rate, count)


def _check_rates(bandwidth: float, sample_rate: float):
    if not sample_rate > 0:
        raise InvalidParameterError(f"fs doit être > 0 (reçu {sample_rate})")
    if sample_rate <= bandwidth:
        raise AliasingError(f"fs = {sample_rate:g} Hz <= B = {bandwidth:g} Hz")


def integrate_phase(model: Union[FrequencyModel, FittedModel], sample_rate: float, pulse_length: Optional[float] = None) -> np.ndarray:
    """
    Phase phi(t_i) = 2 pi * trapèzes cumulés de f depuis t_0, phi(t_0) = 0.

    Args:
        model: FrequencyModel, ou modèle ajusté nu (alors ``pulse_length`` est requis)
        sample_rate: fs en Hz
        pulse_length: T en secondes (par défaut celle du FrequencyModel)

    Returns:
        Tableau des phases en radians.
    """
    if not sample_rate > 0:
        raise InvalidParameterError(f"fs doit être > 0 (reçu {sample_rate})")
    if pulse_length is None:
        if not isinstance(model, FrequencyModel):
            raise InvalidParameterError("pulse_length requis pour un modèle nu")
        pulse_length = model.spec.pulse_length

    t = _pulse_grid(pulse_length, sample_rate)
    frequency = np.asarray(model.evaluate(t), dtype=float)
    phase = 2.0 * np.pi * cumulative_trapezoid(frequency, dx=1.0 / sample_rate, initial=0.0)
    if not np.all(np.isfinite(phase)):
        raise NumericalError("phase non finie")
    return phase


def synthesize_nlfm(model: FrequencyModel, sample_rate: float) -> Waveform:
    """Impulsion NLFM x(t_i) = exp(j phi(t_i)), module exactement 1."""
    spec = model.spec
    _check_rates(spec.bandwidth, sample_rate)
    phase = integrate_phase(model, sample_rate)
    label = {
        "kind": "nlfm",
        "window": spec.to_dict(),
        "method": model.method.to_dict(),
    }
    return Waveform(
        samples=np.exp(1j * phase),
        sample_rate=float(sample_rate),
        pulse_length=spec.pulse_length,
        label=label,
    )


def synthesize_lfm(pulse_length: float, bandwidth: float, sample_rate: float) -> Waveform:
    """Impulsion LFM de référence : phi(t) = pi (B/T) (t² - t_0²), forme fermée."""
    if not (pulse_length > 0 and bandwidth > 0):
        raise InvalidParameterError("T et B doivent être > 0")
    _check_rates(bandwidth, sample_rate)

    t = _pulse_grid(pulse_length, sample_rate)
    slope = bandwidth / pulse_length
    phase = np.pi * slope * (t ** 2 - t[0] ** 2)
    label = {
        "kind": "lfm",
        "bandwidth_hz": bandwidth,
        "pulse_length_s": pulse_length,
    }
    return Waveform(
        samples=np.exp(1j * phase),
        sample_rate=float(sample_rate),
        pulse_length=float(pulse_length),
        label=label,
    )


def instantaneous_frequency(phase: np.ndarray, sample_rate: float) -> np.ndarray:
    """Différences centrées (phi_{i+1} - phi_{i-1}) fs / 4 pi, pour i = 1..N-2."""
    return (phase[2:] - phase[:-2]) * sample_rate / (4.0 * np.pi)


def time_reversal_error(waveform: Waveform) -> float:
    """
    max |x[N-1-i] - x[i]|.

    Une loi f(t) impaire donne une phase paire, donc x(-t) = x(t) et le filtre
    adapté x*(-t) vaut x*(t). L'écart est nul pour la LFM.
    """
    samples = waveform.samples
    return float(np.max(np.abs(samples[::-1] - samples))) if samples.size else 0.0
