"""
Ajustement de la loi inverse f(t) à partir des échantillons du retard de groupe.

Deux méthodes :

- polynôme des moindres carrés (QR de Householder de la matrice de
  Vandermonde, en coordonnée conditionnée x -> [-1, 1], y -> y / max|y|)
- spline cubique naturelle de lissage minimisant
  J = lambda * intégrale f''(x)² dx + sum (f(x_i) - y_i)²,
  résolue par la formulation de Reinsch : (R + lambda Q^T Q) gamma = Q^T y,
  g = y - lambda Q gamma, système symétrique défini positif à 5 bandes.

Les modèles sont immuables et évaluables par ``eval_model``.
"""

from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import Polynomial
from numpy.typing import ArrayLike
from scipy import linalg, sparse

from ...core.errors import (
    InsufficientDataError,
    InvalidInputError,
    InvalidParameterError,
    OutOfDomainError,
    UnderdeterminedError,
)

DEFAULT_POLYNOMIAL_DEGREE = 9


@dataclass(frozen=True)
class DataSet:
    """Points (x_i, y_i), x strictement croissant, valeurs finies."""

    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float).ravel()
        y = np.asarray(self.y, dtype=float).ravel()
        if x.shape != y.shape:
            raise InvalidInputError(f"x et y de tailles différentes ({x.size} vs {y.size})")
        if x.size < 2:
            raise InsufficientDataError(f"au moins 2 points requis (reçu {x.size})")
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
            raise InvalidInputError("valeurs non finies dans les données")
        if np.any(np.diff(x) <= 0):
            raise InvalidInputError("x doit être strictement croissant (doublons refusés)")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_points(cls, points: Sequence[Tuple[float, float]]) -> "DataSet":
        array = np.asarray(points, dtype=float).reshape(-1, 2)
        return cls(x=array[:, 0], y=array[:, 1])

    def __len__(self) -> int:
        return self.x.size

    @property
    def span(self) -> float:
        return float(self.x[-1] - self.x[0])


def _check_domain(x: ArrayLike, low: float, high: float) -> np.ndarray:
    values = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(values)) or np.any(values < low) or np.any(values > high):
        raise OutOfDomainError(f"abscisse hors du domaine [{low:.6g}, {high:.6g}]")
    return values


def _unwrap(values: np.ndarray):
    return float(values) if np.ndim(values) == 0 else values


@dataclass(frozen=True)
class PolynomialModel:
    """
    Polynôme a_0 + a_1 u + ... + a_m u^m en coordonnée conditionnée
    u = (x - x_center) / x_scale, sortie multipliée par y_scale.
    """

    coefficients: Tuple[float, ...]
    domain: Tuple[float, float]
    x_center: float = 0.0
    x_scale: float = 1.0
    y_scale: float = 1.0

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, x: ArrayLike):
        values = _check_domain(x, *self.domain)
        u = (values - self.x_center) / self.x_scale
        # Horner
        result = np.zeros_like(u)
        for coefficient in reversed(self.coefficients):
            result = result * u + coefficient
        return _unwrap(self.y_scale * result)

    __call__ = evaluate

    def power_coefficients(self) -> np.ndarray:
        """Coefficients dans la variable x brute (peut être mal conditionné)."""
        conditioned = Polynomial(
            np.asarray(self.coefficients) * self.y_scale,
            domain=[self.x_center - self.x_scale, self.x_center + self.x_scale],
            window=[-1.0, 1.0],
        )
        return conditioned.convert().coef

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "polynomial",
            "degree": self.degree,
            "domain": list(self.domain),
            "x_center": self.x_center,
            "x_scale": self.x_scale,
            "y_scale": self.y_scale,
            "coefficients": list(self.coefficients),
            "power_coefficients": self.power_coefficients().tolist(),
        }


@dataclass(frozen=True)
class SplineModel:
    """
    Spline cubique naturelle : noeuds x_i, valeurs f(x_i), dérivées secondes
    f''(x_i) (nulles aux extrémités) et paramètre de lissage lambda (s³).
    """

    knots: np.ndarray
    values: np.ndarray
    second_derivatives: np.ndarray
    lam: float

    @property
    def domain(self) -> Tuple[float, float]:
        return float(self.knots[0]), float(self.knots[-1])

    def evaluate(self, x: ArrayLike):
        values = _check_domain(x, *self.domain)
        knots = self.knots
        index = np.clip(np.searchsorted(knots, values, side="right") - 1, 0, knots.size - 2)

        left, right = knots[index], knots[index + 1]
        h = right - left
        a = (right - values) / h
        b = (values - left) / h
        g0, g1 = self.values[index], self.values[index + 1]
        c0, c1 = self.second_derivatives[index], self.second_derivatives[index + 1]

        result = a * g0 + b * g1 + ((a ** 3 - a) * c0 + (b ** 3 - b) * c1) * h ** 2 / 6.0
        return _unwrap(result)

    __call__ = evaluate

    def second_derivative(self, x: ArrayLike):
        """f'' est linéaire par morceaux entre les noeuds."""
        values = _check_domain(x, *self.domain)
        return _unwrap(np.interp(values, self.knots, self.second_derivatives))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "smoothing_spline",
            "lambda": self.lam,
            "knots": self.knots.tolist(),
            "values": self.values.tolist(),
            "second_derivatives": self.second_derivatives.tolist(),
        }


FittedModel = Union[PolynomialModel, SplineModel]


def fit_polynomial(data: DataSet, degree: int = DEFAULT_POLYNOMIAL_DEGREE) -> PolynomialModel:
    """
    Polynôme des moindres carrés de degré ``degree`` (minimise la SSE).

    Args:
        data: Points à ajuster
        degree: Degré m, 0 <= m <= n - 1

    Returns:
        PolynomialModel conditionné sur [x_1, x_n].
    """
    if int(degree) != degree or degree < 0:
        raise InvalidParameterError(f"degré invalide: {degree}")
    degree = int(degree)
    if degree >= len(data):
        raise UnderdeterminedError(f"degré {degree} >= nombre de points {len(data)}")

    low, high = float(data.x[0]), float(data.x[-1])
    x_center = (low + high) / 2.0
    x_scale = (high - low) / 2.0
    peak = float(np.max(np.abs(data.y)))
    y_scale = peak if peak > 0 else 1.0

    u = (data.x - x_center) / x_scale
    vander = np.polynomial.polynomial.polyvander(u, degree)
    q, r = np.linalg.qr(vander)
    coefficients = linalg.solve_triangular(r, q.T @ (data.y / y_scale))

    return PolynomialModel(
        coefficients=tuple(float(c) for c in coefficients),
        domain=(low, high),
        x_center=x_center,
        x_scale=x_scale,
        y_scale=y_scale,
    )


def _reinsch_operators(h: np.ndarray):
    """Matrices R (tridiagonale, n-2) et Q (n x n-2) de la formulation de Reinsch."""
    inner = h.size - 1
    r = sparse.diags(
        [h[1:-1] / 6.0, (h[:-1] + h[1:]) / 3.0, h[1:-1] / 6.0],
        [-1, 0, 1],
        shape=(inner, inner),
    )
    q = sparse.diags(
        [1.0 / h[:-1], -1.0 / h[:-1] - 1.0 / h[1:], 1.0 / h[1:]],
        [0, -1, -2],
        shape=(h.size + 1, inner),
    )
    return r.tocsr(), q.tocsr()


def fit_smoothing_spline(data: DataSet, lam: float) -> SplineModel:
    """
    Spline cubique naturelle de lissage (minimiseur unique de J).

    Le calcul se fait en coordonnée réduite u = (x - x_1) / (x_n - x_1) et
    v = y / max|y| ; lambda est ramené à lambda / (x_n - x_1)³ pour que le
    critère soit inchangé.

    Args:
        data: Points à ajuster
        lam: Paramètre de lissage lambda >= 0 (s³ pour des données t -> Hz)

    Returns:
        SplineModel dans les unités de ``data``.
    """
    if not (lam >= 0 and np.isfinite(lam)):
        raise InvalidParameterError(f"lambda doit être >= 0 (reçu {lam})")
    n = len(data)
    if lam > 0 and n < 3:
        raise InsufficientDataError("lambda > 0 exige au moins 3 points")

    span = data.span
    peak = float(np.max(np.abs(data.y)))
    y_scale = peak if peak > 0 else 1.0
    u = (data.x - data.x[0]) / span
    v = data.y / y_scale

    if n == 2:
        gamma = np.zeros(2)
        fitted = v.copy()
    else:
        lam_u = float(lam) / span ** 3
        h = np.diff(u)
        r, q = _reinsch_operators(h)
        system = (r + lam_u * (q.T @ q)).todia()

        # Forme bande supérieure pour solveh_banded : ligne 2 = diagonale
        inner = n - 2
        banded = np.zeros((3, inner))
        banded[2] = system.diagonal(0)
        if inner > 1:
            banded[1, 1:] = system.diagonal(1)
        if inner > 2:
            banded[0, 2:] = system.diagonal(2)

        interior = linalg.solveh_banded(banded, q.T @ v)
        gamma = np.concatenate(([0.0], interior, [0.0]))
        fitted = v - lam_u * (q @ interior) if lam > 0 else v.copy()

    return SplineModel(
        knots=data.x.copy(),
        values=fitted * y_scale,
        second_derivatives=gamma * y_scale / span ** 2,
        lam=float(lam),
    )


def eval_model(model: FittedModel, x: ArrayLike):
    """Évalue un modèle ajusté ; OutOfDomainError hors de son domaine."""
    return model.evaluate(x)


def sse(model: FittedModel, data: DataSet) -> float:
    """Somme des carrés des résidus sum (y_i - f(x_i))²."""
    residuals = data.y - np.asarray(eval_model(model, data.x))
    return float(np.sum(residuals ** 2))


def roughness(model: SplineModel) -> float:
    """
    Intégrale exacte de f''(x)² sur [x_1, x_n].

    f'' est linéaire sur chaque segment : h (a² + ab + b²) / 3.
    """
    h = np.diff(model.knots)
    a = model.second_derivatives[:-1]
    b = model.second_derivatives[1:]
    return float(np.sum(h * (a * a + a * b + b * b)) / 3.0)


def penalized_objective(model: SplineModel, data: DataSet) -> float:
    """Critère J = lambda * roughness + SSE."""
    return model.lam * roughness(model) + sse(model, data)
