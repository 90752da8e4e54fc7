"""
Fonction d'erreur de Gauss, évaluée par morceaux.

- |x| <= 3 : série de Maclaurin, sommée jusqu'à convergence machine
- |x| > 3  : fraction continue de erfc, évaluée à rebours à profondeur fixe

Erreur absolue <= 1e-10 sur [-6, 6]. L'imparité est exacte : le calcul se
fait sur |x| puis le signe est réappliqué.
"""

import math

import numpy as np
from numpy.typing import ArrayLike

SERIES_LIMIT = 3.0
# Termes de Maclaurin au-delà desquels la série est convergée pour |x| <= 3
_SERIES_TERMS = 60
# Profondeur de la fraction continue ; à |x| = 3 elle converge bien avant
_FRACTION_DEPTH = 80

_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)


def _erf_series(x: np.ndarray) -> np.ndarray:
    x2 = x * x
    term = x.copy()
    total = x.copy()
    for n in range(1, _SERIES_TERMS):
        # t_n = (-1)^n x^(2n+1) / n!, accumulé sous la forme t_n / (2n+1)
        term = -term * x2 / n
        total += term / (2 * n + 1)
    return _TWO_OVER_SQRT_PI * total


def _erfc_fraction(x: np.ndarray) -> np.ndarray:
    # erfc(x) = exp(-x²)/sqrt(pi) * 1 / (x + (1/2) / (x + 1 / (x + (3/2) / (x + ...))))
    tail = x.copy()
    for k in range(_FRACTION_DEPTH, 0, -1):
        tail = x + (k / 2.0) / tail
    return np.exp(-x * x) / math.sqrt(math.pi) / tail


def erf(x: ArrayLike):
    """
    Fonction d'erreur erf(x) = 2/sqrt(pi) * intégrale de 0 à x de exp(-t²).

    Args:
        x: Scalaire ou tableau de réels finis

    Returns:
        float si x est scalaire, sinon np.ndarray de même forme.
    """
    values = np.asarray(x, dtype=float)
    scalar = values.ndim == 0
    values = np.atleast_1d(values)

    magnitude = np.abs(values)
    result = np.empty_like(magnitude)

    near = magnitude <= SERIES_LIMIT
    if np.any(near):
        result[near] = _erf_series(magnitude[near])
    if np.any(~near):
        result[~near] = 1.0 - _erfc_fraction(magnitude[~near])

    result = np.copysign(result, values)
    if scalar:
        return float(result[0])
    return result
