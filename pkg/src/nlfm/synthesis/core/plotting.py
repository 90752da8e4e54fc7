"""
Tracé SVG de l'ACF en dB, émis directement (polyline + graduations).

Fenêtre par défaut ±1 µs, axe vertical [-80, 0] dB, niveau de PSL annoté
par une ligne horizontale pointillée.
"""

from typing import List, Optional

import numpy as np

from .acf import AcfCurve

WIDTH = 800
HEIGHT = 400
MARGIN_LEFT = 60
MARGIN_RIGHT = 20
MARGIN_TOP = 30
MARGIN_BOTTOM = 50
DB_BOTTOM = -80.0
DEFAULT_SPAN = 1e-6


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def render_acf_svg(
    curve: AcfCurve,
    psl_db: Optional[float] = None,
    span: float = DEFAULT_SPAN,
    title: str = "",
) -> str:
    """
    Document SVG de la courbe 20 log10 |R(tau)| sur [-span, span].

    Args:
        curve: Courbe d'ACF
        psl_db: Niveau de PSL à annoter (None : pas d'annotation)
        span: Demi-largeur de la fenêtre temporelle (s)
        title: Titre affiché en haut du graphique
    """
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def px(lag: float) -> float:
        return MARGIN_LEFT + (lag + span) / (2.0 * span) * plot_w

    def py(db: float) -> float:
        clipped = min(max(db, DB_BOTTOM), 0.0)
        return MARGIN_TOP + (0.0 - clipped) / (0.0 - DB_BOTTOM) * plot_h

    inside = np.abs(curve.lags) <= span
    lags = curve.lags[inside]
    db = curve.db[inside]
    points = " ".join(f"{_fmt(px(x))},{_fmt(py(y))}" for x, y in zip(lags, db))

    parts: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="black" stroke-width="1"/>',
    ]

    # Graduations : 5 en temps, tous les 20 dB en amplitude
    for i in range(5):
        lag = -span + i * span / 2.0
        x = px(lag)
        parts.append(f'<line x1="{_fmt(x)}" y1="{HEIGHT - MARGIN_BOTTOM}" x2="{_fmt(x)}" '
                     f'y2="{HEIGHT - MARGIN_BOTTOM + 5}" stroke="black"/>')
        parts.append(f'<text x="{_fmt(x)}" y="{HEIGHT - MARGIN_BOTTOM + 20}" font-size="12" '
                     f'text-anchor="middle">{lag * 1e6:g}</text>')
    for level in range(0, int(DB_BOTTOM) - 1, -20):
        y = py(level)
        parts.append(f'<line x1="{MARGIN_LEFT - 5}" y1="{_fmt(y)}" x2="{MARGIN_LEFT}" '
                     f'y2="{_fmt(y)}" stroke="black"/>')
        parts.append(f'<text x="{MARGIN_LEFT - 8}" y="{_fmt(y + 4)}" font-size="12" '
                     f'text-anchor="end">{level}</text>')

    parts.append(f'<text x="{MARGIN_LEFT + plot_w / 2:.2f}" y="{HEIGHT - 10}" font-size="12" '
                 'text-anchor="middle">Time (µs)</text>')
    parts.append(f'<text x="15" y="{MARGIN_TOP + plot_h / 2:.2f}" font-size="12" text-anchor="middle" '
                 f'transform="rotate(-90 15 {MARGIN_TOP + plot_h / 2:.2f})">Amplitude (dB)</text>')
    if title:
        parts.append(f'<text x="{WIDTH / 2:.2f}" y="20" font-size="14" text-anchor="middle">{title}</text>')

    parts.append(f'<polyline fill="none" stroke="#1f4e9c" stroke-width="1" points="{points}"/>')

    if psl_db is not None:
        y = py(psl_db)
        parts.append(f'<line class="psl" x1="{MARGIN_LEFT}" y1="{_fmt(y)}" x2="{WIDTH - MARGIN_RIGHT}" '
                     f'y2="{_fmt(y)}" stroke="#c0392b" stroke-dasharray="6,4"/>')
        parts.append(f'<text x="{WIDTH - MARGIN_RIGHT - 4}" y="{_fmt(y - 4)}" font-size="12" '
                     f'text-anchor="end" fill="#c0392b">PSL {psl_db:.2f} dB</text>')

    parts.append('</svg>')
    return "\n".join(parts) + "\n"
