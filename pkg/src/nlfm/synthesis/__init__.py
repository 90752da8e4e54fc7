"""
Module de synthèse d'impulsions NLFM

Ce module fournit des outils pour :
- Construire une loi de fréquence à partir d'une fenêtre spectrale (Gauss, Taylor)
- Synthétiser l'impulsion en bande de base
- Mesurer l'ACF (PSL, MLW, NMLW)

Architecture :
- core/ : Logique de calcul (windows, curve_fit, waveform, acf)
- commands/ : Wrappers CLI (design, compare, sweep)
- config.py : Configuration d'une conception et grille de balayage
"""

from .config import DesignConfig, SweepGrid, load_config
from .core import (
    FitMethod,
    WindowSpec,
    design_frequency_function,
    evaluate_waveform,
    synthesize_lfm,
    synthesize_nlfm,
)
from .commands import evaluate_design, run_compare, run_design, run_sweep

__all__ = [
    # Configuration
    'DesignConfig',
    'SweepGrid',
    'load_config',
    # Calcul
    'WindowSpec',
    'FitMethod',
    'design_frequency_function',
    'synthesize_nlfm',
    'synthesize_lfm',
    'evaluate_waveform',
    # API programmatique
    'evaluate_design',
    'run_design',
    'run_compare',
    'run_sweep',
]
