"""Logique de calcul - NLFM : fenêtres, ajustement, synthèse, ACF"""

from .acf import AcfCurve, AcfReport, autocorrelation, evaluate_waveform, mlw, nmlw, psl
from .curve_fit import (
    DataSet,
    PolynomialModel,
    SplineModel,
    eval_model,
    fit_polynomial,
    fit_smoothing_spline,
    roughness,
    sse,
)
from .special import erf
from .waveform import (
    FitMethod,
    FrequencyModel,
    Waveform,
    design_frequency_function,
    integrate_phase,
    synthesize_lfm,
    synthesize_nlfm,
)
from .windows import WindowFamily, WindowSpec, group_delay, sample_group_delay, window_weight

__all__ = [
    # Windows
    'WindowFamily',
    'WindowSpec',
    'window_weight',
    'group_delay',
    'sample_group_delay',
    'erf',
    # Curve fitting
    'DataSet',
    'PolynomialModel',
    'SplineModel',
    'fit_polynomial',
    'fit_smoothing_spline',
    'eval_model',
    'sse',
    'roughness',
    # Synthesis
    'FitMethod',
    'FrequencyModel',
    'Waveform',
    'design_frequency_function',
    'integrate_phase',
    'synthesize_nlfm',
    'synthesize_lfm',
    # ACF
    'AcfCurve',
    'AcfReport',
    'autocorrelation',
    'psl',
    'mlw',
    'nmlw',
    'evaluate_waveform',
]
