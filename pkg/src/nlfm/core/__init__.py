"""Briques transverses - NLFM : erreurs, unités, configuration, journalisation"""

from .config import merge_overrides, read_key_values
from .errors import (
    EXIT_CONFIG,
    EXIT_IO,
    EXIT_NUMERICAL,
    EXIT_OK,
    ConfigError,
    InvalidParameterError,
    NlfmError,
    NumericalError,
    error_document,
    exit_code_for,
)
from .logs import configure_logging
from .units import parse_quantity

__all__ = [
    'EXIT_OK',
    'EXIT_CONFIG',
    'EXIT_NUMERICAL',
    'EXIT_IO',
    'NlfmError',
    'InvalidParameterError',
    'ConfigError',
    'NumericalError',
    'exit_code_for',
    'error_document',
    'configure_logging',
    'parse_quantity',
    'read_key_values',
    'merge_overrides',
]
