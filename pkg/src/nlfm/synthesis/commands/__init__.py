"""Commandes CLI - NLFM"""

from .compare import register_compare_command, run_compare
from .design import evaluate_design, register_design_command, run_design
from .sweep import register_sweep_command, run_sweep

__all__ = [
    "run_design",
    "run_compare",
    "run_sweep",
    "evaluate_design",
    "register_design_command",
    "register_compare_command",
    "register_sweep_command",
]
