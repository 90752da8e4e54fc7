"""
Commande design - Conception complète d'une impulsion NLFM (ou LFM)

Chaîne : fenêtre -> retard de groupe -> ajustement de l'inverse ->
intégration de phase -> ACF -> PSL / MLW / NMLW, puis écriture des artefacts.
"""

import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

import numpy as np
from loguru import logger

from ... import __version__
from ...core.errors import NumericalError
from ...core.units import format_microseconds
from ..config import DesignConfig, load_config
from ..core import artifacts
from ..core.acf import AcfReport, evaluate_waveform, psd_window_correlation
from ..core.plotting import render_acf_svg
from ..core.waveform import (
    FrequencyModel,
    Waveform,
    design_frequency_function,
    synthesize_lfm,
    synthesize_nlfm,
    time_reversal_error,
)
from .common import add_design_arguments, overrides_from_args, report_error


@dataclass
class DesignOutcome:
    """Résultat en mémoire d'une conception (aucune écriture disque)."""

    config: DesignConfig
    waveform: Waveform
    reference: Waveform
    report: AcfReport
    model: Optional[FrequencyModel] = None

    def metrics(self) -> Dict[str, Any]:
        return {
            "psl_db": self.report.psl_db,
            "mlw_s": self.report.mlw_seconds,
            "nmlw": self.report.nmlw,
        }


def evaluate_design(config: DesignConfig) -> DesignOutcome:
    """
    Calcule une conception sans effet de bord.

    Args:
        config: Configuration validée

    Returns:
        DesignOutcome avec l'impulsion, la référence LFM et le rapport d'ACF.
    """
    config.validate()
    reference = synthesize_lfm(config.pulse_length, config.bandwidth, config.sample_rate)

    model = None
    if config.method == "lfm":
        waveform = reference
    else:
        spec = config.window_spec()
        model = design_frequency_function(spec, config.fit_method(), config.n_points)
        waveform = synthesize_nlfm(model, config.sample_rate)

    if not np.all(np.isfinite(waveform.samples)):
        raise NumericalError("échantillons non finis")

    report = evaluate_waveform(waveform, reference, config.oversample, config.level_db)
    report.diagnostics["time_reversal_error"] = time_reversal_error(waveform)
    if model is not None:
        report.diagnostics.update({
            "monotone": model.monotone,
            "overshoot": model.overshoot,
            "fit_residual_max_hz": model.fit_residual_max,
            "psd_window_correlation": psd_window_correlation(waveform, model.spec),
            "messages": list(model.diagnostics),
        })
    logger.debug("Conception {} / {} : PSL {} dB, NMLW {:.3f}",
                  config.window_label, config.method_label, report.psl_db, report.nmlw)
    return DesignOutcome(config=config, waveform=waveform, reference=reference, report=report, model=model)


def provenance(config: DesignConfig) -> Dict[str, Any]:
    document: Dict[str, Any] = {
        "method": config.method_label,
        "pulse_length_s": config.pulse_length,
        "bandwidth_hz": config.bandwidth,
        "sample_rate_hz": config.sample_rate,
        "oversample": config.oversample,
        "level_db": config.level_db,
    }
    if config.method != "lfm":
        document["window"] = config.window_spec().to_dict()
        document["fit"] = config.fit_method().to_dict()
        document["n_points"] = config.n_points
    return document


def write_design(outcome: DesignOutcome, output_dir: Path, started: Optional[float] = None) -> Dict[str, Path]:
    """Écrit tous les artefacts d'une conception dans ``output_dir``."""
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    config, report = outcome.config, outcome.report

    paths = {
        "waveform_csv": artifacts.write_waveform_csv(output_dir / artifacts.WAVEFORM_CSV, outcome.waveform),
        "waveform_iq": artifacts.write_waveform_iq(output_dir / artifacts.WAVEFORM_IQ, outcome.waveform),
        "acf_csv": artifacts.write_acf_csv(output_dir / artifacts.ACF_CSV, report.curve),
        "report": artifacts.write_report_json(output_dir / artifacts.REPORT_JSON, report, provenance(config)),
    }
    paths["waveform_meta"] = output_dir / artifacts.WAVEFORM_META
    if outcome.model is not None:
        paths["model"] = artifacts.write_json(output_dir / artifacts.MODEL_JSON, outcome.model.to_dict())

    title = f"{config.window_label} / {config.method_label}, T = {format_microseconds(config.pulse_length)} µs"
    svg = render_acf_svg(report.curve, report.psl_db, span=config.plot_span, title=title)
    svg_path = output_dir / artifacts.ACF_SVG
    svg_path.write_text(svg, encoding='utf-8')
    paths["svg"] = svg_path

    manifest = {
        "tool": "nlfm",
        "version": __version__,
        "config": config.to_dict(),
        "files": sorted(p.name for p in paths.values()),
    }
    if started is not None:
        manifest["wall_time_s"] = time.perf_counter() - started
        manifest["finished_at"] = time.strftime("%Y-%m-%dT%H:%M:%S%z")
    paths["manifest"] = artifacts.write_json(output_dir / artifacts.MANIFEST_JSON, manifest)
    return paths


def run_design(config: DesignConfig, output_dir: Optional[Path] = None) -> DesignOutcome:
    """
    API programmatique : calcule puis écrit une conception.

    Args:
        config: Configuration validée
        output_dir: Répertoire de sortie (défaut: config.output_dir)

    Returns:
        DesignOutcome calculé.
    """
    started = time.perf_counter()
    outcome = evaluate_design(config)
    write_design(outcome, Path(output_dir or config.output_dir), started)
    return outcome


def run_design_command(args) -> int:
    """Wrapper CLI de ``design``."""
    try:
        config = load_config(args.config, overrides_from_args(args))
        outcome = run_design(config)
    except Exception as e:
        return report_error(e)

    report = outcome.report
    psl_text = "aucun lobe secondaire" if report.psl_db is None else f"{report.psl_db:.2f} dB"
    print(f"[OK] {config.window_label} / {config.method_label} -> {config.output_dir}")
    print(f"    PSL  : {psl_text}")
    print(f"    MLW  : {report.mlw_seconds * 1e9:.3f} ns ({config.level_db:g} dB)")
    print(f"    NMLW : {report.nmlw:.3f}")
    if outcome.model is not None and not outcome.model.monotone:
        print("    [WARN] loi de fréquence non monotone", file=sys.stderr)
    return 0


def register_design_command(subparsers):
    """Register design command"""
    parser = subparsers.add_parser(
        "design",
        help="Concevoir une impulsion NLFM et mesurer son ACF",
        description="Conçoit une impulsion NLFM (phase stationnaire) et écrit "
                    "forme d'onde, ACF, rapport JSON et tracé SVG."
    )
    parser.add_argument("--config", "-c", type=Path, default=None, help="Fichier de configuration clé = valeur")
    parser.add_argument("--out", "-o", default=None, help="Répertoire de sortie (défaut: nlfm_out)")
    add_design_arguments(parser)
    parser.set_defaults(func=run_design_command)
