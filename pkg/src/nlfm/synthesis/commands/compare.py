"""
Commande compare - Tableau comparatif PSL / NMLW de plusieurs conceptions

Une ligne par (fenêtre, durée), une paire de colonnes (PSL, NMLW) par
méthode, plus une ligne de référence LFM par groupe (T, B). Les valeurs
publiées correspondantes sont jointes quand elles existent.
"""

from collections import OrderedDict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from ...core.errors import ConfigError, InvalidComparisonError
from ..config import DesignConfig, load_config
from ..core import artifacts
from ..core.published import published_nmlw, published_psl
from .common import report_error
from .design import evaluate_design

COMPARE_CSV = "compare.csv"
COMPARE_JSON = "compare.json"


@dataclass
class ComparisonTable:
    methods: List[str]
    rows: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def header(self) -> List[str]:
        columns = ["window", "pulse_length_us"]
        for method in self.methods:
            columns += [
                f"{method}_psl_db", f"{method}_nmlw",
                f"{method}_published_psl_db", f"{method}_published_nmlw",
            ]
        return columns

    def as_rows(self) -> List[List[Any]]:
        return [[row.get(column) for column in self.header] for row in self.rows]

    def to_dict(self) -> Dict[str, Any]:
        return {"columns": self.header, "rows": self.rows}


def _group_key(config: DesignConfig):
    return round(config.pulse_length, 15), round(config.bandwidth, 6)


def run_compare(configs: Sequence[DesignConfig]) -> ComparisonTable:
    """
    Évalue chaque conception et construit le tableau comparatif.

    Args:
        configs: Conceptions (>= 1) ; même fs et même B dans un groupe de durée T

    Returns:
        ComparisonTable (lignes ordonnées par durée puis ordre d'apparition).
    """
    if not configs:
        raise ConfigError("aucune configuration à comparer")

    groups: "OrderedDict[Any, List[DesignConfig]]" = OrderedDict()
    for config in configs:
        groups.setdefault(_group_key(config), []).append(config)
    for members in groups.values():
        if len({c.sample_rate for c in members}) > 1:
            raise InvalidComparisonError(
                f"fs différents dans le groupe T = {members[0].pulse_length * 1e6:g} µs"
            )

    methods: List[str] = []
    rows: List[Dict[str, Any]] = []
    for (pulse_length, _), members in sorted(groups.items(), key=lambda item: item[0]):
        by_window: "OrderedDict[str, Dict[str, Any]]" = OrderedDict()
        for config in members:
            method = config.method_label
            if method not in methods:
                methods.append(method)
            row = by_window.setdefault(config.window_label, {
                "window": config.window_label,
                "pulse_length_us": round(config.pulse_length * 1e6, 9),
            })
            if f"{method}_psl_db" in row:
                raise InvalidComparisonError(
                    f"conception en double: {config.window_label} / {method} / T = {row['pulse_length_us']} µs"
                )
            outcome = evaluate_design(config)
            row[f"{method}_psl_db"] = outcome.report.psl_db
            row[f"{method}_nmlw"] = outcome.report.nmlw
            row[f"{method}_published_psl_db"] = published_psl(config.window_label, config.pulse_length, method)
            row[f"{method}_published_nmlw"] = published_nmlw(config.window_label, config.pulse_length, method)

        if "lfm" not in by_window:
            reference = members[0].with_values(method="lfm")
            outcome = evaluate_design(reference)
            if "lfm" not in methods:
                methods.append("lfm")
            by_window["lfm"] = {
                "window": "lfm",
                "pulse_length_us": round(reference.pulse_length * 1e6, 9),
                "lfm_psl_db": outcome.report.psl_db,
                "lfm_nmlw": outcome.report.nmlw,
            }
        rows.extend(by_window.values())

    return ComparisonTable(methods=methods, rows=rows)


def write_comparison(table: ComparisonTable, output_dir: Path) -> Dict[str, Path]:
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    return {
        "csv": artifacts.write_rows_csv(output_dir / COMPARE_CSV, table.header, table.as_rows()),
        "json": artifacts.write_json(output_dir / COMPARE_JSON, table.to_dict()),
    }


def _format(value: Optional[float]) -> str:
    return "-" if value is None else f"{value:.2f}"


def run_compare_command(args) -> int:
    """Wrapper CLI de ``compare``."""
    try:
        if not args.config:
            raise ConfigError("au moins un --config est requis")
        overrides = {"oversample": args.oversample}
        configs = [load_config(path, overrides) for path in args.config]
        table = run_compare(configs)
        output_dir = Path(args.out or configs[0].output_dir)
        write_comparison(table, output_dir)
    except Exception as e:
        return report_error(e)

    print(f"[OK] Tableau comparatif -> {output_dir / COMPARE_CSV}")
    for row in table.rows:
        cells = [f"{m}: PSL {_format(row.get(f'{m}_psl_db'))} dB, NMLW {_format(row.get(f'{m}_nmlw'))}"
                 for m in table.methods if f"{m}_psl_db" in row]
        print(f"    {row['window']:<9} T = {row['pulse_length_us']:g} µs | " + " | ".join(cells))
    return 0


def register_compare_command(subparsers):
    """Register compare command"""
    parser = subparsers.add_parser(
        "compare",
        help="Comparer plusieurs conceptions (tableaux PSL / NMLW)",
    )
    parser.add_argument(
        "--config", "-c",
        action="append",
        type=Path,
        default=None,
        help="Fichier de configuration (répétable, un par conception)"
    )
    parser.add_argument("--out", "-o", default=None, help="Répertoire de sortie")
    parser.add_argument("--oversample", default=None, help="Suréchantillonnage de l'ACF (défaut: 4)")
    parser.set_defaults(func=run_compare_command)
