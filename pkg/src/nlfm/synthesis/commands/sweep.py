"""
Commande sweep - Balayage de paramètres (k, nbar, eta_db, lambda, degree, n_points)

Chaque point de grille est une conception indépendante ; les points sont
évalués en parallèle (processus) mais le CSV suit toujours l'ordre de la
grille. Un point invalide est marqué ``failed`` sans interrompre le balayage.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from loguru import logger

from ...core.errors import ConfigError, error_document
from ..config import DesignConfig, SweepGrid, config_from_mapping, load_config
from ..core import artifacts
from .common import add_design_arguments, overrides_from_args, report_error
from .design import evaluate_design

SWEEP_CSV = "sweep.csv"
BEST_JSON = "best.json"
METRIC_COLUMNS = ("status", "psl_db", "mlw_s", "nmlw", "error")


@dataclass
class SweepResult:
    grid: SweepGrid
    rows: List[Dict[str, Any]] = field(default_factory=list)

    def successful(self) -> List[Dict[str, Any]]:
        return [row for row in self.rows if row["status"] == "ok" and row["psl_db"] is not None]

    def score(self, row: Dict[str, Any], objective: str) -> float:
        if objective == "weighted":
            return row["psl_db"] + self.grid.mlw_weight * row["nmlw"]
        return row["psl_db"]

    def best(self, objective: Optional[str] = None) -> Optional[Dict[str, Any]]:
        """Meilleur point (score minimal) ; à égalité, le premier dans l'ordre de la grille."""
        objective = objective or self.grid.objective
        candidates = self.successful()
        if not candidates:
            return None
        return min(candidates, key=lambda row: self.score(row, objective))

    def to_best_document(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {
            "objective": self.grid.objective,
            "mlw_weight": self.grid.mlw_weight,
            "points": len(self.rows),
            "failed": sum(1 for row in self.rows if row["status"] != "ok"),
            "best": {},
        }
        for objective in ("psl", "weighted"):
            row = self.best(objective)
            document["best"][objective] = None if row is None else {
                **row, "score": self.score(row, objective),
            }
        return document


def evaluate_point(base: DesignConfig, point: Dict[str, str]) -> Dict[str, Any]:
    """Évalue un point de grille ; toute erreur devient une ligne ``failed``."""
    row: Dict[str, Any] = dict(point)
    try:
        config = config_from_mapping(point, base).validate()
        metrics = evaluate_design(config).metrics()
        row.update(status="ok", error=None, **metrics)
    except Exception as e:
        logger.warning("Point {} en échec: {}", point, e)
        row.update(status="failed", psl_db=None, mlw_s=None, nmlw=None,
                   error=error_document(e)["message"])
    return row


def _evaluate(task):
    base, point = task
    return evaluate_point(base, point)


def run_sweep(base: DesignConfig, grid: SweepGrid, workers: Optional[int] = None) -> SweepResult:
    """
    Évalue toute la grille.

    Args:
        base: Configuration de base (les clés de la grille la surchargent)
        grid: Grille de balayage
        workers: Nombre de processus (défaut: nombre de coeurs ; 1 = séquentiel)

    Returns:
        SweepResult avec une ligne par point, dans l'ordre de la grille.

    Raises:
        ConfigError: si une clé de la grille ne s'applique pas à ``base``
    """
    grid.check_applicable(base)
    tasks = [(base, point) for point in grid.points()]
    workers = workers or os.cpu_count() or 1
    logger.debug("Balayage de {} points sur {} processus", len(tasks), workers)

    if workers == 1 or len(tasks) == 1:
        rows = [_evaluate(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map conserve l'ordre de la grille quel que soit l'ordre de fin
            rows = list(pool.map(_evaluate, tasks))
    return SweepResult(grid=grid, rows=rows)


def write_sweep(result: SweepResult, output_dir: Path) -> Dict[str, Path]:
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    header = list(result.grid.keys) + list(METRIC_COLUMNS)
    rows = [[row.get(column) for column in header] for row in result.rows]
    return {
        "csv": artifacts.write_rows_csv(output_dir / SWEEP_CSV, header, rows),
        "json": artifacts.write_json(output_dir / BEST_JSON, result.to_best_document()),
    }


def run_sweep_command(args) -> int:
    """Wrapper CLI de ``sweep``."""
    try:
        base = load_config(args.config, overrides_from_args(args))
        grid = SweepGrid.parse(args.grid, objective=args.objective, mlw_weight=args.mlw_weight)
        if args.workers is not None and args.workers < 1:
            raise ConfigError(f"--workers doit être >= 1 (reçu {args.workers})")
        result = run_sweep(base, grid, workers=args.workers)
        output_dir = Path(base.output_dir)
        write_sweep(result, output_dir)
    except Exception as e:
        return report_error(e)

    failed = sum(1 for row in result.rows if row["status"] != "ok")
    print(f"[OK] {len(result.rows)} points évalués ({failed} en échec) -> {output_dir / SWEEP_CSV}")
    best = result.best()
    if best is None:
        print("    [WARN] aucun point exploitable")
    else:
        params = ", ".join(f"{key}={best[key]}" for key in grid.keys)
        print(f"    Meilleur ({grid.objective}) : {params} -> PSL {best['psl_db']:.2f} dB, NMLW {best['nmlw']:.3f}")
    return 0


def register_sweep_command(subparsers):
    """Register sweep command"""
    parser = subparsers.add_parser(
        "sweep",
        help="Balayer une grille de paramètres et retenir le meilleur point",
    )
    parser.add_argument("--config", "-c", type=Path, default=None, help="Configuration de base")
    parser.add_argument("--out", "-o", default=None, help="Répertoire de sortie")
    parser.add_argument(
        "--grid", "-g",
        action="append",
        required=True,
        metavar="KEY=V1,V2",
        help="Valeurs à balayer (répétable) ; clés: k, nbar, eta_db, lambda, degree, n_points"
    )
    parser.add_argument("--objective", choices=["psl", "weighted"], default="psl",
                        help="Critère du meilleur point (défaut: psl)")
    parser.add_argument("--mlw-weight", dest="mlw_weight", type=float, default=10.0,
                        help="Poids (dB par unité de NMLW) de l'objectif weighted (défaut: 10)")
    parser.add_argument("--workers", "-j", type=int, default=None,
                        help="Nombre de processus (défaut: nombre de coeurs)")
    add_design_arguments(parser)
    parser.set_defaults(func=run_sweep_command)
