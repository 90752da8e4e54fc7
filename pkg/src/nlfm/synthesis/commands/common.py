"""Options CLI partagées par design, compare et sweep."""

import json
import sys
from typing import Dict, Optional

from ...core.errors import error_document, exit_code_for


def add_design_arguments(parser):
    """Options qui surchargent les clés du fichier de configuration."""
    parser.add_argument("--window", choices=["gaussian", "taylor"], help="Famille de fenêtre")
    parser.add_argument("--k", help="Constante k de la fenêtre de Gauss (défaut: 16 ln 100)")
    parser.add_argument("--nbar", help="Nombre de lobes de niveau constant (Taylor, défaut: 5)")
    parser.add_argument("--eta-db", dest="eta_db", help="Niveau de lobes secondaires en dB (Taylor, défaut: 40)")
    parser.add_argument("--T", dest="T", help="Durée d'impulsion (ex: 2.5us)")
    parser.add_argument("--B", dest="B", help="Bande (ex: 100MHz)")
    parser.add_argument("--fs", help="Fréquence d'échantillonnage (ex: 500MHz)")
    parser.add_argument("--method", choices=["polynomial", "spline", "lfm"], help="Méthode d'ajustement")
    parser.add_argument("--degree", help="Degré du polynôme (défaut: 9)")
    parser.add_argument("--lambda", dest="lam", help="Paramètre de lissage lambda en s³ (obligatoire pour spline)")
    parser.add_argument("--n-points", dest="n_points", help="Nombre d'échantillons du retard de groupe (défaut: 1001)")
    parser.add_argument("--oversample", help="Suréchantillonnage de l'ACF pour les métriques (défaut: 4)")
    parser.add_argument("--level-db", dest="level_db", help="Niveau de mesure de la MLW (défaut: -4)")
    parser.add_argument("--plot-span", dest="plot_span", help="Demi-fenêtre du tracé (défaut: 1us)")


def overrides_from_args(args) -> Dict[str, Optional[str]]:
    """Namespace argparse -> clés du fichier de configuration."""
    names = {
        "window": "window", "k": "k", "nbar": "nbar", "eta_db": "eta_db",
        "T": "t", "B": "b", "fs": "fs", "method": "method", "degree": "degree",
        "lam": "lambda", "n_points": "n_points", "oversample": "oversample",
        "level_db": "level_db", "plot_span": "plot_span", "out": "out",
    }
    return {key: getattr(args, attr, None) for attr, key in names.items()}


def report_error(exc: BaseException) -> int:
    """Écrit le document d'erreur JSON sur stderr et renvoie le code de sortie."""
    document = error_document(exc)
    print(json.dumps(document, ensure_ascii=False, sort_keys=True), file=sys.stderr)
    return exit_code_for(exc)
