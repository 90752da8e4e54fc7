"""
Hiérarchie d'exceptions de nlfm.

Chaque classe porte le code de sortie que la CLI renvoie lorsqu'elle
remonte jusqu'à la frontière d'une commande :

- 2 : paramètre ou configuration invalide
- 3 : échec numérique (valeur non finie, hors domaine, lobe dégénéré)
- 4 : erreur d'entrée/sortie (``OSError``, géré par les commandes)
"""

from typing import Any, Dict

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4


class NlfmError(Exception):
    """Base de toutes les erreurs levées par nlfm."""

    exit_code = EXIT_NUMERICAL

    def to_dict(self) -> Dict[str, Any]:
        """Document JSON écrit sur stderr par la CLI."""
        return {
            "error": type(self).__name__,
            "message": str(self),
            "exit_code": self.exit_code,
        }


class InvalidParameterError(NlfmError, ValueError):
    exit_code = EXIT_CONFIG


class ConfigError(InvalidParameterError):
    """Fichier de configuration ou option CLI invalide."""


class UnderdeterminedError(InvalidParameterError):
    """Plus de coefficients que de points de données."""


class InsufficientDataError(InvalidParameterError):
    pass


class AliasingError(InvalidParameterError):
    """Fréquence d'échantillonnage inférieure ou égale à la bande B."""


class InvalidComparisonError(InvalidParameterError):
    pass


class InvalidInputError(InvalidParameterError):
    pass


class NumericalError(NlfmError, ArithmeticError):
    """Valeur non finie rencontrée pendant un calcul."""


class OutOfBandError(NumericalError, ValueError):
    """Fréquence hors de [-B/2, B/2]."""


class OutOfDomainError(NumericalError, ValueError):
    """Abscisse hors du domaine d'un modèle ajusté."""


class DegenerateMainlobeError(NumericalError):
    """La courbe d'ACF ne descend jamais sous le niveau demandé."""


def exit_code_for(exc: BaseException) -> int:
    """Code de sortie associé à une exception quelconque."""
    if isinstance(exc, NlfmError):
        return exc.exit_code
    if isinstance(exc, OSError):
        return EXIT_IO
    return EXIT_NUMERICAL


def error_document(exc: BaseException) -> Dict[str, Any]:
    if isinstance(exc, NlfmError):
        return exc.to_dict()
    return {
        "error": type(exc).__name__,
        "message": str(exc),
        "exit_code": exit_code_for(exc),
    }
