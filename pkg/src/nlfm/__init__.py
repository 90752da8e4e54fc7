"""
nlfm - Conception d'impulsions radar NLFM par la méthode de la phase stationnaire
"""

__version__ = "0.1.0"
__author__ = "MARCHAL Hervé"
__email__ = "herve.marchal@developpement-durable.gouv.fr"

__all__ = ["__version__", "__author__", "__email__"]
