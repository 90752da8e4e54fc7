"""Configuration du logger loguru pour la CLI."""

import os
import sys
from pathlib import Path

from dotenv import load_dotenv
from loguru import logger

# Charger NLFM_LOG_LEVEL depuis un .env éventuel (racine du projet puis cwd)
env_path = Path(__file__).parent.parent.parent.parent / '.env'
if env_path.exists():
    load_dotenv(env_path)
else:
    load_dotenv()

LOG_FORMAT = "<level>{level: <8}</level> | {name}:{function} - {message}"


def configure_logging(verbose: bool = False) -> None:
    """
    Installe un unique sink stderr.

    Le niveau vaut DEBUG avec --verbose, sinon NLFM_LOG_LEVEL ou WARNING.
    """
    level = "DEBUG" if verbose else os.environ.get("NLFM_LOG_LEVEL", "WARNING").upper()
    logger.remove()
    logger.add(sys.stderr, level=level, format=LOG_FORMAT)
