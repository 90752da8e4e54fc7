#!/usr/bin/env python3
"""
Main entry point for nlfm application.
"""

import argparse
import sys

from nlfm import __version__
from nlfm.core.logs import configure_logging
from nlfm.synthesis.commands import (
    register_compare_command,
    register_design_command,
    register_sweep_command,
)


def create_parser():
    """Create and configure the argument parser."""
    parser = argparse.ArgumentParser(
        prog="nlfm",
        description="nlfm - Conception d'impulsions radar NLFM et mesure de leur ACF",
        formatter_class=argparse.RawDescriptionHelpFormatter
    )

    parser.add_argument(
        "-v", "--version",
        action="version",
        version=f"nlfm {__version__}"
    )
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="Journalisation détaillée (niveau DEBUG)"
    )

    # Create subparsers for commands
    subparsers = parser.add_subparsers(
        title="Commandes disponibles",
        description="Utilisez 'nlfm <commande> -h' pour plus d'informations",
        dest="command",
        help="Commande à exécuter"
    )

    register_design_command(subparsers)
    register_compare_command(subparsers)
    register_sweep_command(subparsers)

    return parser


def main(argv=None):
    """Main function to handle command-line arguments and application logic."""
    parser = create_parser()
    args = parser.parse_args(argv)
    configure_logging(verbose=args.verbose)

    # If no command is provided, show help
    if args.command is None:
        parser.print_help()
        return 0

    # Execute the command
    if hasattr(args, 'func'):
        return args.func(args)

    return 0


if __name__ == "__main__":
    sys.exit(main())
