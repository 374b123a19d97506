"""Base classes and shared helpers for subcommands."""

import logging
import sys
from pathlib import Path
from typing import Optional, Tuple

import click

from fatgraph.config import Config
from fatgraph.domain.errors import (
    ConfigError,
    FatGraphError,
    InvalidInputError,
    OracleLimitError,
    UnsupportedError,
    VerificationError,
    WiringError,
)
from fatgraph.geometry.graph import IntersectionGraph, build_intersection_graph
from fatgraph.geometry.io import graph_from_dict, instance_from_dict, is_instance_document
from fatgraph.geometry.objects import ObjectSet
from fatgraph.utils.file_utils import read_json

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INFEASIBLE = 3
EXIT_VERIFICATION = 4

LOG_FORMAT = "[%(levelname)s] %(name)s: %(message)s"

config_option = click.option(
    "--config",
    type=click.Path(exists=True, path_type=Path),
    metavar="PATH",
    help="Path to custom config file. Default: ~/.fatgraph/config.yaml",
)
verbose_option = click.option("-v", "--verbose", is_flag=True, help="Enable debug logging.")


def exit_code_for(error: Exception) -> int:
    if isinstance(error, (VerificationError, WiringError)):
        return EXIT_VERIFICATION
    if isinstance(error, (InvalidInputError, UnsupportedError, OracleLimitError, ConfigError)):
        return EXIT_INVALID
    return 1


class BaseSubcommand:
    """Base class for subcommands with common functionality."""

    def __init__(self, config_path: Optional[Path] = None, verbose: bool = False):
        """Initialize subcommand with config and logging.

        Args:
            config_path: Optional custom config file path.
            verbose: Log at DEBUG instead of the configured level.
        """
        self.verbose = verbose
        try:
            self.config = Config(config_path=config_path) if config_path else Config()
        except ConfigError as e:
            click.echo(f"Configuration error: {e}", err=True)
            click.echo("Run 'fatgraph config init' to create a default config file.", err=True)
            sys.exit(EXIT_INVALID)
        level = "DEBUG" if verbose else str(self.config.get("logging.level", "WARNING")).upper()
        logging.basicConfig(format=LOG_FORMAT, level=getattr(logging, level, logging.WARNING), force=True)

    def solver_settings(self, gamma: Optional[str] = None, method: Optional[str] = None,
                        c: Optional[float] = None, exact_h0: Optional[bool] = None,
                        prune: Optional[bool] = None) -> dict:
        """Solver keyword arguments, command-line values overriding the config."""
        # an absent --exact-h0 flag arrives as False and must not override
        return self.config.solver_settings(gamma=gamma, method=method, c=c,
                                           exact_h0=exact_h0 or None, prune=prune)

    def handle_error(self, error: Exception) -> None:
        """Report an error and exit with its mapped code.

        Args:
            error: Exception to handle.
        """
        if isinstance(error, FatGraphError):
            click.echo(f"Error: {error}", err=True)
        else:
            click.echo(f"Unexpected error: {error}", err=True)
            if self.verbose:
                import traceback
                traceback.print_exc()
        sys.exit(exit_code_for(error))


def load_graph_input(path: Path) -> Tuple[IntersectionGraph, Optional[ObjectSet]]:
    """Read an instance (objects) or a plain graph document.

    Returns:
        The graph, plus the objects when the document is an instance.
    """
    data = read_json(path)
    if is_instance_document(data):
        objects = instance_from_dict(data)
        return build_intersection_graph(objects), objects
    return graph_from_dict(data), None


def echo_summary(label: str, **values) -> None:
    parts = ", ".join(f"{key}={value}" for key, value in values.items())
    click.echo(f"{label}: {parts}")
