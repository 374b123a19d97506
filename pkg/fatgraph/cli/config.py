"""Config management subcommand for fatgraph."""

import sys
from pathlib import Path

import click
import yaml

from fatgraph.config import Config
from fatgraph.domain.errors import ConfigError


@click.group(
    context_settings={"help_option_names": ["-h", "--help"]}
)
def config():
    """Manage configuration files and settings.

    Configuration is stored in ~/.fatgraph/config.yaml by default and holds
    the weight function, decomposition method, oracle limits, generator and
    wiring settings.

    \b
    Commands:
      init    Initialize the configuration file with defaults
      show    Display the active configuration

    \b
    Examples:
      fatgraph config init
      fatgraph config show
    """
    pass


@config.command("init")
@click.option(
    "--config-path",
    type=click.Path(path_type=Path),
    metavar="PATH",
    help="Custom path for config file. Default: ~/.fatgraph/config.yaml"
)
def init(config_path):
    """Initialize the configuration file with default settings.

    \b
    Examples:
      fatgraph config init
      fatgraph config init --config-path /custom/path/config.yaml
    """
    try:
        config_file = Config.init_config(config_path=config_path)
        click.echo(f"Configuration file initialized at: {config_file}")
    except (ConfigError, OSError) as e:
        click.echo(f"Error initializing config: {e}", err=True)
        sys.exit(2)


@config.command("show")
@click.option(
    "--config",
    type=click.Path(exists=True, path_type=Path),
    metavar="PATH",
    help="Path to custom config file. Default: ~/.fatgraph/config.yaml"
)
@click.option("--key", metavar="KEY", help="Print a single value by dot-notation key.")
def show(config, key):
    """Display the active configuration, defaults included.

    \b
    Examples:
      fatgraph config show
      fatgraph config show --key separator.exact_h0_limit
      fatgraph config show --config ./bench.yaml
    """
    try:
        cfg = Config(config_path=config) if config else Config()
    except ConfigError as e:
        click.echo(f"Configuration error: {e}", err=True)
        sys.exit(2)
    if key:
        value = cfg.get(key)
        if value is None:
            click.echo(f"Unknown config key: {key}", err=True)
            sys.exit(2)
        click.echo(value if not isinstance(value, dict) else yaml.safe_dump(value, sort_keys=False).rstrip())
        return
    click.echo(f"# {cfg.config_path}")
    click.echo(yaml.safe_dump(cfg.as_dict(), default_flow_style=False, sort_keys=False).rstrip())
