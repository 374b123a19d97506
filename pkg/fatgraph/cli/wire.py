"""Cube wiring subcommands."""

import sys
from pathlib import Path

import click

from fatgraph.app.svg import render_layer
from fatgraph.cli.base import EXIT_VERIFICATION, BaseSubcommand, config_option, echo_summary, verbose_option
from fatgraph.cubewiring.matching import WiringInstance, wire_matching
from fatgraph.cubewiring.paths import Wiring
from fatgraph.cubewiring.verify import verify_wiring
from fatgraph.domain.errors import InvalidInputError, VerificationError
from fatgraph.utils.cli_utils import parse_int_vector
from fatgraph.utils.file_utils import read_json, write_json


@click.group(
    invoke_without_command=True,
    context_settings={"help_option_names": ["-h", "--help"]},
)
@click.option("--d", "dimension", type=int, default=3, show_default=True, help="Dimension of the grid (at least 3).")
@click.option("--n", "sides", type=str, metavar="SIDES", help="Box sides of the faces, e.g. 8,8.")
@click.option("--matching", type=click.Path(exists=True, path_type=Path), metavar="PATH",
              help="Matching JSON. Default: a random permutation of the full box.")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed of the random permutation.")
@click.option("-o", "--out", type=click.Path(path_type=Path), metavar="PATH", help="Output wiring JSON.")
@click.option("--svg-layer", type=int, default=None, metavar="H", help="Render layer H of a 3-D wiring.")
@click.option("--svg", type=click.Path(path_type=Path), metavar="PATH", help="SVG path for --svg-layer.")
@config_option
@verbose_option
@click.pass_context
def wire(ctx, dimension, sides, matching, seed, out, svg_layer, svg, config, verbose):
    """Wire a matching between opposite faces of a grid box.

    \b
    Commands:
      verify    Check a wiring JSON

    \b
    Examples:
      # Random permutation on Box(8,8), d=3
      fatgraph wire --d 3 --n 8,8 -o wiring.json

      # Given matching, with one layer rendered
      fatgraph wire --matching m.json -o wiring.json --svg-layer 5 --svg layer5.svg

      # Check a wiring
      fatgraph wire verify wiring.json
    """
    if ctx.invoked_subcommand is not None:
        return
    command = BaseSubcommand(config, verbose)
    try:
        if matching:
            inst = WiringInstance.from_dict(read_json(matching))
        elif sides:
            inst = WiringInstance.random_permutation(dimension, parse_int_vector(sides), seed)
        else:
            raise InvalidInputError("Give --n or --matching")
        wiring = wire_matching(
            inst,
            length_factor=int(command.config.get("wiring.length_factor", 200)),
            check_subgrids=bool(command.config.get("wiring.check_subgrids", False)),
        )
        violations = verify_wiring(wiring, inst)
        echo_summary("Wiring", wires=len(wiring.wires), height=wiring.height,
                     height_ratio=round(wiring.stats["height_ratio"], 3), max_length=wiring.max_length)
        if out:
            write_json(out, wiring.to_dict())
            click.echo(f"Written to: {out}")
        if svg_layer is not None:
            target = svg or Path(f"layer{svg_layer}.svg")
            render_layer(wiring, svg_layer, target)
            click.echo(f"SVG written to: {target}")
        if violations:
            raise VerificationError("; ".join(violations[:5]))
    except Exception as e:
        command.handle_error(e)


@wire.command("verify")
@click.argument("wiring_path", type=click.Path(exists=True, path_type=Path), metavar="WIRING")
@click.option("--matching", type=click.Path(exists=True, path_type=Path), metavar="PATH",
              help="Matching JSON the wiring must realize.")
@config_option
@verbose_option
def verify_command(wiring_path, matching, config, verbose):
    """Check disjointness, endpoints, containment and length of a wiring.

    \b
    Examples:
      fatgraph wire verify wiring.json --matching m.json
    """
    command = BaseSubcommand(config, verbose)
    try:
        wiring = Wiring.from_dict(read_json(wiring_path))
        inst = WiringInstance.from_dict(read_json(matching)) if matching else None
        violations = verify_wiring(wiring, inst)
    except Exception as e:
        command.handle_error(e)
        return
    if violations:
        for violation in violations:
            click.echo(f"  - {violation}", err=True)
        click.echo(f"Wiring invalid: {len(violations)} violation(s)", err=True)
        sys.exit(EXIT_VERIFICATION)
    click.echo(f"Wiring valid: {len(wiring.wires)} wires, height {wiring.height if wiring.wires else 0}")
