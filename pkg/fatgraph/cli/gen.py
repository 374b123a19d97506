"""Instance generation and intersection-graph subcommands."""

import json
from pathlib import Path

import click

from fatgraph.cli.base import BaseSubcommand, config_option, echo_summary, verbose_option
from fatgraph.domain.types import SHAPE_MIXES, GeneratorConfig
from fatgraph.geometry.graph import build_intersection_graph
from fatgraph.geometry.io import graph_to_dict, instance_to_dict, load_instance, save_graph, save_instance
from fatgraph.oracle import gen_instance
from fatgraph.utils.file_utils import content_hash


@click.command()
@click.option("--d", "dimension", type=int, default=2, show_default=True, help="Ambient dimension.")
@click.option("--n", "n", type=int, required=True, help="Number of objects.")
@click.option("--seed", type=int, default=0, show_default=True, help="Random seed.")
@click.option("--shape-mix", type=click.Choice(SHAPE_MIXES), default=None,
              help="Object shapes. Default: generator.shape_mix from config.")
@click.option("--size-ratio", type=float, default=None,
              help="Largest over smallest object size. Default: generator.size_ratio from config.")
@click.option("--region-side", type=float, default=None, help="Side of the placement region. Default: 3 n^(1/d).")
@click.option("-o", "--out", type=click.Path(path_type=Path), required=True, metavar="PATH", help="Output instance JSON.")
@config_option
@verbose_option
def gen(dimension, n, seed, shape_mix, size_ratio, region_side, out, config, verbose):
    """Generate a seeded random instance of similarly sized fat objects.

    \b
    Examples:
      # 50 unit disks in the plane
      fatgraph gen --d 2 --n 50 --seed 1 -o inst.json

      # Mixed balls and boxes in 3-D with sizes within a factor 2
      fatgraph gen --d 3 --n 40 --shape-mix mixed --size-ratio 2 -o inst3.json
    """
    command = BaseSubcommand(config, verbose)
    try:
        cfg = GeneratorConfig(
            dimension=dimension,
            n=n,
            shape_mix=shape_mix or command.config.get("generator.shape_mix", "ball"),
            size_ratio=size_ratio if size_ratio is not None else float(command.config.get("generator.size_ratio", 1)),
            region_side=region_side,
            seed=seed,
            denominator_bits=int(command.config.get("generator.denominator_bits", 16)),
        )
        objects = gen_instance(cfg)
        save_instance(out, objects)
        echo_summary("Instance", d=dimension, n=n, seed=seed, hash=content_hash(instance_to_dict(objects)))
        click.echo(f"Written to: {out}")
    except Exception as e:
        command.handle_error(e)


@click.command()
@click.option("-i", "--input", "input_path", type=click.Path(exists=True, path_type=Path), required=True,
              metavar="PATH", help="Instance JSON.")
@click.option("-o", "--out", type=click.Path(path_type=Path), metavar="PATH", help="Output graph JSON. Default: stdout.")
@config_option
@verbose_option
def graph(input_path, out, config, verbose):
    """Build the intersection graph of an instance.

    \b
    Examples:
      fatgraph graph -i inst.json -o graph.json
    """
    command = BaseSubcommand(config, verbose)
    try:
        g = build_intersection_graph(load_instance(input_path))
        if out:
            save_graph(out, g)
            echo_summary("Graph", n=g.n, edges=g.edge_count)
            click.echo(f"Written to: {out}")
        else:
            click.echo(json.dumps(graph_to_dict(g)))
    except Exception as e:
        command.handle_error(e)
