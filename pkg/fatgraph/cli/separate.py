"""Separator, partition and decomposition subcommands."""

from pathlib import Path

import click

from fatgraph.app.svg import render_instance
from fatgraph.cli.base import BaseSubcommand, config_option, echo_summary, load_graph_input, verbose_option
from fatgraph.contraction import build_kappa_partition, partition_from_classes
from fatgraph.domain.errors import InvalidInputError, VerificationError
from fatgraph.geometry.io import (
    graph_from_dict,
    graph_to_dict,
    instance_from_dict,
    instance_to_dict,
    load_instance,
)
from fatgraph.separator.builder import build_separator
from fatgraph.separator.weights import get_weight_function
from fatgraph.treedecomp.nice import to_traditional
from fatgraph.treedecomp.pipeline import METHODS, weighted_decomposition
from fatgraph.treedecomp.validate import validate_decomposition
from fatgraph.utils.file_utils import read_json, write_json

input_option = click.option(
    "-i", "--input", "input_path", type=click.Path(exists=True, path_type=Path), required=True, metavar="PATH",
)
gamma_option = click.option(
    "--gamma", type=str, default=None, help="Clique weight function (log, unit, sqrt). Default: from config.",
)


@click.command()
@input_option
@gamma_option
@click.option("--exact-h0", is_flag=True, help="Exhaustive base-hypercube search regardless of size.")
@click.option("-o", "--out", type=click.Path(path_type=Path), metavar="PATH", help="Output separator JSON.")
@click.option("--svg", type=click.Path(path_type=Path), metavar="PATH", help="Render the objects by side (d=2).")
@config_option
@verbose_option
def separate(input_path, gamma, exact_h0, out, svg, config, verbose):
    """Compute a balanced clique-weighted separator of an instance.

    \b
    Examples:
      fatgraph separate -i inst.json --gamma log -o sep.json
      fatgraph separate -i inst.json --svg sep.svg
    """
    command = BaseSubcommand(config, verbose)
    try:
        settings = command.solver_settings(gamma=gamma, exact_h0=exact_h0)
        objects = load_instance(input_path)
        separator = build_separator(objects, settings["gamma"], settings["exact_h0"], settings["exact_limit"])
        echo_summary(
            "Separator",
            cliques=len(separator.cliques),
            vertices=len(separator.vertices()),
            weight=round(separator.weight, 4),
            balance=float(separator.balance),
            balanced=separator.balanced,
        )
        if out:
            write_json(out, separator.to_dict())
            click.echo(f"Written to: {out}")
        if svg:
            render_instance(objects, svg, separator)
            click.echo(f"SVG written to: {svg}")
    except Exception as e:
        command.handle_error(e)


@click.command()
@input_option
@gamma_option
@click.option("-o", "--out", type=click.Path(path_type=Path), required=True, metavar="PATH", help="Output partition JSON.")
@config_option
@verbose_option
def partition(input_path, gamma, out, config, verbose):
    """Compute a kappa-partition and its contraction.

    The input is an instance or a graph JSON. The output also stores the
    graph (and the instance, if given) so that decompose needs only this file.

    \b
    Examples:
      fatgraph partition -i graph.json -o part.json
    """
    command = BaseSubcommand(config, verbose)
    try:
        gamma = gamma or command.config.get("gamma", "log")
        get_weight_function(gamma)
        graph, objects = load_graph_input(input_path)
        result = build_kappa_partition(graph, gamma)
        document = {"gamma": gamma, "graph": graph_to_dict(graph), "partition": result.to_dict()}
        if objects is not None:
            document["instance"] = instance_to_dict(objects)
        write_json(out, document)
        echo_summary("Partition", classes=len(result.classes), kappa_hat=result.kappa_hat, delta_hat=result.delta_hat)
        click.echo(f"Written to: {out}")
    except Exception as e:
        command.handle_error(e)


def load_partition_document(path: Path, instance_path=None):
    """Rebuild (graph, partition, objects, gamma) from a partition JSON."""
    data = read_json(path)
    try:
        gamma = data.get("gamma", "log")
        graph = graph_from_dict(data["graph"])
        classes = data["partition"]["classes"]
    except (KeyError, TypeError, AttributeError) as e:
        raise InvalidInputError(f"Malformed partition document {path}: {e}")
    covered = sorted(v for cls in classes for v in cls)
    if covered != list(range(graph.n)):
        raise InvalidInputError("Partition classes do not cover every vertex exactly once")
    objects = None
    if instance_path is not None:
        objects = load_instance(instance_path)
    elif "instance" in data:
        objects = instance_from_dict(data["instance"])
    return graph, partition_from_classes(graph, classes, gamma), objects, gamma


@click.command()
@input_option
@click.option("--method", type=click.Choice(METHODS), default=None, help="Weighted decomposition method. Default: from config.")
@click.option("--c", "c", type=float, default=None, help="Base-case constant of the separator recursion. Default: 4.")
@click.option("--instance", "instance_path", type=click.Path(exists=True, path_type=Path), metavar="PATH",
              help="Instance geometry for the separator method, if the partition file has none.")
@click.option("-o", "--out", type=click.Path(path_type=Path), required=True, metavar="PATH", help="Output decomposition JSON.")
@config_option
@verbose_option
def decompose(input_path, method, c, instance_path, out, config, verbose):
    """Build weighted and nice tree decompositions from a partition file.

    \b
    Examples:
      fatgraph decompose -i part.json --method blowup -o td.json
      fatgraph decompose -i part.json --method separator --c 4 -o td.json
    """
    command = BaseSubcommand(config, verbose)
    try:
        graph, kappa, objects, gamma = load_partition_document(input_path, instance_path)
        settings = command.solver_settings(gamma=gamma, method=method, c=c)
        weighted = weighted_decomposition(
            kappa, gamma, settings["method"], objects, settings["c"], settings["exact_h0"], settings["exact_limit"]
        )
        nice = to_traditional(weighted, kappa)
        reports = [validate_decomposition(weighted, kappa.contracted), validate_decomposition(nice, graph)]
        violations = [v for report in reports for v in report.violations]
        write_json(out, {
            "gamma": gamma,
            "graph": graph_to_dict(graph),
            "partition": kappa.to_dict(),
            "weighted": weighted.to_dict(),
            "nice": nice.to_dict(),
        })
        echo_summary("Decomposition", method=weighted.method, weighted_width=round(weighted.weighted_width, 4),
                     width=nice.width, nodes=len(nice.nodes))
        click.echo(f"Written to: {out}")
        if violations:
            raise VerificationError("; ".join(violations[:5]))
    except Exception as e:
        command.handle_error(e)
