"""Command-line interface for fatgraph."""

import click
from fatgraph import __version__


@click.group(
    context_settings={"help_option_names": ["-h", "--help"]}
)
@click.version_option(version=__version__, prog_name="fatgraph")
def cli():
    """fatgraph - exact algorithms for intersection graphs of fat objects.

    Separators, tree decompositions and exact solvers for graphs of balls and
    boxes, plus vertex-disjoint wirings in grid boxes.

    \b
    Commands:
      gen          Generate a seeded random instance
      graph        Build the intersection graph of an instance
      separate     Balanced clique-weighted separator
      partition    Kappa-partition and its contraction
      decompose    Weighted and nice tree decompositions
      solve        Exact solvers (is, vc, ds, rds, steiner, mif, fvs, cvc, is-separator)
      oracle       Brute-force reference solver for small instances
      wire         Wire a matching in a grid box
      bench        Benchmark sweeps with CSV/JSON output
      verify       Re-validate a written artifact
      config       Manage configuration files and settings

    \b
    Examples:
      # Generate 30 disks and solve independent set
      fatgraph gen --d 2 --n 30 --seed 4 -o inst.json
      fatgraph solve -i inst.json -p is -o result.json

      # Cross-check against the brute-force oracle
      fatgraph oracle -i inst.json -p is

      # Wire a random permutation in 3-D
      fatgraph wire --d 3 --n 4,4 -o wiring.json

    \b
    For more information, use: fatgraph <command> --help
    """
    pass


# Import subcommands to register them
from fatgraph.cli.gen import gen, graph
from fatgraph.cli.separate import separate, partition, decompose
from fatgraph.cli.solve import solve, oracle, verify
from fatgraph.cli.wire import wire
from fatgraph.cli.bench import bench
from fatgraph.cli.config import config
from fatgraph.cli.selftest import reduce_selftest

# Register subcommands
cli.add_command(gen)
cli.add_command(graph)
cli.add_command(separate)
cli.add_command(partition)
cli.add_command(decompose)
cli.add_command(solve)
cli.add_command(oracle)
cli.add_command(wire)
cli.add_command(bench)
cli.add_command(verify)
cli.add_command(config)
cli.add_command(reduce_selftest)


# Main entry point
def main():
    """Main entry point for fatgraph command."""
    cli()


if __name__ == "__main__":
    main()
