"""Benchmark subcommand."""

from pathlib import Path

import click

from fatgraph.app.bench import SUITES, BenchSuite, bench as run_bench, geometric_sizes, summarize, write_table
from fatgraph.cli.base import BaseSubcommand, config_option, verbose_option
from fatgraph.utils.cli_utils import parse_int_list


@click.command()
@click.argument("suite", type=click.Choice(list(SUITES)))
@click.option("--d", "dimensions", type=str, default="2", show_default=True, metavar="LIST", help="Dimensions, e.g. 2,3.")
@click.option("--n", "sizes", type=str, default=None, metavar="LIST",
              help="Sizes, e.g. 8,12,16 (box sides for the wiring suite).")
@click.option("--n-min", type=int, default=None, help="Smallest size of a geometric grid.")
@click.option("--n-max", type=int, default=None, help="Largest size of a geometric grid.")
@click.option("--factor", type=float, default=2.0, show_default=True, help="Ratio of the geometric grid.")
@click.option("--seeds", type=int, default=5, show_default=True, help="Seeds 0..k-1 per size.")
@click.option("--r", "r", type=int, default=1, show_default=True, help="Domination radius (rds suite).")
@click.option("--no-oracle", is_flag=True, help="Skip the brute-force agreement check.")
@click.option("--threads", type=int, default=None, help="Worker threads. Default: bench.threads from config.")
@click.option("--csv", "csv_path", type=click.Path(path_type=Path), metavar="PATH", help="CSV output.")
@click.option("--json", "json_path", type=click.Path(path_type=Path), metavar="PATH", help="JSON output with summary.")
@config_option
@verbose_option
def bench(suite, dimensions, sizes, n_min, n_max, factor, seeds, r, no_oracle, threads, csv_path, json_path,
          config, verbose):
    """Sweep seeded instances and record the monitored ratios.

    \b
    Suites:
      is, ds, rds   exact solver runs with oracle agreement
      separator     separator weight / n^(1-1/d)
      decompose     weighted width / n^(1-1/d) and validity
      wiring        height / sum(n) and wire length / (d sum(n))

    \b
    Examples:
      fatgraph bench is --n 8,12,16 --seeds 20 --csv is.csv
      fatgraph bench separator --n-min 100 --n-max 3200 --json sep.json
      fatgraph bench wiring --d 3 --n 2,4,8 --threads 4
    """
    command = BaseSubcommand(config, verbose)
    try:
        if n_min is not None and n_max is not None:
            grid = geometric_sizes(n_min, n_max, factor)
        else:
            grid = parse_int_list(sizes)
        bench_suite = BenchSuite(
            name=suite,
            dimensions=tuple(parse_int_list(dimensions)),
            sizes=tuple(grid),
            seeds=tuple(range(seeds)),
            gamma=command.config.get("gamma", "log"),
            method=command.config.get("decomposition.method", "blowup"),
            prune=bool(command.config.get("solver.prune", True)),
            r=r,
            oracle=not no_oracle,
            oracle_max_n=int(command.config.get("oracle.max_n", 24)),
            threads=threads if threads is not None else int(command.config.get("bench.threads", 1)),
        )
        records = run_bench(bench_suite)
        write_table(records, csv_path, json_path)
        for row in summarize(records):
            click.echo("  " + ", ".join(f"{k}={round(v, 4) if isinstance(v, float) else v}" for k, v in row.items()))
        click.echo(f"{len(records)} run(s)")
    except Exception as e:
        command.handle_error(e)
