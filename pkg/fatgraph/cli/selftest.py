"""Hidden exhaustive check of the partition reduction."""

import random
import sys

import click

from fatgraph.cli.base import EXIT_VERIFICATION, BaseSubcommand, verbose_option
from fatgraph.rankbased import WeightedPartitionSet, all_partitions, check_representation, reduce


def random_partition_set(u: int, rng: random.Random, max_entries: int = 12) -> WeightedPartitionSet:
    pool = list(all_partitions(u))
    chosen = rng.sample(pool, min(len(pool), rng.randint(1, max_entries)))
    partitions = WeightedPartitionSet(tuple(range(u)))
    for p in chosen:
        partitions.add(p, rng.randint(0, 9))
    return partitions


@click.command("reduce-selftest", hidden=True)
@click.option("--count", type=int, default=500, show_default=True, help="Random partition sets to check.")
@click.option("--max-universe", type=int, default=6, show_default=True, help="Largest universe size.")
@click.option("--seed", type=int, default=0, show_default=True)
@verbose_option
def reduce_selftest(count, max_universe, seed, verbose):
    """Check reduce against all completions on random small sets."""
    BaseSubcommand(None, verbose)
    rng = random.Random(seed)
    failures = 0
    for index in range(count):
        u = rng.randint(2, max_universe)
        original = random_partition_set(u, rng)
        reduced = reduce(original)
        problems = check_representation(original, reduced)
        if reduce(reduced).entries != reduced.entries:
            problems.append("reduce is not idempotent")
        if problems:
            failures += 1
            click.echo(f"Set {index} (u={u}): {problems[0]}", err=True)
    click.echo(f"{count - failures}/{count} partition sets passed")
    if failures:
        sys.exit(EXIT_VERIFICATION)
