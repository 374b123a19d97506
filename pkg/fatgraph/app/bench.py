"""Benchmark sweeps over seeded instances with CSV and JSON output."""

import csv
import logging
import math
import statistics
import time
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from fatgraph.cubewiring.matching import WiringInstance, wire_matching
from fatgraph.cubewiring.verify import verify_wiring
from fatgraph.domain.errors import InvalidInputError, OracleLimitError
from fatgraph.domain.types import GeneratorConfig, ProblemInstance, RunRecord
from fatgraph.geometry.graph import build_intersection_graph
from fatgraph.geometry.io import instance_to_dict
from fatgraph.oracle import MAX_N, brute_force, gen_instance
from fatgraph.separator.builder import build_separator
from fatgraph.solvers.registry import solve
from fatgraph.treedecomp.pipeline import prepare_decomposition
from fatgraph.treedecomp.validate import validate_decomposition
from fatgraph.utils.file_utils import content_hash, write_json

logger = logging.getLogger(__name__)


@dataclass
class BenchSuite:
    """One sweep: every (dimension, size, seed) triple is a run.

    For the wiring suite a size s means the box Box(s, ..., s) of dimension d - 1.
    """
    name: str
    dimensions: Sequence[int] = (2,)
    sizes: Sequence[int] = ()
    seeds: Sequence[int] = (0,)
    shape_mix: str = "ball"
    size_ratio: float = 1.0
    gamma: str = "log"
    method: str = "blowup"
    prune: bool = True
    r: int = 1
    oracle: bool = True
    oracle_max_n: int = MAX_N
    threads: int = 1

    def runs(self) -> List[Tuple[int, int, int]]:
        return [(d, n, seed) for d in self.dimensions for n in self.sizes for seed in self.seeds]

    def config_hash(self) -> str:
        settings = asdict(self)
        settings.pop("threads")
        return content_hash(settings)


def geometric_sizes(start: int, stop: int, factor: float = 2.0) -> List[int]:
    """Sizes start, start * factor, ... up to stop, rounded and deduplicated."""
    if start < 1 or stop < start or factor <= 1:
        raise InvalidInputError(f"Bad geometric grid {start}..{stop} x{factor}")
    sizes, x = [], float(start)
    while x <= stop:
        if not sizes or int(round(x)) != sizes[-1]:
            sizes.append(int(round(x)))
        x *= factor
    return sizes


def _scale(n: int, dimension: int) -> float:
    return n ** (1 - 1 / dimension) if n else 1.0


def _objects(suite: BenchSuite, dimension: int, n: int, seed: int):
    return gen_instance(GeneratorConfig(
        dimension=dimension, n=n, shape_mix=suite.shape_mix, size_ratio=suite.size_ratio, seed=seed,
    ))


def _run_problem(problem: str) -> Callable:
    def run(suite: BenchSuite, dimension: int, n: int, seed: int):
        objects = _objects(suite, dimension, n, seed)
        graph = build_intersection_graph(objects)
        inst = ProblemInstance(graph, problem, r=suite.r if problem == "rds" else 1, objects=objects)
        start = time.perf_counter()
        result = solve(inst, gamma=suite.gamma, method=suite.method, prune=suite.prune)
        seconds = time.perf_counter() - start
        metrics: Dict[str, Any] = {
            "weighted_width": result.stats.get("weighted_width"),
            "width_ratio": result.stats.get("weighted_width", 0) / _scale(n, dimension),
            "log2_seconds": math.log2(seconds) if seconds > 0 else None,
            "scale": _scale(n, dimension),
        }
        if suite.oracle and n <= suite.oracle_max_n:
            try:
                expected = brute_force(inst, max_n=suite.oracle_max_n)
                metrics["oracle_optimum"] = expected.optimum
                metrics["oracle_agree"] = expected.optimum == result.optimum
            except OracleLimitError:
                pass
        return instance_to_dict(objects), result.optimum, seconds, metrics
    return run


def _run_separator(suite: BenchSuite, dimension: int, n: int, seed: int):
    objects = _objects(suite, dimension, n, seed)
    start = time.perf_counter()
    separator = build_separator(objects, suite.gamma)
    seconds = time.perf_counter() - start
    metrics = {
        "weight": separator.weight,
        "weight_ratio": separator.weight / _scale(n, dimension),
        "balance": float(separator.balance),
        "balanced": separator.balanced,
        "cliques": len(separator.cliques),
    }
    return instance_to_dict(objects), separator.weight, seconds, metrics


def _run_decompose(suite: BenchSuite, dimension: int, n: int, seed: int):
    objects = _objects(suite, dimension, n, seed)
    graph = build_intersection_graph(objects)
    start = time.perf_counter()
    prepared = prepare_decomposition(graph, suite.gamma, suite.method, objects)
    seconds = time.perf_counter() - start
    weighted_report = validate_decomposition(prepared.weighted, prepared.partition.contracted)
    nice_report = validate_decomposition(prepared.nice, graph)
    metrics = {
        "weighted_width": prepared.weighted.weighted_width,
        "width_ratio": prepared.weighted.weighted_width / _scale(n, dimension),
        "width": prepared.nice.width,
        "valid": weighted_report.ok and nice_report.ok,
    }
    return instance_to_dict(objects), prepared.weighted.weighted_width, seconds, metrics


def _run_wiring(suite: BenchSuite, dimension: int, side: int, seed: int):
    inst = WiringInstance.random_permutation(dimension, (side,) * (dimension - 1), seed)
    start = time.perf_counter()
    wiring = wire_matching(inst)
    seconds = time.perf_counter() - start
    violations = verify_wiring(wiring, inst)
    metrics = {
        "height": wiring.height,
        "height_ratio": wiring.stats["height_ratio"],
        "length_ratio": wiring.stats["length_ratio"],
        "valid": not violations,
    }
    return inst.to_dict(), wiring.height, seconds, metrics


SUITES: Dict[str, Callable] = {
    "is": _run_problem("is"),
    "ds": _run_problem("ds"),
    "rds": _run_problem("rds"),
    "separator": _run_separator,
    "decompose": _run_decompose,
    "wiring": _run_wiring,
}


def _run_one(suite: BenchSuite, runner: Callable, dimension: int, n: int, seed: int,
             config_hash: str) -> RunRecord:
    document, result, seconds, metrics = runner(suite, dimension, n, seed)
    return RunRecord(
        suite=suite.name,
        command=f"bench {suite.name}",
        dimension=dimension,
        n=n,
        seed=seed,
        config_hash=config_hash,
        instance_hash=content_hash(document),
        result=result,
        seconds=seconds,
        metrics=metrics,
    )


def bench(suite: BenchSuite, progress: Optional[Callable[[int, int], None]] = None) -> List[RunRecord]:
    """Run a suite; records come back ordered by (dimension, size, seed).

    Raises:
        InvalidInputError: For an unknown suite name.
    """
    if suite.name not in SUITES:
        raise InvalidInputError(f"Unknown bench suite: {suite.name}. Available: {', '.join(SUITES)}")
    runner = SUITES[suite.name]
    runs = suite.runs()
    config_hash = suite.config_hash()
    records: Dict[Tuple[int, int, int], RunRecord] = {}

    if suite.threads <= 1 or len(runs) <= 1:
        for run in runs:
            records[run] = _run_one(suite, runner, *run, config_hash)
            if progress:
                progress(len(records), len(runs))
    else:
        with ThreadPoolExecutor(max_workers=suite.threads) as executor:
            futures = {executor.submit(_run_one, suite, runner, *run, config_hash): run for run in runs}
            for future in as_completed(futures):
                records[futures[future]] = future.result()
                if progress:
                    progress(len(records), len(runs))
    logger.info("Bench suite %s: %d runs", suite.name, len(runs))
    return [records[run] for run in runs]


def summarize(records: Sequence[RunRecord]) -> List[Dict[str, Any]]:
    """Per (suite, d, n): run count, oracle agreement count and median metrics."""
    groups: Dict[Tuple[str, int, int], List[RunRecord]] = defaultdict(list)
    for record in records:
        groups[(record.suite, record.dimension, record.n)].append(record)
    summary = []
    for (name, dimension, n), group in sorted(groups.items()):
        row: Dict[str, Any] = {"suite": name, "d": dimension, "n": n, "runs": len(group)}
        checked = [r for r in group if "oracle_agree" in r.metrics]
        if checked:
            row["oracle_checked"] = len(checked)
            row["oracle_agree"] = sum(1 for r in checked if r.metrics["oracle_agree"])
        for key in ("weight_ratio", "width_ratio", "height_ratio", "length_ratio", "seconds"):
            values = [r.seconds if key == "seconds" else r.metrics.get(key) for r in group]
            values = [v for v in values if v is not None]
            if values:
                row[f"median_{key}"] = statistics.median(values)
        if any("valid" in r.metrics for r in group):
            row["valid"] = sum(1 for r in group if r.metrics.get("valid"))
        summary.append(row)
    return summary


def write_table(records: Sequence[RunRecord], csv_path: Optional[Path] = None,
                json_path: Optional[Path] = None) -> None:
    """Write records as CSV rows and as a JSON document with a summary."""
    rows = [record.to_row() for record in records]
    if csv_path is not None:
        csv_path = Path(csv_path)
        csv_path.parent.mkdir(parents=True, exist_ok=True)
        columns: List[str] = []
        for row in rows:
            columns.extend(key for key in row if key not in columns)
        with open(csv_path, "w", encoding="utf-8", newline="") as f:
            writer = csv.DictWriter(f, fieldnames=columns)
            writer.writeheader()
            writer.writerows(rows)
    if json_path is not None:
        write_json(Path(json_path), {"records": rows, "summary": summarize(records)})
