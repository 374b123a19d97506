"""Application layer - benchmark sweeps and SVG output."""

from fatgraph.app.bench import BenchSuite, SUITES, bench, geometric_sizes, summarize, write_table
from fatgraph.app.svg import render_instance, render_layer

__all__ = [
    "BenchSuite",
    "SUITES",
    "bench",
    "geometric_sizes",
    "summarize",
    "write_table",
    "render_instance",
    "render_layer",
]
