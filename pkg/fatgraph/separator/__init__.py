"""Balanced clique separators for intersection graphs of fat objects."""

from fatgraph.separator.weights import WeightFunction, WeightRegistry, get_weight_function
from fatgraph.separator.hypercube import (
    Hypercube,
    balance_threshold,
    build_candidate_shells,
    find_base_hypercube,
    shell_count,
)
from fatgraph.separator.cliques import (
    clique_cover_size_class,
    max_size_class,
    size_class,
    stab_large_objects,
)
from fatgraph.separator.builder import (
    CliqueSeparator,
    build_separator,
    separator_for_contraction,
)

__all__ = [
    "WeightFunction",
    "WeightRegistry",
    "get_weight_function",
    "Hypercube",
    "balance_threshold",
    "build_candidate_shells",
    "find_base_hypercube",
    "shell_count",
    "clique_cover_size_class",
    "max_size_class",
    "size_class",
    "stab_large_objects",
    "CliqueSeparator",
    "build_separator",
    "separator_for_contraction",
]
