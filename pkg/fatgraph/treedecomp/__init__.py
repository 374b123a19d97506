"""Weighted and traditional tree decompositions."""

from fatgraph.treedecomp.weighted import (
    WeightedTreeDecomposition,
    blowup,
    decompose_by_blowup,
    decompose_by_separator,
)
from fatgraph.treedecomp.nice import (
    FORGET,
    INTRODUCE,
    JOIN,
    LEAF,
    NiceNode,
    TraditionalTreeDecomposition,
    to_traditional,
)
from fatgraph.treedecomp.validate import (
    DecompositionReport,
    validate_decomposition,
    validate_nice,
)
from fatgraph.treedecomp.pipeline import PreparedDecomposition, prepare_decomposition

__all__ = [
    "WeightedTreeDecomposition",
    "blowup",
    "decompose_by_blowup",
    "decompose_by_separator",
    "FORGET",
    "INTRODUCE",
    "JOIN",
    "LEAF",
    "NiceNode",
    "TraditionalTreeDecomposition",
    "to_traditional",
    "DecompositionReport",
    "validate_decomposition",
    "validate_nice",
    "PreparedDecomposition",
    "prepare_decomposition",
]
