"""Graph -> partition -> weighted decomposition -> nice decomposition."""

import logging
from dataclasses import dataclass
from typing import Optional

from fatgraph.contraction import KappaPartition, build_kappa_partition
from fatgraph.domain.errors import InvalidInputError, UnsupportedError
from fatgraph.geometry.graph import IntersectionGraph
from fatgraph.geometry.objects import ObjectSet
from fatgraph.separator.builder import separator_for_contraction
from fatgraph.separator.hypercube import EXACT_H0_LIMIT
from fatgraph.treedecomp.nice import TraditionalTreeDecomposition, to_traditional
from fatgraph.treedecomp.weighted import (
    WeightedTreeDecomposition,
    decompose_by_blowup,
    decompose_by_separator,
)

logger = logging.getLogger(__name__)

METHODS = ("blowup", "separator")


@dataclass
class PreparedDecomposition:
    partition: KappaPartition
    weighted: WeightedTreeDecomposition
    nice: TraditionalTreeDecomposition


def weighted_decomposition(
    partition: KappaPartition,
    gamma="log",
    method: str = "blowup",
    objects: Optional[ObjectSet] = None,
    c: float = 4.0,
    exact_h0: Optional[bool] = None,
    exact_limit: int = EXACT_H0_LIMIT,
) -> WeightedTreeDecomposition:
    """Weighted decomposition of the contracted graph by the chosen method.

    Raises:
        InvalidInputError: For an unknown method.
        UnsupportedError: For the separator method without geometry.
    """
    if method == "blowup":
        return decompose_by_blowup(partition.contracted)
    if method == "separator":
        def sep_fn(nodes):
            separator = separator_for_contraction(
                partition, objects, gamma, nodes=nodes, exact_h0=exact_h0, exact_limit=exact_limit
            )
            return separator.vertices()

        if objects is None:
            raise UnsupportedError("The separator method needs object geometry; use the blowup method")
        return decompose_by_separator(partition.contracted, sep_fn, None, c, objects.dimension)
    raise InvalidInputError(f"Unknown decomposition method: {method}. Available: {', '.join(METHODS)}")


def prepare_decomposition(
    graph: IntersectionGraph,
    gamma="log",
    method: str = "blowup",
    objects: Optional[ObjectSet] = None,
    c: float = 4.0,
    exact_h0: Optional[bool] = None,
    exact_limit: int = EXACT_H0_LIMIT,
) -> PreparedDecomposition:
    """Build the partition and both decompositions shared by every solver."""
    partition = build_kappa_partition(graph, gamma)
    weighted = weighted_decomposition(partition, gamma, method, objects, c, exact_h0, exact_limit)
    nice = to_traditional(weighted, partition)
    logger.debug(
        "Prepared %s decomposition: %d nice nodes, width %d, weighted width %.3f",
        method, len(nice.nodes), nice.width, weighted.weighted_width,
    )
    return PreparedDecomposition(partition, weighted, nice)
