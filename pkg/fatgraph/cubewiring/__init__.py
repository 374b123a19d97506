"""Vertex-disjoint lattice-path wirings in grid boxes and grid minors."""

from fatgraph.cubewiring.paths import (
    Wiring,
    comp,
    comp_point,
    magnify,
    snake_order,
)
from fatgraph.cubewiring.movement import compress, expand, global_movement, local_movement
from fatgraph.cubewiring.pushpull import push_pull
from fatgraph.cubewiring.matching import WiringInstance, wire_matching
from fatgraph.cubewiring.verify import verify_wiring, wiring_summary
from fatgraph.cubewiring.minor import MinorEmbedding, embed_minor, verify_minor

__all__ = [
    "Wiring",
    "comp",
    "comp_point",
    "magnify",
    "snake_order",
    "compress",
    "expand",
    "global_movement",
    "local_movement",
    "push_pull",
    "WiringInstance",
    "wire_matching",
    "verify_wiring",
    "wiring_summary",
    "MinorEmbedding",
    "embed_minor",
    "verify_minor",
]
