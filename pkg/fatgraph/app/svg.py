"""SVG renderings of planar instances and single wiring layers."""

from pathlib import Path
from typing import Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Circle, Rectangle  # noqa: E402

from fatgraph.cubewiring.paths import Wiring  # noqa: E402
from fatgraph.domain.errors import UnsupportedDimensionError  # noqa: E402
from fatgraph.geometry.objects import Ball, ObjectSet  # noqa: E402
from fatgraph.separator.builder import CliqueSeparator  # noqa: E402

SIDE_COLORS = {"a": "tab:blue", "b": "tab:orange", "separator": "tab:red", None: "tab:gray"}


def render_instance(objects: ObjectSet, path: Path, separator: Optional[CliqueSeparator] = None) -> Path:
    """Draw a d=2 object set, colored by separator side when one is given.

    Raises:
        UnsupportedDimensionError: If the objects are not planar.
    """
    if objects.dimension != 2:
        raise UnsupportedDimensionError(objects.dimension, 2, "SVG rendering of objects (needs exactly 2)")
    sides = {}
    if separator is not None:
        sides.update({v: "a" for v in separator.side_a})
        sides.update({v: "b" for v in separator.side_b})
        sides.update({v: "separator" for v in separator.vertices()})

    fig, ax = plt.subplots(figsize=(8, 8))
    for obj in objects:
        color = SIDE_COLORS[sides.get(obj.id)]
        shape = obj.shape
        if isinstance(shape, Ball):
            patch = Circle([float(c) for c in shape.center], float(shape.radius))
        else:
            patch = Rectangle([float(c) for c in shape.min_corner], float(shape.sides[0]), float(shape.sides[1]))
        patch.set_facecolor(color)
        patch.set_edgecolor("black")
        patch.set_alpha(0.45 if sides.get(obj.id) != "separator" else 0.8)
        ax.add_patch(patch)
    if separator is not None and separator.hypercube is not None:
        cube = separator.hypercube
        ax.add_patch(Rectangle(
            [float(c) for c in cube.lower], float(cube.side), float(cube.side),
            fill=False, linestyle="--", edgecolor="black",
        ))
        ax.set_title(f"separator weight {separator.weight:.3f}, {len(separator.cliques)} cliques")
    ax.set_aspect("equal")
    ax.autoscale_view()
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, format="svg")
    plt.close(fig)
    return path


def render_layer(wiring: Wiring, height: int, path: Path) -> Path:
    """Draw the horizontal slice of a d=3 wiring at one height.

    Raises:
        UnsupportedDimensionError: If the wiring is not three-dimensional.
    """
    if wiring.dimension != 3:
        raise UnsupportedDimensionError(wiring.dimension, 3, "SVG rendering of wiring layers (needs exactly 3)")
    cmap = plt.get_cmap("tab20")
    fig, ax = plt.subplots(figsize=(8, 8))
    for index, wire in enumerate(wiring.wires):
        segment = [p for p in wire if p[-1] == height]
        if not segment:
            continue
        color = cmap(index % 20)
        xs = [p[0] for p in segment]
        ys = [p[1] for p in segment]
        ax.plot(xs, ys, color=color, linewidth=1)
        ax.scatter(xs, ys, color=color, s=6)
    ax.set_xlim(wiring.corner[0] - 1, wiring.box[0] + 1)
    ax.set_ylim(wiring.corner[1] - 1, wiring.box[1] + 1)
    ax.set_aspect("equal")
    ax.set_title(f"layer {height} of {wiring.height}")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, format="svg")
    plt.close(fig)
    return path
