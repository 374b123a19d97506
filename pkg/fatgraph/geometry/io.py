"""JSON encodings of object sets and graphs."""

from pathlib import Path
from typing import Any, Dict

from fatgraph.domain.errors import InvalidInputError
from fatgraph.geometry.graph import IntersectionGraph
from fatgraph.geometry.objects import Ball, Box, FatObject, ObjectSet
from fatgraph.utils.file_utils import format_rational, read_json, write_json


def instance_to_dict(objects: ObjectSet) -> Dict[str, Any]:
    encoded = []
    for obj in objects:
        shape = obj.shape
        if isinstance(shape, Ball):
            encoded.append({
                "id": obj.id,
                "ball": {
                    "center": [format_rational(c) for c in shape.center],
                    "radius": format_rational(shape.radius),
                },
            })
        else:
            encoded.append({
                "id": obj.id,
                "box": {
                    "min": [format_rational(c) for c in shape.min_corner],
                    "sides": [format_rational(s) for s in shape.sides],
                },
            })
    return {"dimension": objects.dimension, "objects": encoded}


def instance_from_dict(data: Dict[str, Any]) -> ObjectSet:
    """Decode the instance format.

    Objects may appear in any order; they are sorted by id.

    Raises:
        InvalidInputError: On missing fields, unknown shapes or bad ids.
    """
    if not isinstance(data, dict) or "dimension" not in data or "objects" not in data:
        raise InvalidInputError("Instance must have 'dimension' and 'objects' fields")
    dimension = data["dimension"]
    if not isinstance(dimension, int):
        raise InvalidInputError(f"Dimension must be an integer, got {dimension!r}")

    objects = []
    for entry in data["objects"]:
        try:
            obj_id = entry["id"]
            if "ball" in entry:
                shape = Ball(tuple(entry["ball"]["center"]), entry["ball"]["radius"])
            elif "box" in entry:
                shape = Box(tuple(entry["box"]["min"]), tuple(entry["box"]["sides"]))
            else:
                raise InvalidInputError(f"Object {obj_id} has no 'ball' or 'box' shape")
        except (KeyError, TypeError) as e:
            raise InvalidInputError(f"Malformed object entry {entry!r}: {e}")
        if not isinstance(obj_id, int):
            raise InvalidInputError(f"Object id must be an integer, got {obj_id!r}")
        objects.append(FatObject(obj_id, shape))
    objects.sort(key=lambda o: o.id)
    return ObjectSet(dimension, tuple(objects))


def graph_to_dict(graph: IntersectionGraph) -> Dict[str, Any]:
    return {"n": graph.n, "edges": [list(e) for e in graph.edges()]}


def graph_from_dict(data: Dict[str, Any]) -> IntersectionGraph:
    if not isinstance(data, dict) or "n" not in data:
        raise InvalidInputError("Graph must have an 'n' field")
    try:
        edges = [(int(u), int(v)) for u, v in data.get("edges", [])]
    except (TypeError, ValueError) as e:
        raise InvalidInputError(f"Malformed edge list: {e}")
    return IntersectionGraph.from_edges(int(data["n"]), edges)


def load_instance(path: Path) -> ObjectSet:
    return instance_from_dict(read_json(path))


def save_instance(path: Path, objects: ObjectSet) -> None:
    write_json(path, instance_to_dict(objects))


def load_graph(path: Path) -> IntersectionGraph:
    return graph_from_dict(read_json(path))


def save_graph(path: Path, graph: IntersectionGraph) -> None:
    write_json(path, graph_to_dict(graph))


def is_instance_document(data: Any) -> bool:
    return isinstance(data, dict) and "objects" in data and "dimension" in data
