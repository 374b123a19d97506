"""Pytest configuration and fixtures."""

import json
import tempfile
from pathlib import Path

import networkx as nx
import pytest

from fatgraph.domain.types import GeneratorConfig, ProblemInstance
from fatgraph.geometry.graph import IntersectionGraph, build_intersection_graph
from fatgraph.geometry.objects import Ball, ObjectSet
from fatgraph.oracle import gen_instance


@pytest.fixture
def temp_dir():
    """Provide a temporary directory for tests."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


def graph_of(nx_graph: nx.Graph) -> IntersectionGraph:
    return IntersectionGraph.from_networkx(nx_graph)


def instance_of(nx_graph: nx.Graph, problem: str, **kwargs) -> ProblemInstance:
    return ProblemInstance(graph_of(nx_graph), problem, **kwargs)


def random_objects(dimension: int, n: int, seed: int, **kwargs) -> ObjectSet:
    return gen_instance(GeneratorConfig(dimension=dimension, n=n, seed=seed, **kwargs))


@pytest.fixture
def path5():
    """Path on five vertices."""
    return graph_of(nx.path_graph(5))


@pytest.fixture
def k5():
    return graph_of(nx.complete_graph(5))


@pytest.fixture
def disk_row():
    """Unit disks centered at (0,0), (1.5,0), (3,0), (4.5,0): a path of length 3."""
    shapes = [Ball((x, 0), 1) for x in ("0", "3/2", "3", "9/2")]
    return ObjectSet.from_shapes(shapes, 2)


@pytest.fixture
def random_disks():
    """Factory for seeded random unit-disk instances."""
    def make(n: int, seed: int = 0, dimension: int = 2):
        objects = random_objects(dimension, n, seed)
        return objects, build_intersection_graph(objects)
    return make


@pytest.fixture
def write_doc(temp_dir):
    """Write a JSON document into the temp directory and return its path."""
    def write(name: str, data) -> Path:
        path = temp_dir / name
        path.write_text(json.dumps(data))
        return path
    return write
