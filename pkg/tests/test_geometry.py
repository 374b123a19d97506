"""Tests for objects, intersection graphs and instance I/O."""

import math
from fractions import Fraction

import pytest
from hypothesis import example, given, settings, strategies as st

from fatgraph.domain.errors import InvalidInputError
from fatgraph.geometry.graph import (
    IntersectionGraph,
    build_intersection_graph,
    build_intersection_graph_naive,
)
from fatgraph.geometry.io import (
    graph_from_dict,
    graph_to_dict,
    instance_from_dict,
    instance_to_dict,
    load_instance,
    save_instance,
)
from fatgraph.geometry.objects import Ball, Box, ObjectSet, diameter, fatness, inner_ball, intersects

from tests.conftest import random_objects


def test_overlapping_balls_intersect():
    """Test that unit balls at distance 1.5 intersect and at distance 3 do not."""
    assert intersects(Ball((0, 0), 1), Ball(("3/2", 0), 1))
    assert not intersects(Ball((0, 0), 1), Ball((3, 0), 1))


def test_tangent_balls_intersect():
    """Test that closed objects touching at one point intersect."""
    assert intersects(Ball((0, 0), 1), Ball((2, 0), 1))


def test_box_and_ball_intersect():
    """Test the unit box against a ball centered one unit to its right."""
    assert intersects(Box((0, 0), (1, 1)), Ball((2, "1/2"), 1))
    assert not intersects(Box((0, 0), (1, 1)), Ball((3, "1/2"), 1))


def test_dimension_mismatch_raises():
    """Test that objects of different dimensions cannot be intersected."""
    with pytest.raises(InvalidInputError):
        intersects(Ball((0, 0), 1), Ball((0, 0, 0), 1))


def test_diameters():
    """Test exact squared diameters of balls and boxes."""
    assert diameter(Ball((0, 0), 1)).squared == 4
    assert diameter(Box((0, 0), (1, 1))).squared == 2
    assert math.isclose(diameter(Box((0, 0), (1, 1))).approx, math.sqrt(2))
    assert diameter(Box((0, 0), (3, 4))).squared == 25


def test_inner_ball_and_fatness_of_box():
    """Test that a box's inscribed ball uses its shortest side."""
    center, radius = inner_ball(Box((0, 0), (2, 4)))
    assert center == (Fraction(1), Fraction(2))
    assert radius == 1
    assert math.isclose(fatness(Box((0, 0), (1, 1))), 1 / math.sqrt(2))
    assert fatness(Ball((0, 0), 5)) == 1.0


def test_invalid_shapes_raise():
    """Test validation of radii, sides and ids."""
    with pytest.raises(InvalidInputError):
        Ball((0, 0), 0)
    with pytest.raises(InvalidInputError):
        Box((0, 0), (1, -1))
    with pytest.raises(InvalidInputError):
        ObjectSet.from_shapes([Ball((0,), 1)], 1)


def test_disk_row_is_a_path(disk_row):
    """Test the intersection graph of four disks in a row."""
    graph = build_intersection_graph(disk_row)
    assert sorted(graph.edges()) == [(0, 1), (1, 2), (2, 3)]


def test_empty_object_set_raises():
    """Test that the graph of an empty set is rejected."""
    with pytest.raises(InvalidInputError):
        build_intersection_graph(ObjectSet(2, ()))


@settings(max_examples=30, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=40),
    seed=st.integers(min_value=0, max_value=10_000),
    dimension=st.sampled_from([2, 3]),
    mix=st.sampled_from(["ball", "box", "mixed"]),
)
@example(n=2, seed=0, dimension=2, mix="box")
def test_bucketed_graph_matches_all_pairs(n, seed, dimension, mix):
    """Test that the bucketed builder agrees with the all-pairs builder."""
    objects = random_objects(dimension, n, seed, shape_mix=mix, size_ratio=2.0)
    fast = build_intersection_graph(objects)
    slow = build_intersection_graph_naive(objects)
    assert sorted(fast.edges()) == sorted(slow.edges())


def test_graph_from_edges_validation():
    """Test that out-of-range endpoints and self-loops are rejected."""
    with pytest.raises(InvalidInputError):
        IntersectionGraph.from_edges(3, [(0, 3)])
    with pytest.raises(InvalidInputError):
        IntersectionGraph.from_edges(3, [(1, 1)])


def test_instance_round_trip(temp_dir):
    """Test that a mixed instance with rational coordinates survives save and load."""
    objects = ObjectSet.from_shapes([Ball(("1/3", 0), "5/4"), Box((0, 2), (1, "3/2"))], 2)
    path = temp_dir / "inst.json"
    save_instance(path, objects)
    assert load_instance(path) == objects


def test_instance_objects_sorted_by_id():
    """Test that objects given out of order are sorted by id."""
    data = {
        "dimension": 2,
        "objects": [
            {"id": 1, "ball": {"center": [5, 0], "radius": 1}},
            {"id": 0, "box": {"min": [0, 0], "sides": [1, 1]}},
        ],
    }
    objects = instance_from_dict(data)
    assert isinstance(objects[0].shape, Box)
    assert instance_to_dict(objects)["objects"][0]["id"] == 0


def test_malformed_instance_raises():
    """Test missing fields and unknown shapes."""
    with pytest.raises(InvalidInputError):
        instance_from_dict({"objects": []})
    with pytest.raises(InvalidInputError):
        instance_from_dict({"dimension": 2, "objects": [{"id": 0, "cone": {}}]})


def test_graph_document_round_trip():
    """Test the graph document format."""
    graph = IntersectionGraph.from_edges(4, [(0, 1), (2, 3)])
    again = graph_from_dict(graph_to_dict(graph))
    assert again.n == 4
    assert sorted(again.edges()) == [(0, 1), (2, 3)]
