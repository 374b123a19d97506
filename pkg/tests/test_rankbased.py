"""Tests for set partitions and the rank-based reduce."""

import pytest
from hypothesis import given, settings, strategies as st

from fatgraph.domain.errors import InvalidInputError
from fatgraph.rankbased import (
    WeightedPartitionSet,
    all_partitions,
    blocks,
    bottom,
    canonical,
    check_representation,
    consistent_cuts,
    glue,
    insert,
    join,
    project,
    reduce,
    top,
)


def test_canonical_relabels_in_order():
    """Test restricted growth strings."""
    assert canonical("bab") == (0, 1, 0)
    assert canonical([7, 7, 3]) == (0, 0, 1)
    assert blocks((0, 1, 0)) == [[0, 2], [1]]


def test_join_examples():
    """Test joins reaching the single block and staying fine."""
    assert join((0, 0, 1), (0, 1, 1)) == top(3)
    assert join(bottom(3), bottom(3)) == bottom(3)
    assert join((0, 1, 0, 2), (0, 1, 2, 1)) == (0, 1, 0, 1)
    with pytest.raises(InvalidInputError):
        join((0, 0), (0, 0, 0))


def test_insert_glue_project():
    """Test the partition operations used by the dynamic programs."""
    assert insert((0, 0), 1) == (0, 1, 0)
    assert glue((0, 1, 2), 0, 2) == (0, 1, 0)
    assert glue((0, 0), 0, 1) == (0, 0)
    assert project((0, 0, 1), 0) == (0, 1)
    assert project((0, 0, 1), 2, strict=False) == (0, 0)
    with pytest.raises(InvalidInputError):
        project((0, 0, 1), 2)


def test_all_partitions_counts_bell_numbers():
    """Test the number of partitions of small universes."""
    assert [len(list(all_partitions(u))) for u in range(6)] == [1, 1, 2, 5, 15, 52]


def test_consistent_cuts():
    """Test cut counts for the single block and all singletons."""
    assert list(consistent_cuts(top(3))) == [0]
    assert sorted(consistent_cuts(bottom(3))) == [0, 1, 2, 3]


def test_reduce_keeps_needed_heavier_entry():
    """Test that a heavier partition needed for some completion survives."""
    partitions = WeightedPartitionSet((10, 20))
    partitions.add((0, 1), 1)
    partitions.add((0, 0), 5)
    reduced = reduce(partitions)
    assert reduced.entries == {(0, 1): 1, (0, 0): 5}
    assert reduced.best_completion((0, 1)) == 5
    assert reduced.best_completion((0, 0)) == 1


def test_reduce_drops_dominated_entries():
    """Test that all five partitions of three elements shrink to at most four."""
    partitions = WeightedPartitionSet(("a", "b", "c"))
    for weight, p in enumerate(all_partitions(3)):
        partitions.add(p, weight)
    reduced = reduce(partitions)
    assert len(reduced) <= 4
    assert check_representation(partitions, reduced) == []


def test_add_keeps_minimum_weight():
    """Test that adding a partition twice keeps the lighter weight."""
    partitions = WeightedPartitionSet((0, 1))
    partitions.add((0, 1), 1)
    partitions.add((0, 1), 3)
    assert partitions.entries == {(0, 1): 1}


def test_partition_set_errors():
    """Test universe limits and mismatched partitions."""
    with pytest.raises(InvalidInputError):
        WeightedPartitionSet(tuple(range(31)))
    with pytest.raises(InvalidInputError):
        WeightedPartitionSet((0, 1)).add((0,), 1)
    with pytest.raises(InvalidInputError):
        reduce(WeightedPartitionSet(()))


@st.composite
def weighted_sets(draw):
    u = draw(st.integers(min_value=1, max_value=5))
    pool = list(all_partitions(u))
    chosen = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=15))
    partitions = WeightedPartitionSet(tuple(range(u)))
    for p in chosen:
        partitions.add(p, draw(st.integers(min_value=0, max_value=9)))
    return partitions


@settings(max_examples=80, deadline=None)
@given(partitions=weighted_sets())
def test_reduce_represents_every_completion(partitions):
    """Test that reduce preserves every best completion and is idempotent."""
    reduced = reduce(partitions)
    assert check_representation(partitions, reduced) == []
    assert reduce(reduced).entries == reduced.entries
