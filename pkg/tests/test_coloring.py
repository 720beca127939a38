import random

import pytest

import oracles
from conftest import A, B, E1, E2, E3, corpus
from maxplanar.chromatic import chromatic_polynomial
from maxplanar.coloring import (
    ColorPartition,
    classify,
    enumerate_partitions,
    find_coloring,
    is_4chromatic_funnel,
    is_coordinated,
    is_uniquely_4colorable,
    iter_partitions,
    partition_count_identity,
)
from maxplanar.graph import Graph, GraphError, complete_graph, contains_clique, cycle_graph
from maxplanar.triangulation import Funnel, bipyramid, icosahedron, octahedron


def _as_sets(parts):
    return {frozenset(frozenset(c) for c in p.classes) for p in parts}


def test_partition_examples():
    assert enumerate_partitions(complete_graph(4)) == [ColorPartition(((0,), (1,), (2,), (3,)))]
    assert enumerate_partitions(bipyramid().graph) == [ColorPartition(((A, B), (E1,), (E2,), (E3,)))]
    assert len(enumerate_partitions(octahedron().graph)) == 4


def test_partitions_match_oracle():
    rng = random.Random(8)
    graphs = [octahedron().graph, cycle_graph(5), Graph.build(4, [(0, 1)])]
    for _ in range(15):
        n = rng.randint(3, 7)
        graphs.append(Graph.build(n, [(u, w) for u in range(n) for w in range(u + 1, n) if rng.random() < 0.5]))
    for g in graphs:
        ref = oracles.color_partitions(g.order, g.edges())
        assert _as_sets(iter_partitions(g)) == ref
        assert _as_sets(iter_partitions(g, anchor=False)) == ref


def test_partition_count_identity_examples():
    assert partition_count_identity(complete_graph(3))
    assert len(enumerate_partitions(complete_graph(3))) * 24 == 24
    assert partition_count_identity(octahedron().graph, 96)
    assert partition_count_identity(icosahedron().graph)
    assert not partition_count_identity(octahedron().graph, 95)
    with pytest.raises(GraphError):
        partition_count_identity(cycle_graph(5))


def test_find_coloring():
    cols = find_coloring(icosahedron().graph)
    g = icosahedron().graph
    assert all(cols[u] != cols[w] for u, w in g.edges()) and set(cols) <= {1, 2, 3, 4}
    assert find_coloring(complete_graph(5)) is None


def test_is_coordinated_examples():
    assert is_coordinated(complete_graph(4)) == (0, 1, 2, 3)
    assert is_coordinated(octahedron().graph) is None
    assert is_coordinated(bipyramid().graph) == (A, E1, E2, E3)


def test_4chromatic_funnel_examples():
    assert is_4chromatic_funnel(complete_graph(4), Funnel(0, 1, 2, 3))
    # antipodes are (i, i + 3): a = 0, a' = 3, b = 1, c = 2
    assert not is_4chromatic_funnel(octahedron().graph, Funnel(3, 1, 2, 0))
    assert is_4chromatic_funnel(bipyramid().graph, Funnel(B, E1, E2, E3))
    with pytest.raises(GraphError):
        is_4chromatic_funnel(octahedron().graph, Funnel(0, 3, 1, 2))


def test_classify_examples():
    assert classify(complete_graph(4)).verdict == "uniquely"
    assert classify(bipyramid().graph).verdict == "uniquely"
    assert classify(octahedron().graph).verdict == "non-coordinated"
    assert classify(complete_graph(5)).verdict == "not-4-colorable"


def test_uniquely_needs_four_classes():
    assert is_uniquely_4colorable(complete_graph(4))
    assert not is_uniquely_4colorable(complete_graph(3))
    assert not is_uniquely_4colorable(octahedron().graph)


def test_classification_is_consistent_on_corpus():
    seen = set()
    for t in corpus(9):
        g = t.graph
        c = classify(g)
        seen.add(c.verdict)
        assert c.partitions * 24 == chromatic_polynomial(g)(4)
        if c.verdict == "quasi-uniquely":
            sub = g.induced(c.witness)
            assert len(c.witness) < g.order and is_uniquely_4colorable(sub)
        if c.verdict == "pseudo-uniquely":
            # K4 is uniquely 4-colorable, so a pseudo graph must be K4-free
            assert not contains_clique(g, 4)
            assert is_coordinated(g) == c.witness
    assert seen == {"uniquely", "quasi-uniquely", "pseudo-uniquely", "non-coordinated"}


def test_cap_limits_the_search():
    g = next(t.graph for t in corpus(9) if classify(t.graph).verdict == "quasi-uniquely")
    capped = classify(g, cap=3)
    assert capped.verdict == "pseudo-uniquely" and capped.cap == 3


def test_three_class_graph_is_not_uniquely():
    assert classify(complete_graph(3)).verdict == "non-coordinated"
