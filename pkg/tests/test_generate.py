import networkx as nx
import pytest

import oracles
from maxplanar.generate import MAX_ORDER, all_rotations, embedding_code, generate_all
from maxplanar.graph import GraphError, canonical_form
from maxplanar.triangulation import Triangulation, icosahedron

# published enumeration of triangulations of the sphere, n = 4..13
KNOWN = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 9: 50, 10: 233, 11: 1249, 12: 7595, 13: 49566}


def _nx(t: Triangulation) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(t.order))
    g.add_edges_from(t.graph.edges())
    return g


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_counts_match_edge_subset_oracle(n):
    assert len(generate_all(n).graphs) == len(oracles.triangulation_classes(n))


@pytest.mark.parametrize("n", [8, 9, 10])
def test_classes_match_flip_oracle(n):
    ours = [_nx(t) for t in generate_all(n).graphs]
    ref = oracles.triangulation_classes_by_flips(n)
    assert len(ours) == len(ref)
    for h in ref:
        assert sum(nx.is_isomorphic(g, h) for g in ours) == 1


@pytest.mark.parametrize("n", range(4, 12))
def test_counts_match_published_values(n):
    assert len(generate_all(n).graphs) == KNOWN[n]


def test_outputs_are_pairwise_non_isomorphic():
    for n in range(4, 11):
        forms = [canonical_form(t.graph) for t in generate_all(n).graphs]
        assert len(set(forms)) == len(forms)


def test_counts_by_min_degree():
    rep = generate_all(10)
    assert sum(rep.counts_by_min_degree.values()) == 233
    assert set(rep.counts_by_min_degree) <= {3, 4, 5}


def test_min_degree_five():
    ico = generate_all(12, min_degree_filter=5).graphs
    assert len(ico) == 1
    assert canonical_form(ico[0].graph) == canonical_form(icosahedron().graph)
    for n in range(4, 12):
        assert generate_all(n, min_degree_filter=5).graphs == []


def test_seed_does_not_change_the_output():
    for n in (8, 9):
        assert all_rotations(n, seed=1) == all_rotations(n) == all_rotations(n, seed=99)


def test_embedding_code_is_relabeling_invariant():
    t = icosahedron()
    perm = [5, 3, 11, 0, 8, 1, 2, 10, 4, 9, 7, 6]
    rot = [None] * 12
    for v, r in enumerate(t.rotation):
        rot[perm[v]] = tuple(perm[w] for w in r)
    assert embedding_code(tuple(rot)) == embedding_code(t.rotation)
    mirrored = tuple(tuple(reversed(r)) for r in t.rotation)
    assert embedding_code(mirrored) == embedding_code(t.rotation)


def test_every_output_is_a_valid_triangulation():
    for n in range(4, 11):
        for t in generate_all(n).graphs:
            t.validate()


@pytest.mark.parametrize("n", [3, MAX_ORDER + 1])
def test_range_guard(n):
    with pytest.raises(GraphError):
        generate_all(n)
