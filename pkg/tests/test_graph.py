import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planarcanon.errors import DisconnectedGraph, GraphError
from planarcanon.graph import (
    INF,
    Graph,
    all_geodesics_avoiding,
    all_pairs_distances,
    articulation_points,
    block_decomposition,
    distance,
    is_k_connected,
)

from conftest import complete_graph, cycle_graph, path_graph, plain
from oracles import cutpoints as oracle_cutpoints
from oracles import k_connected as oracle_k_connected


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_graph_rejects_self_loops_and_parallel_edges():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 2)])


def test_adjacency_is_sorted_and_symmetric():
    g = Graph(4, [(3, 0), (2, 0), (1, 0), (1, 3)])
    assert g.adj[0] == (1, 2, 3)
    assert all(v in g.adj[u] for v in range(g.n) for u in g.adj[v])
    assert g.m == 4 and g.degree(1) == 2


def test_distance_examples():
    c6 = cycle_graph(6)
    assert distance(c6, 0, 3) == 3
    assert distance(c6, 2, 2) == 0
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert distance(two_triangles, 0, 4) == INF
    with pytest.raises(GraphError):
        distance(c6, 0, 6)


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_distance_is_a_metric(g):
    d = all_pairs_distances(g)
    for a, b, c in itertools.product(range(g.n), repeat=3):
        assert d[a][a] == 0
        assert d[a][b] == d[b][a]
        assert d[a][c] <= d[a][b] + d[b][c]


def test_geodesics_avoiding_examples():
    c6 = cycle_graph(6)
    assert sorted(all_geodesics_avoiding(c6, set(), 0, 3)) == [(0, 1, 2, 3), (0, 5, 4, 3)]
    assert all_geodesics_avoiding(c6, {1}, 0, 3) == [(0, 5, 4, 3)]
    assert all_geodesics_avoiding(complete_graph(4), {2, 3}, 0, 1) == [(0, 1)]
    assert all_geodesics_avoiding(c6, {1, 5}, 0, 3) == []


@given(graphs(), st.data())
@settings(max_examples=60, deadline=None)
def test_geodesics_have_free_interiors_and_minimum_length(g, data):
    u = data.draw(st.integers(0, g.n - 1))
    v = data.draw(st.integers(0, g.n - 1))
    avoid = set(data.draw(st.lists(st.integers(0, g.n - 1), max_size=3)))
    paths = all_geodesics_avoiding(g, avoid, u, v)
    assert paths == sorted(paths)
    lengths = {len(p) - 1 for p in paths}
    assert len(lengths) <= 1
    for p in paths:
        assert p[0] == u and p[-1] == v
        assert len(set(p)) == len(p)
        assert not set(p[1:-1]) & avoid
        assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
    if not avoid:
        d = distance(g, u, v)
        assert (d == INF) == (not paths)
        if paths:
            assert lengths == {d}


def test_connectivity_examples():
    prism = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert is_k_connected(complete_graph(4), 3)
    assert not is_k_connected(cycle_graph(5), 3)
    assert is_k_connected(prism, 3)
    assert oracle_k_connected(*plain(prism), 3)


@given(graphs(max_n=9), st.integers(min_value=1, max_value=4))
@settings(max_examples=150, deadline=None)
def test_k_connectivity_matches_deletion_oracle(g, k):
    assert is_k_connected(g, k) == oracle_k_connected(*plain(g), k)


def test_block_decomposition_examples():
    bowtie = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    dec = block_decomposition(bowtie)
    assert len(dec.blocks) == 2 and dec.cutpoints == {2}
    assert dec.block_tree is not None and dec.is_path()
    p4 = block_decomposition(path_graph(4))
    assert len(p4.blocks) == 3 and p4.is_path()
    c6 = block_decomposition(cycle_graph(6))
    assert len(c6.blocks) == 1 and not c6.cutpoints
    with pytest.raises(DisconnectedGraph):
        block_decomposition(Graph(4, [(0, 1), (2, 3)]))


def test_star_has_no_block_tree():
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    dec = block_decomposition(star)
    assert dec.block_tree is None
    assert not dec.is_path()


@given(graphs(max_n=9))
@settings(max_examples=100, deadline=None)
def test_blocks_cover_edges_once_and_cutpoints_match_oracle(g):
    from planarcanon.graph import is_connected

    if g.n < 2 or not is_connected(g):
        return
    dec = block_decomposition(g)
    for a, b in g.edges:
        assert sum(1 for blk in dec.blocks if a in blk and b in blk) == 1
    for b1, b2 in itertools.combinations(dec.blocks, 2):
        shared = b1 & b2
        assert len(shared) <= 1
        assert shared <= dec.cutpoints
    assert dec.cutpoints == oracle_cutpoints(*plain(g))
    assert set(articulation_points(g)) == dec.cutpoints
