"""Lattice construction: node order, counts, faces, marked regions."""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simplexcut import (
    boundary_edges,
    boundary_nodes,
    boundary_sets,
    build_graph,
    face_of,
    parallel_line,
    red_regions,
    simplex_points,
    support,
)

# colexicographic node order is a public contract; frozen by hand
DELTA_3_2_ORDER = [
    (2, 0, 0),
    (1, 1, 0),
    (0, 2, 0),
    (1, 0, 1),
    (0, 1, 1),
    (0, 0, 2),
]


def test_node_order_frozen():
    assert simplex_points(3, 2) == DELTA_3_2_ORDER


def test_node_order_is_colex():
    pts = simplex_points(4, 5)
    assert pts == sorted(pts, key=lambda p: p[::-1])


def test_delta_3_9_shape():
    g = build_graph(3, 9)
    assert len(g.nodes) == 55
    assert len(g.edges) == 135
    assert g.terminals == (0, 9, 54)


@pytest.mark.parametrize("k,n", [(3, 2), (3, 9), (4, 2), (4, 3), (4, 12)])
def test_counts_match_binomials(k, n):
    g = build_graph(k, n)
    assert len(g.nodes) == comb(n + k - 1, k - 1)
    assert len(g.edges) == comb(k, 2) * comb(n + k - 2, k - 1)


@given(st.integers(min_value=3, max_value=5), st.integers(min_value=1, max_value=7))
@settings(max_examples=40, deadline=None)
def test_counts_property(k, n):
    g = build_graph(k, n)
    assert len(g.nodes) == comb(n + k - 1, k - 1)
    assert len(g.edges) == comb(k, 2) * comb(n + k - 2, k - 1)


def test_terminals_are_unit_corners():
    g = build_graph(4, 6)
    for i, t in enumerate(g.terminals):
        p = g.nodes[t]
        assert p[i] == g.n
        assert sum(p) == g.n


def test_edges_are_unit_moves():
    g = build_graph(4, 4)
    for u, v in g.edges:
        diff = [a - b for a, b in zip(g.nodes[u], g.nodes[v])]
        assert sorted(diff) == [-1] + [0] * (g.k - 2) + [1]


def test_edge_index_round_trip():
    g = build_graph(3, 5)
    for e, (u, v) in enumerate(g.edges):
        assert g.edge_index[(u, v)] == e
        assert g.edge_between(u, v) == e
        assert g.edge_between(v, u) == e


def test_build_graph_is_cached():
    assert build_graph(3, 7) is build_graph(3, 7)


def test_support():
    assert support((2, 0, 0)) == (1,)
    assert support((1, 1, 0)) == (1, 2)
    assert support((1, 1, 1, 1)) == (1, 2, 3, 4)


def test_boundary_line_counts():
    g = build_graph(3, 6)
    for pair in [(1, 2), (1, 3), (2, 3)]:
        nodes = boundary_nodes(g, pair)
        edges = boundary_edges(g, pair)
        assert len(nodes) == g.n + 1
        assert len(edges) == g.n
        for u in nodes:
            assert set(support(g.nodes[u])) <= set(pair)


def test_boundary_sets_cover_all_pairs():
    g = build_graph(4, 3)
    sets = boundary_sets(g)
    assert set(sets) == {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)}
    for pair, (nodes, edges) in sets.items():
        assert nodes == boundary_nodes(g, pair)
        assert edges == boundary_edges(g, pair)


def test_parallel_line_extremes():
    g = build_graph(3, 8)
    nodes0, edges0 = parallel_line(g, (1, 2), 0)
    assert len(nodes0) == 1 and edges0 == ()
    assert g.nodes[nodes0[0]] == (0, 0, 8)
    nodes_n, edges_n = parallel_line(g, (1, 2), 8)
    assert nodes_n == boundary_nodes(g, (1, 2))
    assert edges_n == boundary_edges(g, (1, 2))


def test_parallel_lines_partition_nodes():
    g = build_graph(3, 8)
    seen = []
    for t in range(g.n + 1):
        nodes, edges = parallel_line(g, (1, 2), t)
        assert len(nodes) == t + 1
        assert len(edges) == t
        seen.extend(nodes)
    assert sorted(seen) == list(range(len(g.nodes)))


def test_face_is_shared_graph_object():
    g = build_graph(4, 5)
    sub, to_parent = face_of(g, (1, 2, 3))
    assert sub is build_graph(3, 5)
    assert len(to_parent) == len(sub.nodes)
    for i, p in enumerate(sub.nodes):
        assert g.nodes[to_parent[i]] == (*p, 0)


@pytest.mark.parametrize(
    "n,c",
    [
        (3, Fraction(1, 3)),
        (8, Fraction(1, 4)),
        (12, Fraction(1, 4)),
        (40, Fraction(3, 40)),
    ],
)
def test_red_region_counts(n, c):
    g = build_graph(4, n)
    rr = red_regions(g, c)
    depth = int(c * n)
    for m in (1, 2, 3):
        assert len(rr.edges[m - 1]) == 3 * depth
        assert len(rr.closures[m - 1]) == (depth + 1) * (depth + 2) // 2
    assert len(rr.all_edges()) == 9 * depth


def test_red_region_cycle_is_closed():
    g = build_graph(4, 8)
    rr = red_regions(g, Fraction(1, 4))
    for m in (1, 2, 3):
        degree: dict[int, int] = {}
        for e in rr.edges[m - 1]:
            for u in g.edges[e]:
                degree[u] = degree.get(u, 0) + 1
        # a disjoint union of simple cycles has all degrees 2; the length
        # check in red_regions pins it to the single triangle of side cn
        assert all(d == 2 for d in degree.values())
        assert len(degree) == len(rr.edges[m - 1])


def test_red_region_rejects_bad_depth():
    g = build_graph(4, 8)
    with pytest.raises(ValueError):
        red_regions(g, Fraction(1, 3))
    with pytest.raises(ValueError):
        red_regions(g, Fraction(5, 8))
    with pytest.raises(ValueError):
        red_regions(build_graph(3, 8), Fraction(1, 4))
