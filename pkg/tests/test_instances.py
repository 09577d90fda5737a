"""Instance weights: the base triangle, the four components, mixing."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simplexcut import (
    COMPONENT_NAMES,
    GapParams,
    WeightMap,
    boundary_edges,
    boundary_nodes,
    build_base_triangle,
    build_component,
    build_graph,
    combine,
    combine_maps,
    red_regions,
    total_weight,
)

# boundary schedule at n=9 (m=3, rho=1/15): descending from both corners,
# middle third flat
N9_BOUNDARY_SCHEDULE = [3, 2, 1, 1, 1, 1, 1, 2, 3]


@pytest.mark.parametrize("n", [3, 6, 9, 12])
def test_base_triangle_totals(n):
    assert total_weight(build_base_triangle(n)) == n


def test_base_triangle_rejects_other_resolutions():
    for n in (2, 4, 7):
        with pytest.raises(ValueError):
            build_base_triangle(n)


def test_boundary_schedule_frozen():
    n = 9
    w = build_base_triangle(n)
    g = w.graph
    rho = Fraction(3, 5 * n)
    for pair in [(1, 2), (1, 3), (2, 3)]:
        line_nodes = boundary_nodes(g, pair)
        # order the line by the first coordinate of the pair, descending
        # from the pair's first corner
        ordered = sorted(line_nodes, key=lambda u: -g.nodes[u][pair[0] - 1])
        weights = [
            w.weight(g.edge_between(a, b)) for a, b in zip(ordered, ordered[1:])
        ]
        assert weights == [m * rho for m in N9_BOUNDARY_SCHEDULE]


def test_nonzero_edge_count_at_n9():
    w = build_base_triangle(9)
    assert len(w.graph.edges) == 135
    assert sum(1 for _, wt in w.items() if wt != 0) == 117


def test_zero_edges_at_n3():
    w = build_base_triangle(3)
    g = w.graph
    zero = [e for e in range(len(g.edges)) if w.weight(e) == 0]
    assert len(zero) == 3
    for e in zero:
        u, v = g.edges[e]
        # both endpoints deep in one corner: some shared coordinate >= 2n/3
        shared = [
            i
            for i in range(3)
            if g.nodes[u][i] == g.nodes[v][i] and g.nodes[u][i] >= 2 * g.n // 3
        ]
        assert shared


@pytest.mark.parametrize("n", range(2, 13))
def test_lines_component_total(n):
    g = build_graph(4, n)
    assert total_weight(build_component(2, g)) == n


@pytest.mark.parametrize("n", range(3, 13))
def test_cycles_component_total(n):
    g = build_graph(4, n)
    w = build_component(3, g, c=Fraction(1, n))
    assert total_weight(w) == n
    rr = red_regions(g, Fraction(1, n))
    assert set(e for e, _ in w.items()) == set(rr.all_edges())


@pytest.mark.parametrize("n", range(2, 13))
def test_uniform_component_total(n):
    g = build_graph(4, n)
    assert total_weight(build_component(4, g)) == n + 3 + Fraction(2, n)


def test_face_component_matches_lifted_triangle():
    g = build_graph(4, 9)
    w = build_component(1, g)
    assert total_weight(w) == 9
    # every weighted edge stays on the x4 = 0 face
    for e, wt in w.items():
        u, v = g.edges[e]
        assert g.nodes[u][3] == 0 and g.nodes[v][3] == 0


def test_component_names():
    assert COMPONENT_NAMES == {1: "face", 2: "lines", 3: "cycles", 4: "uniform"}


def test_component_rejects_three_terminal_graph():
    with pytest.raises(ValueError):
        build_component(2, build_graph(3, 6))


def test_gap_params_validation():
    with pytest.raises(ValueError, match="sum to"):
        GapParams(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 4))
    with pytest.raises(ValueError, match="nonnegative"):
        GapParams(Fraction(3, 2), Fraction(-1, 2), 0, 0, Fraction(1, 4))
    with pytest.raises(ValueError, match="cap depth"):
        GapParams(1, 0, 0, 0, Fraction(1, 2))


def test_tuned_values():
    p = GapParams.tuned()
    assert p.lams() == (
        Fraction(751652, 10**6),
        Fraction(147852, 10**6),
        Fraction(275, 10**6),
        Fraction(100221, 10**6),
    )
    assert p.c == Fraction(74125, 10**6)
    assert GapParams.tuned(c=Fraction(1, 3)).c == Fraction(1, 3)
    assert GapParams.tuned(c=Fraction(1, 3)).lams() == p.lams()


def test_combine_total_closed_form():
    # full tuned mixture at the nearest resolution where the face exists
    params = GapParams.tuned(c=Fraction(1, 13))
    n = 39
    w = combine(params, build_graph(4, n))
    lam4 = params.lam4
    assert total_weight(w) == n + 3 * lam4 + 2 * lam4 / n
    # face-free mixture at n = 40 with the rounded cap depth
    params = GapParams(0, Fraction(1, 2), Fraction(1, 4), Fraction(1, 4), Fraction(3, 40))
    w = combine(params, build_graph(4, 40))
    assert total_weight(w) == 40 + 3 * Fraction(1, 4) + 2 * Fraction(1, 4) / 40


def test_combine_skips_cycles_when_lam3_zero():
    # c*n is not integral at n=6, but lam3 = 0 never instantiates it
    params = GapParams(Fraction(1, 2), Fraction(1, 4), 0, Fraction(1, 4), Fraction(1, 7))
    w = combine(params, build_graph(4, 6))
    assert total_weight(w) == 6 + 3 * Fraction(1, 4) + 2 * Fraction(1, 4) / 6
    # and the face is skipped the same way when lam1 = 0
    params = GapParams(0, Fraction(1, 2), 0, Fraction(1, 2), Fraction(1, 3))
    w = combine(params, build_graph(4, 7))
    assert total_weight(w) == 7 + 3 * Fraction(1, 2) + 2 * Fraction(1, 2) / 7


def test_combine_rejects_nonintegral_depth_when_needed():
    params = GapParams(Fraction(1, 2), Fraction(1, 4), Fraction(1, 8), Fraction(1, 8), Fraction(1, 3))
    with pytest.raises(ValueError):
        combine(params, build_graph(4, 7))


@given(
    st.tuples(
        st.integers(min_value=0, max_value=8),
        st.integers(min_value=0, max_value=8),
        st.integers(min_value=0, max_value=8),
        st.integers(min_value=1, max_value=8),
    )
)
@settings(max_examples=30, deadline=None)
def test_combine_is_linear_in_lambda(raw):
    total = sum(raw)
    lam = tuple(Fraction(r, total) for r in raw)
    params = GapParams(*lam, c=Fraction(1, 3))
    g = build_graph(4, 6)
    w = combine(params, g)
    comps = {
        i: build_component(i, g, c=Fraction(1, 3) if i == 3 else None)
        for i in (1, 2, 3, 4)
    }
    for e in range(len(g.edges)):
        expected = sum(lam[i - 1] * comps[i].weight(e) for i in (1, 2, 3, 4))
        assert w.weight(e) == expected


def test_combine_maps_matches_combine():
    params = GapParams(Fraction(1, 2), Fraction(1, 4), Fraction(1, 8), Fraction(1, 8), Fraction(1, 3))
    g = build_graph(4, 6)
    parts = [
        (params.lam1, build_component(1, g)),
        (params.lam2, build_component(2, g)),
        (params.lam3, build_component(3, g, c=params.c)),
        (params.lam4, build_component(4, g)),
    ]
    a = combine_maps(parts)
    b = combine(params, g)
    assert dict(a.items()) == dict(b.items())


def test_combine_maps_rejects_mixed_graphs():
    with pytest.raises(ValueError):
        combine_maps(
            [
                (Fraction(1, 2), build_component(2, build_graph(4, 4))),
                (Fraction(1, 2), build_component(2, build_graph(4, 5))),
            ]
        )


def test_weight_map_default_zero():
    g = build_graph(4, 5)
    w = WeightMap(g, {0: Fraction(1, 2)})
    assert w.weight(0) == Fraction(1, 2)
    assert w.weight(1) == 0
    assert total_weight(w) == Fraction(1, 2)
