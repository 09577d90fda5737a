"""Discretized-simplex lattice graphs.

A point of the lattice is a k-tuple of nonnegative integers summing to n,
standing for the rational vector x/n on the probability simplex.  Two points
are adjacent when one is obtained from the other by moving a single unit of
mass between two coordinates; this unit-distance graph is what every weight
construction in the package lives on.

Node order is a public contract: points are sorted colexicographically by
their integer coordinate tuple, and every index that appears in serialized
instances or labelings refers to that order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator

Point = tuple[int, ...]


def _compositions(k: int, n: int) -> Iterator[Point]:
    if k == 1:
        yield (n,)
        return
    for head in range(n + 1):
        for tail in _compositions(k - 1, n - head):
            yield (head,) + tail


def simplex_points(k: int, n: int) -> list[Point]:
    """All lattice points of the k-coordinate simplex at resolution n.

    Returned colexicographically sorted, so the terminal n*e1 comes first
    and n*ek last.  len(result) == C(n+k-1, k-1).
    """
    if k < 2:
        raise ValueError("need at least two coordinates")
    if n < 1:
        raise ValueError("resolution must be positive")
    return sorted(_compositions(k, n), key=lambda p: p[::-1])


def support(point: Point) -> tuple[int, ...]:
    """1-based indices of the strictly positive coordinates."""
    return tuple(i + 1 for i, value in enumerate(point) if value > 0)


def node_count(k: int, n: int) -> int:
    return math.comb(n + k - 1, k - 1)


def edge_count(k: int, n: int) -> int:
    return math.comb(k, 2) * math.comb(n + k - 2, k - 1)


@dataclass(frozen=True, eq=False)
class SimplexGraph:
    """Unit-edge graph on the discretized simplex.

    nodes      colex-sorted coordinate tuples
    index      point -> node index
    edges      (u, v) node-index pairs with u < v, sorted
    adj        adj[u] = tuple of (neighbor, edge index)
    terminals  terminals[i] = node index of the point n*e(i+1)
    """

    k: int
    n: int
    nodes: tuple[Point, ...]
    index: dict[Point, int]
    edges: tuple[tuple[int, int], ...]
    edge_index: dict[tuple[int, int], int]
    adj: tuple[tuple[tuple[int, int], ...], ...]
    terminals: tuple[int, ...]

    def terminal_of(self, node: int) -> int | None:
        """1-based terminal id if the node is a terminal, else None."""
        point = self.nodes[node]
        if max(point) == self.n:
            return point.index(self.n) + 1
        return None

    def edge_between(self, u: int, v: int) -> int | None:
        if u > v:
            u, v = v, u
        return self.edge_index.get((u, v))

    def supports(self) -> tuple[tuple[int, ...], ...]:
        return tuple(support(p) for p in self.nodes)


@lru_cache(maxsize=None)
def build_graph(k: int, n: int) -> SimplexGraph:
    """Build (and cache) the simplex lattice graph for k terminals at resolution n."""
    nodes = tuple(simplex_points(k, n))
    index = {p: i for i, p in enumerate(nodes)}
    edges = []
    for u, p in enumerate(nodes):
        for i in range(k):
            if p[i] == 0:
                continue
            for j in range(k):
                if i == j:
                    continue
                q = list(p)
                q[i] -= 1
                q[j] += 1
                v = index[tuple(q)]
                if v > u:
                    edges.append((u, v))
    edges.sort()
    edges_t = tuple(edges)
    edge_index = {e: i for i, e in enumerate(edges_t)}
    adj_lists: list[list[tuple[int, int]]] = [[] for _ in nodes]
    for e, (u, v) in enumerate(edges_t):
        adj_lists[u].append((v, e))
        adj_lists[v].append((u, e))
    adj = tuple(tuple(a) for a in adj_lists)
    terminals = tuple(index[tuple(n if i == t else 0 for i in range(k))] for t in range(k))
    graph = SimplexGraph(k, n, nodes, index, edges_t, edge_index, adj, terminals)
    assert len(nodes) == node_count(k, n) and len(edges_t) == edge_count(k, n)
    return graph


def boundary_nodes(g: SimplexGraph, pair: tuple[int, int]) -> tuple[int, ...]:
    """Nodes whose support lies inside the given 1-based terminal pair."""
    i, j = sorted(pair)
    if not (1 <= i < j <= g.k):
        raise ValueError(f"not a terminal pair: {pair}")
    keep = {i, j}
    return tuple(u for u, p in enumerate(g.nodes) if set(support(p)) <= keep)


def boundary_edges(g: SimplexGraph, pair: tuple[int, int]) -> tuple[int, ...]:
    """Edge indices of the boundary line between two terminals, ordered from
    terminal min(pair) toward max(pair)."""
    i, j = sorted(pair)
    line = boundary_nodes(g, (i, j))
    # Order line nodes by decreasing i-coordinate, then read off consecutive edges.
    ordered = sorted(line, key=lambda u: -g.nodes[u][i - 1])
    out = []
    for a, b in zip(ordered, ordered[1:]):
        e = g.edge_between(a, b)
        assert e is not None
        out.append(e)
    return tuple(out)


def boundary_sets(g: SimplexGraph) -> dict[tuple[int, int], tuple[tuple[int, ...], tuple[int, ...]]]:
    """All boundary lines: pair -> (node indices, edge indices)."""
    return {
        (i, j): (boundary_nodes(g, (i, j)), boundary_edges(g, (i, j)))
        for i, j in combinations(range(1, g.k + 1), 2)
    }


def parallel_line(g: SimplexGraph, pair: tuple[int, int], t: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Line parallel to a boundary of a three-terminal graph.

    For the pair {i, j} with opposite terminal m, returns the nodes with
    x_m = n - t and the edges internal to that line.  t ranges over 0..n;
    t = 0 is the single opposite terminal and t = n is the boundary line
    itself.
    """
    if g.k != 3:
        raise ValueError("parallel lines are defined on three-terminal graphs")
    if not 0 <= t <= g.n:
        raise ValueError(f"line offset out of range: {t}")
    i, j = sorted(pair)
    (m,) = set(range(1, 4)) - {i, j}
    level = g.n - t
    nodes = tuple(u for u, p in enumerate(g.nodes) if p[m - 1] == level)
    ordered = sorted(nodes, key=lambda u: -g.nodes[u][i - 1])
    edges = []
    for a, b in zip(ordered, ordered[1:]):
        e = g.edge_between(a, b)
        assert e is not None
        edges.append(e)
    return nodes, tuple(edges)


@lru_cache(maxsize=None)
def face_subgraph(g_key: tuple[int, int], coords: tuple[int, ...]) -> tuple[SimplexGraph, tuple[int, ...]]:
    """Sub-simplex induced by the nodes supported on the given coordinates.

    Keyed by (k, n) so results share the build_graph cache.  Returns the face
    as a standalone graph (on len(coords) coordinates) plus to_parent, where
    to_parent[face node index] = parent node index.  Face node order is the
    face graph's own colex order.
    """
    k, n = g_key
    parent = build_graph(k, n)
    coords = tuple(sorted(coords))
    if len(coords) < 2 or any(not 1 <= c <= k for c in coords) or len(set(coords)) != len(coords):
        raise ValueError(f"bad coordinate subset: {coords}")
    sub = build_graph(len(coords), n)
    to_parent = []
    for p in sub.nodes:
        q = [0] * k
        for value, c in zip(p, coords):
            q[c - 1] = value
        to_parent.append(parent.index[tuple(q)])
    return sub, tuple(to_parent)


def face_of(g: SimplexGraph, coords: tuple[int, ...]) -> tuple[SimplexGraph, tuple[int, ...]]:
    return face_subgraph((g.k, g.n), tuple(coords))


@dataclass(frozen=True)
class RedRegions:
    """Three cycles of marked edges near the first three corners of a
    four-coordinate graph.

    For each m in {1,2,3}: nodes[m-1] holds the segment at x_m = (1-c)n on
    the x4 = 0 face together with the two boundary runs climbing from that
    level to the corner, edges[m-1] the simple cycle of length 3cn through
    those nodes, and closures[m-1] every face node with x_m >= (1-c)n.

    When cn >= 2 the subgraph induced by nodes[m-1] also contains two chords
    (segment interior to boundary run, one per side); those are not part of
    the cycle and are excluded, keeping the 3cn count exact.
    """

    c: Fraction
    nodes: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, ...], ...]
    closures: tuple[frozenset[int], ...]

    def all_edges(self) -> tuple[int, ...]:
        seen: set[int] = set()
        for group in self.edges:
            seen.update(group)
        return tuple(sorted(seen))


def red_regions(g: SimplexGraph, c: Fraction) -> RedRegions:
    """Mark the three corner cycles at cap depth c (c*n must be integral)."""
    if g.k != 4:
        raise ValueError("red regions live on four-terminal graphs")
    c = Fraction(c)
    if not 0 < c < Fraction(1, 2):
        raise ValueError(f"cap depth out of range: {c}")
    depth = c * g.n
    if depth.denominator != 1:
        raise ValueError(f"cap depth {c} is not integral at resolution {g.n}")
    depth = int(depth)
    if depth < 1:
        raise ValueError("cap depth must reach at least one lattice level")
    level = g.n - depth
    node_sets = []
    edge_sets = []
    closures = []
    for m in (1, 2, 3):
        others = sorted({1, 2, 3} - {m})
        members: set[int] = set()
        for u, p in enumerate(g.nodes):
            if p[3] != 0:
                continue
            if p[m - 1] == level:
                members.add(u)  # the full segment across the face
            elif p[m - 1] > level:
                # above the segment only the two boundary runs are marked
                if set(support(p)) <= {m, others[0]} or set(support(p)) <= {m, others[1]}:
                    members.add(u)
        def on_cycle(u: int, v: int) -> bool:
            p, q = g.nodes[u], g.nodes[v]
            if p[m - 1] == level and q[m - 1] == level:
                return True
            return any(
                set(support(p)) <= {m, j} and set(support(q)) <= {m, j}
                for j in others
            )

        cycle_edges = tuple(
            e
            for e, (u, v) in enumerate(g.edges)
            if u in members and v in members and on_cycle(u, v)
        )
        assert len(cycle_edges) == 3 * depth
        node_sets.append(frozenset(members))
        edge_sets.append(cycle_edges)
        closures.append(
            frozenset(
                u for u, p in enumerate(g.nodes) if p[3] == 0 and p[m - 1] >= level
            )
        )
    return RedRegions(c, tuple(node_sets), tuple(edge_sets), tuple(closures))
