"""Cut labelings on simplex lattice graphs.

A cut assigns every node a label in 1..k+1 with each terminal keeping its
own index.  Label k+1 is the auxiliary label: it never matches a terminal,
so a node carrying it is separated from all of them.  The cut-set is the
set of edges whose endpoints disagree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .instances import WeightMap
from .lattice import SimplexGraph, boundary_edges, face_of, support


@dataclass(frozen=True, eq=False)
class CutLabeling:
    graph: SimplexGraph
    labels: tuple[int, ...]

    def __post_init__(self):
        g = self.graph
        labels = tuple(int(l) for l in self.labels)
        if len(labels) != len(g.nodes):
            raise ValueError(
                f"{len(labels)} labels for {len(g.nodes)} nodes"
            )
        if any(not 1 <= l <= g.k + 1 for l in labels):
            raise ValueError(f"labels must lie in 1..{g.k + 1}")
        for i, t in enumerate(g.terminals, start=1):
            if labels[t] != i:
                raise ValueError(f"terminal {i} carries label {labels[t]}")
        object.__setattr__(self, "labels", labels)

    def label(self, node: int) -> int:
        return self.labels[node]

    def auxiliary_count(self) -> int:
        aux = self.graph.k + 1
        return sum(1 for l in self.labels if l == aux)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CutLabeling):
            return NotImplemented
        return self.graph is other.graph and self.labels == other.labels

    def __hash__(self):
        return hash((id(self.graph), self.labels))


def delta(p: CutLabeling) -> tuple[int, ...]:
    """Indices of the edges whose endpoints carry different labels."""
    labels = p.labels
    return tuple(
        e for e, (u, v) in enumerate(p.graph.edges) if labels[u] != labels[v]
    )


def cost(p: CutLabeling, w: WeightMap) -> Fraction:
    """Total weight of the cut-set, exact."""
    if p.graph is not w.graph:
        raise ValueError("cut and weights live on different graphs")
    labels = p.labels
    edges = p.graph.edges
    return sum(
        (wt for e, wt in w.weights.items() if labels[edges[e][0]] != labels[edges[e][1]]),
        Fraction(0),
    )


def is_non_opposite(p: CutLabeling) -> bool:
    """Every node is labeled from its own support or with the auxiliary label."""
    aux = p.graph.k + 1
    for node, point in enumerate(p.graph.nodes):
        l = p.labels[node]
        if l != aux and point[l - 1] == 0:
            return False
    return True


def is_fragmenting(p: CutLabeling) -> bool:
    """True when every boundary line carries at least two cut edges.

    Defined on three-terminal graphs (the face a four-terminal cut is
    restricted to).
    """
    if p.graph.k != 3:
        raise ValueError("fragmenting is a predicate on three-terminal graphs")
    labels = p.labels
    for pair in combinations((1, 2, 3), 2):
        crossings = 0
        for e in boundary_edges(p.graph, pair):
            u, v = p.graph.edges[e]
            if labels[u] != labels[v]:
                crossings += 1
                if crossings == 2:
                    break
        if crossings < 2:
            return False
    return True


def restrict_to_face(p: CutLabeling) -> CutLabeling:
    """Restriction of a four-terminal cut to the fourth terminal's opposite face.

    Labels 1..3 pass through and the auxiliary 5 becomes the face's
    auxiliary 4.  A face node labeled 4 (the off-face terminal) makes the
    restriction undefined; that never happens for a non-opposite cut.
    """
    if p.graph.k != 4:
        raise ValueError("restriction starts from a four-terminal graph")
    sub, to_parent = face_of(p.graph, (1, 2, 3))
    labels = []
    for node in range(len(sub.nodes)):
        l = p.labels[to_parent[node]]
        if l == 4:
            raise ValueError(
                f"face node {to_parent[node]} carries the off-face terminal label"
            )
        labels.append(4 if l == 5 else l)
    return CutLabeling(sub, tuple(labels))


def canonicalize(p: CutLabeling) -> CutLabeling:
    """Relabel by terminal reachability in the graph minus the cut-set.

    Every node reachable from terminal i through uncut edges gets label i;
    nodes reachable from no terminal get the auxiliary label.  The new
    cut-set is a subset of the old one, so the cost never increases under
    any weighting, the auxiliary count never decreases, and applying the
    operation twice equals applying it once.
    """
    g = p.graph
    labels = p.labels
    relabel = [g.k + 1] * len(g.nodes)
    for i, t in enumerate(g.terminals, start=1):
        if relabel[t] != g.k + 1:
            continue
        relabel[t] = i
        queue = deque([t])
        while queue:
            u = queue.popleft()
            for v, _e in g.adj[u]:
                if labels[v] == labels[u] and relabel[v] == g.k + 1:
                    relabel[v] = i
                    queue.append(v)
    return CutLabeling(g, tuple(relabel))


def midlines(g: SimplexGraph) -> CutLabeling:
    """Three-terminal cut along the half-coordinate lines.

    A node goes to 1 when its first coordinate reaches 1/2, else to 2 when
    its second does, else to 3.  Non-opposite and non-fragmenting: each
    boundary line is crossed exactly once.
    """
    if g.k != 3:
        raise ValueError("midlines is a three-terminal cut")
    n = g.n
    labels = tuple(
        1 if 2 * p[0] >= n else 2 if 2 * p[1] >= n else 3 for p in g.nodes
    )
    return CutLabeling(g, labels)


def midlines_extended(g: SimplexGraph) -> CutLabeling:
    """The midlines cut on the bottom face, label 4 everywhere above it."""
    if g.k != 4:
        raise ValueError("the extension lives on a four-terminal graph")
    n = g.n
    labels = tuple(
        4 if p[3] > 0 else 1 if 2 * p[0] >= n else 2 if 2 * p[1] >= n else 3
        for p in g.nodes
    )
    return CutLabeling(g, labels)


def isolate_terminals(g: SimplexGraph) -> CutLabeling:
    """Terminals keep their labels; every other node gets the auxiliary label."""
    labels = [g.k + 1] * len(g.nodes)
    for i, t in enumerate(g.terminals, start=1):
        labels[t] = i
    return CutLabeling(g, tuple(labels))


def corner_caps(g: SimplexGraph, c: Fraction) -> CutLabeling:
    """Label the three corner caps of the bottom face, isolate the rest.

    The fourth terminal keeps label 4, bottom-face nodes with x_i >= 1-c go
    to i, and everything else gets the auxiliary label 5.  Caps are disjoint
    because c < 1/2.
    """
    if g.k != 4:
        raise ValueError("corner caps live on a four-terminal graph")
    c = Fraction(c)
    if not 0 < c < Fraction(1, 2):
        raise ValueError(f"cap depth out of range: {c}")
    depth = c * g.n
    if depth.denominator != 1:
        raise ValueError(f"cap depth {c} is not integral at resolution {g.n}")
    level = g.n - int(depth)
    labels = []
    for node, p in enumerate(g.nodes):
        if node == g.terminals[3]:
            labels.append(4)
        elif p[3] == 0 and max(p[:3]) >= level:
            labels.append(1 + max(range(3), key=lambda i: p[i]))
        else:
            labels.append(5)
    return CutLabeling(g, tuple(labels))


def terminal_ball(g: SimplexGraph, alpha: Fraction) -> CutLabeling:
    """Label the radius-alpha ball around the first terminal with 1.

    Distance is graph distance, which equals n minus the first coordinate.
    The other terminals keep their labels and the rest of the graph gets
    the auxiliary label.  alpha*n must be integral.
    """
    if g.k != 4:
        raise ValueError("the ball cut lives on a four-terminal graph")
    alpha = Fraction(alpha)
    if not 0 <= alpha <= Fraction(1, 2):
        raise ValueError(f"ball radius fraction out of range: {alpha}")
    radius = alpha * g.n
    if radius.denominator != 1:
        raise ValueError(f"radius {alpha} is not integral at resolution {g.n}")
    floor = g.n - int(radius)
    labels = []
    for node, p in enumerate(g.nodes):
        if p[0] >= floor:
            labels.append(1)
        elif node in g.terminals:
            labels.append(1 + g.terminals.index(node))
        else:
            labels.append(5)
    return CutLabeling(g, tuple(labels))


NAMED_CUTS = (
    "midlines",
    "midlines-ext",
    "isolate-terminals",
    "corner-caps",
    "terminal-ball",
)


def named_cut(
    name: str,
    g: SimplexGraph,
    c: Fraction | None = None,
    alpha: Fraction | None = None,
) -> CutLabeling:
    """Construct one of the library cuts by name."""
    if name == "midlines":
        return midlines(g)
    if name == "midlines-ext":
        return midlines_extended(g)
    if name == "isolate-terminals":
        return isolate_terminals(g)
    if name == "corner-caps":
        if c is None:
            raise ValueError("corner-caps needs a cap depth")
        return corner_caps(g, c)
    if name == "terminal-ball":
        if alpha is None:
            raise ValueError("terminal-ball needs a radius fraction")
        return terminal_ball(g, alpha)
    raise ValueError(f"unknown cut name: {name!r} (choose from {', '.join(NAMED_CUTS)})")
