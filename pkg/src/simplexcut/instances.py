"""Weighted gap instances on simplex lattice graphs.

All weights are exact rationals.  A WeightMap is sparse: edges absent from
the mapping weigh zero, and explicit zeros are dropped on construction so
equality is structural.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .lattice import SimplexGraph, boundary_edges, build_graph, face_of, red_regions

COMPONENT_NAMES = {1: "face", 2: "lines", 3: "cycles", 4: "uniform"}


@dataclass(frozen=True, eq=False)
class WeightMap:
    """Nonnegative rational edge weights over a fixed graph."""

    graph: SimplexGraph
    weights: dict[int, Fraction]

    def __post_init__(self):
        cleaned = {}
        for e, w in self.weights.items():
            w = Fraction(w)
            if w < 0:
                raise ValueError(f"negative weight on edge {e}")
            if not 0 <= e < len(self.graph.edges):
                raise ValueError(f"unknown edge index {e}")
            if w:
                cleaned[int(e)] = w
        object.__setattr__(self, "weights", cleaned)

    def weight(self, edge: int) -> Fraction:
        return self.weights.get(edge, Fraction(0))

    def total(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))

    def items(self) -> list[tuple[int, Fraction]]:
        """(edge index, weight) pairs in edge order."""
        return sorted(self.weights.items())

    def scaled(self, factor: Fraction) -> "WeightMap":
        factor = Fraction(factor)
        return WeightMap(self.graph, {e: w * factor for e, w in self.weights.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightMap):
            return NotImplemented
        return (
            self.graph.k == other.graph.k
            and self.graph.n == other.graph.n
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.graph.k, self.graph.n, tuple(sorted(self.weights.items()))))


def total_weight(w: WeightMap) -> Fraction:
    return w.total()


def combine_maps(parts: list[tuple[Fraction, WeightMap]]) -> WeightMap:
    """Nonnegative linear combination of weight maps on one graph."""
    if not parts:
        raise ValueError("nothing to combine")
    graph = parts[0][1].graph
    acc: dict[int, Fraction] = {}
    for lam, wm in parts:
        if wm.graph is not graph:
            raise ValueError("weight maps live on different graphs")
        lam = Fraction(lam)
        for e, w in wm.weights.items():
            acc[e] = acc.get(e, Fraction(0)) + lam * w
    return WeightMap(graph, acc)


@dataclass(frozen=True)
class GapParams:
    """Mixing weights for the four components plus the corner-cap depth c.

    The lambdas must be nonnegative and sum to one; c must lie strictly
    between 0 and 1/2.  All fields are exact rationals.
    """

    lam1: Fraction
    lam2: Fraction
    lam3: Fraction
    lam4: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("lam1", "lam2", "lam3", "lam4", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if any(l < 0 for l in self.lams()):
            raise ValueError("mixing weights must be nonnegative")
        if sum(self.lams()) != 1:
            raise ValueError(f"mixing weights sum to {sum(self.lams())}, expected 1")
        if not 0 < self.c < Fraction(1, 2):
            raise ValueError(f"cap depth out of range: {self.c}")

    def lams(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.lam1, self.lam2, self.lam3, self.lam4)

    @staticmethod
    def tuned(c: Fraction | None = None) -> "GapParams":
        """The tuned optimum produced by optimize_params' default search,
        frozen to six decimal places for reproducibility.  Pass c to reuse
        the mixture at another cap depth (e.g. to make c*n integral)."""
        return GapParams(
            Fraction(751652, 10**6),
            Fraction(147852, 10**6),
            Fraction(275, 10**6),
            Fraction(100221, 10**6),
            Fraction(74125, 10**6) if c is None else Fraction(c),
        )


def build_base_triangle(n: int) -> WeightMap:
    """The three-terminal base instance of total weight exactly n.

    Requires n divisible by 3.  Writing rho = 3/(5n) and m = n/3:

    * boundary lines carry rho * max(m-d+1, d-2m, 1) on the d-th edge from
      either end, so the first third descends from m*rho to rho, the middle
      third is flat at rho, and the last third ascends back;
    * a non-boundary edge weighs 0 when its unchanged coordinate is at least
      2m on both endpoints (it then runs parallel to the far side inside a
      corner triangle), and rho otherwise.

    Every non-opposite cut of this instance costs at least 1.2 - 1/n.
    """
    if n % 3 != 0 or n < 3:
        raise ValueError("base triangle needs a resolution divisible by 3")
    g = build_graph(3, n)
    m = n // 3
    rho = Fraction(3, 5 * n)
    weights: dict[int, Fraction] = {}
    boundary: dict[int, int] = {}  # edge index -> position d from the lower terminal
    for pair in combinations((1, 2, 3), 2):
        for d, e in enumerate(boundary_edges(g, pair), start=1):
            boundary[e] = d
    for e, (u, v) in enumerate(g.edges):
        if e in boundary:
            d = boundary[e]
            weights[e] = rho * max(m - d + 1, d - 2 * m, 1)
            continue
        p, q = g.nodes[u], g.nodes[v]
        fixed = next(i for i in range(3) if p[i] == q[i])
        if p[fixed] >= 2 * m:
            continue  # zero-weight: parallel run inside a corner triangle
        weights[e] = rho
    wm = WeightMap(g, weights)
    assert wm.total() == n
    return wm


def build_component(index: int, g: SimplexGraph, c: Fraction | None = None) -> WeightMap:
    """One of the four unscaled components on a four-terminal graph.

    1  the base triangle embedded on the x4 = 0 face
    2  weight 1/3 on each edge of the three face boundary lines
    3  weight 1/(9c) on each corner-cycle edge (requires c)
    4  weight 1/n^2 on every edge

    Components 1..3 total exactly n; component 4 totals n + 3 + 2/n.
    """
    if g.k != 4:
        raise ValueError("components are defined on four-terminal graphs")
    n = g.n
    if index == 1:
        base = build_base_triangle(n)
        sub, to_parent = face_of(g, (1, 2, 3))
        weights = {}
        for e3, w in base.weights.items():
            a, b = sub.edges[e3]
            e4 = g.edge_between(to_parent[a], to_parent[b])
            assert e4 is not None
            weights[e4] = w
        return WeightMap(g, weights)
    if index == 2:
        third = Fraction(1, 3)
        weights = {}
        for pair in combinations((1, 2, 3), 2):
            for e in boundary_edges(g, pair):
                weights[e] = third
        return WeightMap(g, weights)
    if index == 3:
        if c is None:
            raise ValueError("the cycles component needs a cap depth")
        regions = red_regions(g, c)
        per_edge = Fraction(1) / (9 * Fraction(c))
        return WeightMap(g, {e: per_edge for e in regions.all_edges()})
    if index == 4:
        per_edge = Fraction(1, n * n)
        return WeightMap(g, {e: per_edge for e in range(len(g.edges))})
    raise ValueError(f"no component {index}")


def combine(params: GapParams, g: SimplexGraph) -> WeightMap:
    """Convex combination of the four components at the given parameters.

    Components with zero mixing weight are skipped; in particular c is only
    instantiated (and its integrality at this resolution enforced) when
    lam3 > 0.
    """
    parts = []
    for i, lam in enumerate(params.lams(), start=1):
        if lam == 0:
            continue
        parts.append((lam, build_component(i, g, c=params.c if i == 3 else None)))
    return combine_maps(parts)
