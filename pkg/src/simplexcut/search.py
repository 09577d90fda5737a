"""Exact search over non-opposite cuts, and exact terminal-to-face min cut.

Both search modes certify global minima over the non-opposite cut class:
exhaustive scans the full mixed-radix labeling space, branch and bound
assigns nodes in decreasing incident-weight order and prunes with the
weight of the already-bichromatic edges.  All arithmetic is integer after
clearing denominators, so reported costs are exact rationals.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm

from .bounds import nonopposite_cost_floor
from .cuts import CutLabeling, cost, isolate_terminals, midlines, midlines_extended
from .errors import BudgetExceededError
from .instances import GapParams, WeightMap
from .lattice import SimplexGraph, support

DEFAULT_LABELING_BUDGET = 2_000_000

SEARCH_MODES = ("exhaustive", "branch_and_bound")


@dataclass(frozen=True)
class SearchBudget:
    max_labelings: int = DEFAULT_LABELING_BUDGET
    mode: str = "branch_and_bound"

    def __post_init__(self):
        if self.max_labelings < 1:
            raise ValueError("budget must allow at least one labeling")
        if self.mode not in SEARCH_MODES:
            raise ValueError(f"unknown search mode: {self.mode!r}")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a cut-minimization run.

    explored counts complete labelings evaluated in exhaustive mode and
    label assignments (search-tree nodes) in branch-and-bound mode.  When
    proven_optimal is False the budget ran out and min_cost/argmin only
    describe the best cut seen so far.
    """

    min_cost: Fraction
    argmin: CutLabeling
    explored: int
    proven_optimal: bool


def _label_choices(g: SimplexGraph) -> list[tuple[int, ...]]:
    """Per-node admissible labels: pins for terminals, support plus the
    auxiliary label elsewhere."""
    choices: list[tuple[int, ...]] = []
    terminal_of = {t: i for i, t in enumerate(g.terminals, start=1)}
    for node, p in enumerate(g.nodes):
        if node in terminal_of:
            choices.append((terminal_of[node],))
        else:
            choices.append(tuple(support(p)) + (g.k + 1,))
    return choices


def labeling_space_size(g: SimplexGraph) -> int:
    size = 1
    for c in _label_choices(g):
        size *= len(c)
    return size


def enumerate_non_opposite(
    g: SimplexGraph,
    visitor=None,
    max_labelings: int = DEFAULT_LABELING_BUDGET,
) -> int:
    """Visit every non-opposite cut once, in mixed-radix node order.

    Refuses to start when the space exceeds max_labelings.  Returns the
    visit count.
    """
    choices = _label_choices(g)
    space = labeling_space_size(g)
    if space > max_labelings:
        raise BudgetExceededError(
            f"{space} non-opposite cuts exceed the budget of {max_labelings}"
        )
    count = 0
    for labels in product(*choices):
        count += 1
        if visitor is not None:
            visitor(CutLabeling(g, labels))
    return count


def _seed_cuts(g: SimplexGraph) -> list[CutLabeling]:
    seeds = [isolate_terminals(g)]
    if g.k == 3:
        seeds.append(midlines(g))
    elif g.k == 4:
        seeds.append(midlines_extended(g))
    return seeds


def _exhaustive_min(w: WeightMap, budget: SearchBudget) -> SearchResult:
    g = w.graph
    choices = _label_choices(g)
    weighted = [(g.edges[e][0], g.edges[e][1], wt) for e, wt in sorted(w.weights.items())]
    best_cost = None
    best_labels = None
    explored = 0
    complete = True
    for labels in product(*choices):
        if explored >= budget.max_labelings:
            complete = False
            break
        explored += 1
        c = Fraction(0)
        for u, v, wt in weighted:
            if labels[u] != labels[v]:
                c += wt
        if best_cost is None or c < best_cost:
            best_cost = c
            best_labels = labels
    assert best_labels is not None
    return SearchResult(
        min_cost=best_cost,
        argmin=CutLabeling(g, best_labels),
        explored=explored,
        proven_optimal=complete,
    )


def _branch_and_bound_min(w: WeightMap, budget: SearchBudget) -> SearchResult:
    g = w.graph
    nnodes = len(g.nodes)
    scale = lcm(*[wt.denominator for wt in w.weights.values()], 1)
    weight_of = {e: int(wt * scale) for e, wt in w.weights.items()}

    incident = [0] * nnodes
    for e, wt in weight_of.items():
        u, v = g.edges[e]
        incident[u] += wt
        incident[v] += wt
    order = sorted(range(nnodes), key=lambda v: (-incident[v], v))
    rank = {node: r for r, node in enumerate(order)}

    choices = _label_choices(g)
    rank_choices = [choices[node] for node in order]
    # for each rank, weighted edges back to already-assigned nodes
    back: list[list[tuple[int, int]]] = [[] for _ in range(nnodes)]
    for e, wt in weight_of.items():
        u, v = g.edges[e]
        lo, hi = (u, v) if rank[u] < rank[v] else (v, u)
        back[rank[hi]].append((lo, wt))

    label_of = [0] * nnodes  # indexed by node id
    best_cut = min(_seed_cuts(g), key=lambda p: cost(p, w))
    incumbent = int(cost(best_cut, w) * scale)
    best_labels = best_cut.labels

    choice_idx = [0] * nnodes
    partial = [0] * (nnodes + 1)
    explored = 0
    complete = True
    r = 0
    while r >= 0:
        ci = choice_idx[r]
        if ci >= len(rank_choices[r]):
            choice_idx[r] = 0
            r -= 1
            continue
        choice_idx[r] = ci + 1
        if explored >= budget.max_labelings:
            complete = False
            break
        explored += 1
        label = rank_choices[r][ci]
        node = order[r]
        c = partial[r]
        for u, wt in back[r]:
            if label_of[u] != label:
                c += wt
        if c >= incumbent:
            continue
        label_of[node] = label
        if r == nnodes - 1:
            incumbent = c
            best_labels = tuple(label_of)
            continue
        partial[r + 1] = c
        r += 1
    return SearchResult(
        min_cost=Fraction(incumbent, scale),
        argmin=CutLabeling(g, best_labels),
        explored=explored,
        proven_optimal=complete,
    )


def min_non_opposite_cost(w: WeightMap, budget: SearchBudget | None = None) -> SearchResult:
    """Exact minimum cost over all non-opposite cuts of the weighted graph.

    The result is the global minimum whenever proven_optimal is set; the
    two modes agree on it exactly.  Ties for the argmin resolve to the
    first optimum in enumeration order (exhaustive mode) or to the first
    strict improvement over the seeded incumbent (branch and bound).
    """
    if budget is None:
        budget = SearchBudget()
    if budget.mode == "exhaustive":
        return _exhaustive_min(w, budget)
    return _branch_and_bound_min(w, budget)


def min_terminal_face_cut(w: WeightMap, terminal: int) -> Fraction:
    """Exact min-cut weight separating one terminal from its opposite side.

    Runs shortest-augmenting-path max-flow with integer-scaled capacities;
    the opposite boundary line drains into a super-sink through capacity
    larger than the total weight.
    """
    g = w.graph
    if g.k != 3:
        raise ValueError("terminal-to-face cuts are defined on three-terminal graphs")
    if terminal not in (1, 2, 3):
        raise ValueError(f"no terminal {terminal}")
    others = {1, 2, 3} - {terminal}
    source = g.terminals[terminal - 1]
    sink_side = [
        node
        for node, p in enumerate(g.nodes)
        if set(support(p)) <= others
    ]

    scale = lcm(*[wt.denominator for wt in w.weights.values()], 1)
    total = sum(int(wt * scale) for wt in w.weights.values())
    inf = total + 1
    nnodes = len(g.nodes)
    sink = nnodes
    capacity: list[dict[int, int]] = [dict() for _ in range(nnodes + 1)]
    for e, wt in w.weights.items():
        u, v = g.edges[e]
        s = int(wt * scale)
        capacity[u][v] = capacity[u].get(v, 0) + s
        capacity[v][u] = capacity[v].get(u, 0) + s
    for node in sink_side:
        capacity[node][sink] = inf

    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for v, cap in capacity[u].items():
                if cap > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if sink not in parent:
            break
        bottleneck = inf
        v = sink
        while v != source:
            u = parent[v]
            bottleneck = min(bottleneck, capacity[u][v])
            v = u
        v = sink
        while v != source:
            u = parent[v]
            capacity[u][v] -= bottleneck
            capacity[v][u] = capacity[v].get(u, 0) + bottleneck
            v = u
        flow += bottleneck
    return Fraction(flow, scale)


def verify_floor(params: GapParams, result: SearchResult) -> bool:
    """Check a certified search minimum against the two-term cost floor."""
    if not result.proven_optimal:
        raise ValueError("the floor check needs a proven-optimal search result")
    n = result.argmin.graph.n
    floor = nonopposite_cost_floor(params, n=n)
    return result.min_cost >= floor.bound
