"""Unit-simplex hypergraphs and admissible-labeling extremals.

The hypergraph on the level-n lattice has one k-node hyperedge per point of
the level-(n-1) lattice: the upward translate reaching that point's k unit
successors.  A labeling picks one of 1..k per node; it is admissible when
every node's label lies in its support.  The counting bounds below control
how many hyperedges an admissible (or near-admissible) labeling can keep
monochromatic, and hence how small a non-opposite cut-set can be.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial

from .cuts import CutLabeling, delta, is_non_opposite
from .errors import BudgetExceededError
from .lattice import simplex_points, support

DEFAULT_LABELING_BUDGET = 2_000_000


@dataclass(frozen=True, eq=False)
class SimplexHypergraph:
    k: int
    n: int
    nodes: tuple[tuple[int, ...], ...]
    index: dict[tuple[int, ...], int]
    hyperedges: tuple[tuple[int, ...], ...]


def build_hypergraph(k: int, n: int) -> SimplexHypergraph:
    """One hyperedge per level-(n-1) point: its k unit successors."""
    nodes = simplex_points(k, n)
    index = {p: i for i, p in enumerate(nodes)}
    bases = simplex_points(k, n - 1) if n >= 2 else ((0,) * k,)
    hyperedges = []
    for base in bases:
        members = []
        for i in range(k):
            lifted = list(base)
            lifted[i] += 1
            members.append(index[tuple(lifted)])
        hyperedges.append(tuple(members))
    h = SimplexHypergraph(k, n, nodes, index, tuple(hyperedges))
    assert len(h.hyperedges) == comb(n + k - 2, k - 1)
    return h


def is_admissible(h: SimplexHypergraph, labels: tuple[int, ...]) -> bool:
    """Every node labeled from its own support."""
    return all(h.nodes[v][l - 1] > 0 for v, l in enumerate(labels))


def count_monochromatic(h: SimplexHypergraph, labels: tuple[int, ...]) -> int:
    count = 0
    for members in h.hyperedges:
        first = labels[members[0]]
        if all(labels[v] == first for v in members[1:]):
            count += 1
    return count


def monochromatic_upper_bound(k: int, n: int) -> int:
    """Largest monochromatic count any admissible labeling can reach."""
    return comb(n + k - 3, k - 1)


def nonmonochromatic_lower_bound(k: int, n: int, beta: Fraction) -> Fraction:
    """Least non-monochromatic count when inadmissible labels sit on one face.

    beta normalizes the inadmissible-node count: a labeling with all
    inadmissible labels on the face opposite the last terminal and
    beta * (n+k-2)!/n! inadmissible nodes keeps at least
    (1/(k-2)! - beta) * (n+k-3)!/(n-1)! hyperedges non-monochromatic.
    """
    beta = Fraction(beta)
    cap = Fraction(1, factorial(k - 2))
    if not 0 <= beta <= cap:
        raise ValueError(f"face fraction {beta} outside [0, {cap}]")
    return (cap - beta) * (factorial(n + k - 3) // factorial(n - 1))


@dataclass(frozen=True)
class ExtremalReport:
    """Outcome of an exhaustive scan over a labeling family.

    max_monochromatic carries the family-wide maximum with its first witness
    in scan order.  In face-restricted mode, by_inadmissible maps each
    inadmissible-node count to (least non-monochromatic count, witness);
    otherwise it is None.
    """

    k: int
    n: int
    face_restricted: bool
    explored: int
    max_monochromatic: int
    witness: tuple[int, ...]
    by_inadmissible: dict[int, tuple[int, tuple[int, ...]]] | None


def exhaustive_extremal(
    k: int,
    n: int,
    face_restricted: bool = False,
    max_labelings: int = DEFAULT_LABELING_BUDGET,
) -> ExtremalReport:
    """Scan a full labeling family for extremal monochromatic counts.

    Plain mode scans every admissible labeling.  Face-restricted mode lets
    nodes on the face opposite the last terminal take any label (so the
    inadmissible labels sit only there) while the remaining nodes stay
    admissible.  Labelings are visited in lexicographic order over per-node
    choice lists; the scan refuses to start when the family size exceeds
    max_labelings.
    """
    h = build_hypergraph(k, n)
    choices: list[tuple[int, ...]] = []
    for p in h.nodes:
        if face_restricted and p[k - 1] == 0:
            choices.append(tuple(range(1, k + 1)))
        else:
            choices.append(tuple(support(p)))
    space = 1
    for c in choices:
        space *= len(c)
    if space > max_labelings:
        raise BudgetExceededError(
            f"{space} labelings exceed the budget of {max_labelings}"
        )
    total = len(h.hyperedges)
    best = -1
    witness: tuple[int, ...] = ()
    by_inadmissible: dict[int, tuple[int, tuple[int, ...]]] = {}
    explored = 0
    for labels in product(*choices):
        explored += 1
        mono = count_monochromatic(h, labels)
        if mono > best:
            best = mono
            witness = labels
        if face_restricted:
            bad = sum(1 for v, l in enumerate(labels) if h.nodes[v][l - 1] == 0)
            nonmono = total - mono
            cur = by_inadmissible.get(bad)
            if cur is None or nonmono < cur[0]:
                by_inadmissible[bad] = (nonmono, labels)
    return ExtremalReport(
        k=k,
        n=n,
        face_restricted=face_restricted,
        explored=explored,
        max_monochromatic=best,
        witness=witness,
        by_inadmissible=by_inadmissible if face_restricted else None,
    )


@dataclass(frozen=True)
class FloorCheck:
    alpha: Fraction
    lower_bound: Fraction
    cut_size: int
    ok: bool


def cut_size_floor(p: CutLabeling) -> FloorCheck:
    """Check a non-opposite cut against the face-census cut-size floor.

    alpha is the fraction of bottom-face nodes labeled 1, 2 or 3 out of the
    (n+1)(n+2) face slots; the cut-set must then contain at least
    3 * alpha * n * (n+1) edges.
    """
    g = p.graph
    if g.k != 4:
        raise ValueError("the cut-size floor is stated on four-terminal graphs")
    if not is_non_opposite(p):
        raise ValueError("the cut-size floor only applies to non-opposite cuts")
    n = g.n
    face_labeled = sum(
        1
        for node, point in enumerate(g.nodes)
        if point[3] == 0 and p.labels[node] <= 3
    )
    alpha = Fraction(face_labeled, (n + 1) * (n + 2))
    lower = 3 * alpha * n * (n + 1)
    size = len(delta(p))
    return FloorCheck(alpha=alpha, lower_bound=lower, cut_size=size, ok=size >= lower)
