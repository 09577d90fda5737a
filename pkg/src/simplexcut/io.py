"""Instance and cut serialization: JSON and a DIMACS-like text format.

Weights always serialize as "p/q" with q > 0 and gcd(p, q) = 1, so both
formats round-trip exactly.  Node indices follow the colexicographic
order contract of the lattice module; the DIMACS-like format carries no
node table and recovers n by inverting the node count for the given k.
Zero-weight edges are omitted unless explicitly included.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import Decimal, localcontext, ROUND_HALF_EVEN
from fractions import Fraction
from math import comb

from .cuts import CutLabeling
from .instances import WeightMap
from .lattice import build_graph

INSTANCE_FORMAT = "simplexcut-instance"
CUT_FORMAT = "simplexcut-cut"
FORMAT_VERSION = 1


def render_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Accept "p/q", integer, or decimal literals; decimals are exact."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc
    return value


def render_decimal(x: Fraction, places: int = 6) -> str:
    """Half-even decimal rendering for human-readable columns."""
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = 60
        d = Decimal(x.numerator) / Decimal(x.denominator)
        return str(d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))


@dataclass(frozen=True)
class ParsedInstance:
    weights: WeightMap
    tag: str | None = None
    c: Fraction | None = None
    lam: tuple[Fraction, ...] | None = None


def _edge_rows(w: WeightMap, include_zero_edges: bool) -> list[tuple[int, int, Fraction]]:
    g = w.graph
    rows = []
    for e, (u, v) in enumerate(g.edges):
        wt = w.weight(e)
        if wt == 0 and not include_zero_edges:
            continue
        rows.append((u, v, wt))
    return rows


def emit_instance_json(
    w: WeightMap,
    tag: str | None = None,
    c: Fraction | None = None,
    lam: tuple[Fraction, ...] | None = None,
    include_zero_edges: bool = False,
) -> str:
    g = w.graph
    doc = {
        "format": INSTANCE_FORMAT,
        "version": FORMAT_VERSION,
        "k": g.k,
        "n": g.n,
        "tag": tag,
        "c": render_rational(c) if c is not None else None,
        "lambda": [render_rational(x) for x in lam] if lam is not None else None,
        "terminals": list(g.terminals),
        "nodes": [list(p) for p in g.nodes],
        "edges": [[u, v, render_rational(wt)] for u, v, wt in _edge_rows(w, include_zero_edges)],
    }
    return json.dumps(doc, indent=2) + "\n"


def emit_instance_dimacs(
    w: WeightMap,
    tag: str | None = None,
    c: Fraction | None = None,
    lam: tuple[Fraction, ...] | None = None,
    include_zero_edges: bool = False,
) -> str:
    g = w.graph
    rows = _edge_rows(w, include_zero_edges)
    lines = [f"c {INSTANCE_FORMAT} version {FORMAT_VERSION}"]
    if tag is not None:
        lines.append(f"c tag {tag}")
    if c is not None:
        lines.append(f"c c {render_rational(c)}")
    if lam is not None:
        lines.append("c lambda " + " ".join(render_rational(x) for x in lam))
    lines.append(f"p mwc {len(g.nodes)} {len(rows)} {g.k}")
    for i, t in enumerate(g.terminals, start=1):
        lines.append(f"t {t} {i}")
    for u, v, wt in rows:
        lines.append(f"e {u} {v} {render_rational(wt)}")
    return "\n".join(lines) + "\n"


def _invert_node_count(k: int, count: int) -> int:
    n = 0
    while True:
        size = comb(n + k - 1, k - 1)
        if size == count:
            return n
        if size > count:
            raise ValueError(f"no lattice with k={k} has {count} nodes")
        n += 1


def _weights_from_pairs(
    g, pairs: list[tuple[int, int, Fraction]]
) -> WeightMap:
    weights: dict[int, Fraction] = {}
    for u, v, wt in pairs:
        if not (0 <= u < len(g.nodes) and 0 <= v < len(g.nodes)):
            raise ValueError(f"edge endpoint out of range: ({u}, {v})")
        e = g.edge_between(u, v)
        if e is None:
            raise ValueError(f"nodes {u} and {v} are not lattice neighbors")
        if e in weights:
            raise ValueError(f"duplicate edge ({u}, {v})")
        weights[e] = wt
    return WeightMap(g, weights)


def parse_instance_json(text: str) -> ParsedInstance:
    doc = json.loads(text)
    if doc.get("format") != INSTANCE_FORMAT:
        raise ValueError("not an instance document")
    if doc.get("version") != FORMAT_VERSION:
        raise ValueError(f"unsupported format version: {doc.get('version')!r}")
    k, n = doc["k"], doc["n"]
    g = build_graph(k, n)
    nodes = [tuple(p) for p in doc["nodes"]]
    if nodes != list(g.nodes):
        raise ValueError("node table violates the colexicographic order contract")
    if list(doc["terminals"]) != list(g.terminals):
        raise ValueError("terminal list does not match the lattice")
    pairs = [(u, v, parse_rational(s)) for u, v, s in doc["edges"]]
    for _, _, wt in pairs:
        if wt < 0:
            raise ValueError("negative edge weight")
    w = _weights_from_pairs(g, pairs)
    lam = doc.get("lambda")
    return ParsedInstance(
        weights=w,
        tag=doc.get("tag"),
        c=parse_rational(doc["c"]) if doc.get("c") is not None else None,
        lam=tuple(parse_rational(s) for s in lam) if lam is not None else None,
    )


def parse_instance_dimacs(text: str) -> ParsedInstance:
    tag = None
    c_value: Fraction | None = None
    lam: tuple[Fraction, ...] | None = None
    header = None
    terminal_rows: list[tuple[int, int]] = []
    edge_rows: list[tuple[int, int, Fraction]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        kind, _, rest = line.partition(" ")
        fields = rest.split()
        if kind == "c":
            if fields[:1] == ["tag"] and len(fields) == 2:
                tag = fields[1]
            elif fields[:1] == ["c"] and len(fields) == 2:
                c_value = parse_rational(fields[1])
            elif fields[:1] == ["lambda"]:
                lam = tuple(parse_rational(f) for f in fields[1:])
        elif kind == "p":
            if header is not None:
                raise ValueError("multiple problem lines")
            if len(fields) != 4 or fields[0] != "mwc":
                raise ValueError(f"malformed problem line: {line!r}")
            header = tuple(int(f) for f in fields[1:])
        elif kind == "t":
            if len(fields) != 2:
                raise ValueError(f"malformed terminal line: {line!r}")
            terminal_rows.append((int(fields[0]), int(fields[1])))
        elif kind == "e":
            if len(fields) != 3:
                raise ValueError(f"malformed edge line: {line!r}")
            edge_rows.append((int(fields[0]), int(fields[1]), parse_rational(fields[2])))
        else:
            raise ValueError(f"unknown line kind: {kind!r}")
    if header is None:
        raise ValueError("missing problem line")
    node_count, edge_count, k = header
    n = _invert_node_count(k, node_count)
    g = build_graph(k, n)
    if len(edge_rows) != edge_count:
        raise ValueError(
            f"problem line announces {edge_count} edges, found {len(edge_rows)}"
        )
    expected_terminals = [(t, i) for i, t in enumerate(g.terminals, start=1)]
    if sorted(terminal_rows) != sorted(expected_terminals):
        raise ValueError("terminal lines do not match the lattice")
    for _, _, wt in edge_rows:
        if wt < 0:
            raise ValueError("negative edge weight")
    w = _weights_from_pairs(g, edge_rows)
    return ParsedInstance(weights=w, tag=tag, c=c_value, lam=lam)


def parse_instance(text: str) -> ParsedInstance:
    """Sniff the format: JSON documents start with a brace."""
    if text.lstrip().startswith("{"):
        return parse_instance_json(text)
    return parse_instance_dimacs(text)


def emit_cut(p: CutLabeling) -> str:
    g = p.graph
    doc = {
        "format": CUT_FORMAT,
        "version": FORMAT_VERSION,
        "k": g.k,
        "n": g.n,
        "labels": list(p.labels),
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_cut(text: str) -> CutLabeling:
    doc = json.loads(text)
    if doc.get("format") != CUT_FORMAT:
        raise ValueError("not a cut document")
    if doc.get("version") != FORMAT_VERSION:
        raise ValueError(f"unsupported format version: {doc.get('version')!r}")
    g = build_graph(doc["k"], doc["n"])
    return CutLabeling(g, tuple(doc["labels"]))
