"""Serialization: exact rationals, JSON and DIMACS-style instance files."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simplexcut import (
    GapParams,
    build_base_triangle,
    build_component,
    build_graph,
    combine,
    emit_cut,
    emit_instance_dimacs,
    emit_instance_json,
    isolate_terminals,
    midlines,
    parse_cut,
    parse_instance,
    parse_rational,
    render_decimal,
    render_rational,
)


def _sample_instances():
    g8 = build_graph(4, 8)
    return [
        ("triangle", None, None, build_base_triangle(9)),
        ("lines", None, None, build_component(2, build_graph(4, 5))),
        ("cycles", Fraction(1, 4), None, build_component(3, g8, c=Fraction(1, 4))),
        ("uniform", None, None, build_component(4, g8)),
        (
            "combined",
            Fraction(1, 4),
            GapParams.tuned(c=Fraction(1, 4)).lams(),
            combine(GapParams.tuned(c=Fraction(1, 4)), build_graph(4, 12)),
        ),
    ]


def test_render_rational_always_fractional():
    assert render_rational(Fraction(1, 5)) == "1/5"
    assert render_rational(Fraction(3)) == "3/1"
    assert render_rational(Fraction(-1, 5)) == "-1/5"
    assert render_rational(Fraction(6, 4)) == "3/2"


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
@settings(max_examples=200, deadline=None)
def test_rational_round_trip(p, q):
    x = Fraction(p, q)
    assert parse_rational(render_rational(x)) == x


def test_parse_rational_accepts_decimals_exactly():
    assert parse_rational("0.074125") == Fraction(593, 8000)
    assert parse_rational("7/2") == Fraction(7, 2)
    assert parse_rational("3") == 3
    with pytest.raises(ValueError):
        parse_rational("1/5/2")


def test_render_decimal_half_even():
    assert render_decimal(Fraction(5, 10**7)) == "0.000000"
    assert render_decimal(Fraction(15, 10**7)) == "0.000002"
    assert render_decimal(Fraction(25, 10**7)) == "0.000002"
    assert render_decimal(Fraction(35, 10**7)) == "0.000004"
    assert render_decimal(Fraction(6, 5)) == "1.200000"
    assert render_decimal(Fraction(6, 5), places=2) == "1.20"


@pytest.mark.parametrize("tag,c,lam,w", _sample_instances(), ids=lambda v: str(v)[:24])
def test_json_round_trip(tag, c, lam, w):
    text = emit_instance_json(w, tag=tag, c=c, lam=lam)
    parsed = parse_instance(text)
    assert parsed.tag == tag
    assert parsed.c == c
    assert parsed.lam == lam
    assert parsed.weights.graph is w.graph
    assert dict(parsed.weights.items()) == {
        e: wt for e, wt in w.items() if wt != 0
    }


@pytest.mark.parametrize("tag,c,lam,w", _sample_instances(), ids=lambda v: str(v)[:24])
def test_dimacs_round_trip(tag, c, lam, w):
    text = emit_instance_dimacs(w, tag=tag, c=c, lam=lam)
    parsed = parse_instance(text)
    assert parsed.tag == tag
    assert parsed.c == c
    assert parsed.lam == lam
    assert parsed.weights.graph is w.graph
    assert dict(parsed.weights.items()) == {
        e: wt for e, wt in w.items() if wt != 0
    }


@pytest.mark.parametrize("tag,c,lam,w", _sample_instances(), ids=lambda v: str(v)[:24])
def test_cross_format_equality(tag, c, lam, w):
    from_json = parse_instance(emit_instance_json(w, tag=tag, c=c, lam=lam))
    from_dimacs = parse_instance(emit_instance_dimacs(w, tag=tag, c=c, lam=lam))
    assert from_json.weights.graph is from_dimacs.weights.graph
    assert dict(from_json.weights.items()) == dict(from_dimacs.weights.items())
    assert (from_json.tag, from_json.c, from_json.lam) == (
        from_dimacs.tag,
        from_dimacs.c,
        from_dimacs.lam,
    )


def test_emission_is_deterministic():
    for tag, c, lam, w in _sample_instances():
        assert emit_instance_json(w, tag=tag, c=c, lam=lam) == emit_instance_json(
            w, tag=tag, c=c, lam=lam
        )
        assert emit_instance_dimacs(w, tag=tag, c=c, lam=lam) == emit_instance_dimacs(
            w, tag=tag, c=c, lam=lam
        )


def test_frozen_triangle_header():
    text = emit_instance_dimacs(build_base_triangle(9), tag="triangle")
    lines = text.splitlines()
    p_line = next(l for l in lines if l.startswith("p "))
    assert p_line == "p mwc 55 117 3"
    assert "c simplexcut-instance version 1" in lines
    assert "c tag triangle" in lines
    t_lines = [l for l in lines if l.startswith("t ")]
    assert t_lines == ["t 0 1", "t 9 2", "t 54 3"]


def test_include_zero_edges_changes_header_only():
    w = build_base_triangle(9)
    full = emit_instance_dimacs(w, include_zero_edges=True)
    p_line = next(l for l in full.splitlines() if l.startswith("p "))
    assert p_line == "p mwc 55 135 3"
    # zero rows are listed in the file but canonicalized away on parse
    parsed = parse_instance(full)
    assert parsed.weights == w
    assert len(full.splitlines()) == len(
        emit_instance_dimacs(w).splitlines()
    ) + 18


def test_dimacs_rejects_malformed():
    w = build_base_triangle(3)
    good = emit_instance_dimacs(w)
    with pytest.raises(ValueError):
        parse_instance(good.replace("p mwc", "p max"))
    # drop one edge row: count mismatch
    lines = [l for l in good.splitlines() if l]
    edge_lines = [l for l in lines if l.startswith("e ")]
    broken = "\n".join(l for l in lines if l != edge_lines[0]) + "\n"
    with pytest.raises(ValueError):
        parse_instance(broken)
    with pytest.raises(ValueError):
        parse_instance(good.replace("t 0 1", "t 1 1"))


def test_json_rejects_malformed():
    w = build_base_triangle(3)
    good = emit_instance_json(w, tag="triangle")
    with pytest.raises(ValueError):
        parse_instance(good.replace('"simplexcut-instance"', '"other-format"'))
    with pytest.raises(ValueError):
        parse_instance(good.replace('"version": 1', '"version": 2'))


def test_cut_round_trip():
    g = build_graph(3, 9)
    for p in (midlines(g), isolate_terminals(g)):
        text = emit_cut(p)
        q = parse_cut(text)
        assert q == p
        assert emit_cut(q) == text


def test_cut_rejects_wrong_format():
    with pytest.raises(ValueError):
        parse_cut('{"format": "other", "version": 1}')
