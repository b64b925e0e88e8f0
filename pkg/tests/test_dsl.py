import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from diassoc import DiMSC, MSC, make_field
from diassoc.catalog import CanonicalLabel, family
from diassoc.census import census_associative
from diassoc.dsl import ParseError, Verdict, parse_algebra, parse_document, render, to_document

GF2, GF5 = make_field("GF(2)"), make_field("GF(5)")


def test_parse_msc():
    ctx, A = parse_algebra("field GF(5)\nmsc 0 0 0 0 | 1 0 0 0")
    assert ctx == GF5 and A == family("As13^1").instantiate(GF5)


def test_parse_table_over_q():
    ctx, A = parse_algebra("field Q\ntable\ne1*e1 = e2")
    assert A == MSC.of(ctx, [0, 0, 0, 0], [1, 0, 0, 0])
    _, B = parse_algebra("field Q\ntable\ne2*e1 = 1/2 e1 - e2\n")
    assert B.entries[2] == Fraction(1, 2) and B.entries[6] == -1


def test_parse_dialgebra():
    text = "field GF(2)\ndialgebra\nleft 0 1 1 0 | 1 0 0 1\nright 0 1 1 0 | 1 0 0 1"
    ctx, D = parse_algebra(text)
    assert D == family("D11,2^2").instantiate(GF2, (1,))


def test_parse_dialgebra_mixed_blocks():
    text = """field GF(2^2)   # four elements
dialgebra
left [0,1] 0 0 0 | 0 0 0 0
right table
e1*e1 = [1,1]*e2
"""
    ctx, D = parse_algebra(text)
    assert D.left.entries[0] == (0, 1)
    assert D.right.entries[4] == (1, 1)


def test_table_equals_matrix():
    _, A = parse_algebra("field GF(5)\ntable\ne1*e1 = 3 e1\ne1*e2 = 3 e2\ne2*e1 = 3 e2\ne2*e2 = 2 e1")
    _, B = parse_algebra("field GF(5)\nmsc 3 0 0 2 | 0 3 3 0")
    assert A == B


def test_literals_reduce():
    _, A = parse_algebra("field GF(5)\nmsc 6 -1 0 0 | 0 0 0 10")
    assert A.entries[:2] == (1, 4) and A.entries[7] == 0


@pytest.mark.parametrize("text,line,col", [
    ("", 1, 1),
    ("msc 0 0 0 0 | 0 0 0 0", 1, 1),
    ("field GF(6)\nmsc 0 0 0 0 | 0 0 0 0", 1, 7),
    ("field GF(5)\nmsc 0 0 0 | 0 0 0 0", 2, 5),
    ("field GF(5)\ntable\ne1*e1 = e2\ne1*e1 = e1", 4, 1),
    ("field GF(5)\ntable\ne1*e3 = e2", 3, 1),
    ("field GF(5)\nbogus", 2, 1),
    ("field GF(5)\ndialgebra\nleft 0 0 0 0 | 0 0 0 0", 3, 1),
    ("field GF(4)\nmsc [0,1,1] 0 0 0 | 0 0 0 0", 2, 5),
])
def test_parse_errors(text, line, col):
    with pytest.raises(ParseError) as ei:
        parse_algebra(text)
    assert (ei.value.line, ei.value.col) == (line, col)
    assert str(ei.value).startswith(f"line {line}, column {col}:")


def test_render_examples():
    assert render(CanonicalLabel("As3^2", (), "not23"), "json") == '{"label":"As3^2","params":[],"char_class":"not23"}'
    assert render(Verdict("associative", True)) == "associative: true"
    r = census_associative(GF2)
    assert json.loads(render(r, "json"))["classes"] == 7
    assert render(r) == r.to_text()


_FIELDS = ["GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(9)", "Q"]


@given(st.data())
def test_round_trip(data):
    ctx = make_field(data.draw(st.sampled_from(_FIELDS)))
    if ctx.is_finite:
        elem = st.sampled_from(ctx.elements())
    else:
        elem = st.fractions(max_denominator=20).filter(lambda f: abs(f) < 100)
    def msc():
        return MSC(ctx, tuple(ctx.coerce(data.draw(elem)) for _ in range(8)))
    A = DiMSC(msc(), msc()) if data.draw(st.booleans()) else msc()
    text = to_document(A)
    ctx2, B = parse_algebra(text)
    assert ctx2 == ctx and B == A
    assert parse_algebra(render(B, "text")) == (ctx2, B)
    assert parse_document(text)[1] == ("dialgebra" if isinstance(A, DiMSC) else "algebra")


def test_render_json_algebra():
    A = family("As3^5").instantiate(GF5, (1,))
    assert json.loads(render(A, "json")) == {"field": "GF(5)", "kind": "algebra", "msc": [3, 0, 0, 1, 0, 3, 3, 0]}
