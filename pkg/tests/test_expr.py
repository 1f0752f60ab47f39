import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import expressions, normal_forms, polys
from weylcalc.algebra import ZERO, AntiCommutator, Commutator, Gen, Product, Scalar, nf_monomial, word_to_nf
from weylcalc.exact import I, PolyCoeff
from weylcalc.expr import (
    ParseError,
    from_json,
    parse,
    parse_nf,
    render,
    roundtrip,
    to_json,
    tokenize,
    unparse,
)

c = PolyCoeff.symbol("c")


def test_parse_examples():
    assert parse("[X,Y]") == Commutator(Gen("X"), Gen("Y"))
    e = parse("{X^2, Y^3} * 1/2")
    assert isinstance(e, Product) and isinstance(e.factors[0], AntiCommutator)
    assert e.factors[1] == Scalar(PolyCoeff.const(Fraction(1, 2)))
    with pytest.raises(ParseError) as info:
        parse("X^-1")
    assert info.value.position == 2
    assert info.value.found == "'-'"


@pytest.mark.parametrize(
    "src, pos",
    [("2X", 1), ("X Z", 2), ("[X Y]", 3), ("X +", 3), ("(X", 2), ("1/0", 2), ("X^Y", 2), ("", 0), ("{X,Y", 4)],
)
def test_parse_errors_are_positioned(src, pos):
    with pytest.raises(ParseError) as info:
        parse(src)
    assert info.value.position == pos
    assert 0 <= info.value.position <= len(src)


def test_tokens():
    toks = tokenize("[X, Y] − 3/4")
    kinds = [t.kind for t in toks]
    assert kinds == ["lbracket", "ident", "comma", "ident", "rbracket", "minus", "integer", "slash", "integer", "end"]
    positions = [t.pos for t in toks]
    assert positions == sorted(set(positions))


def test_render_examples():
    A = nf_monomial(1, 1, c) + c**2
    assert render(A, "text") == "c*Y*X + c^2"
    assert render(nf_monomial(1, 1) + c * Fraction(1, 2), "latex") == r"Y X + \frac{1}{2} c"
    assert json.loads(render(ZERO, "json"))["terms"] == []
    assert render(ZERO) == "0"
    with pytest.raises(ValueError):
        render(ZERO, "html")


def test_render_shapes():
    A = nf_monomial(2, 3, c + 1) - nf_monomial(0, 1, Fraction(3, 2) * I)
    assert render(A) == "(1 + c)*Y^2*X^3 - 3/2*i*X"
    assert parse_nf(render(A)) == A
    assert render(nf_monomial(0, 0, 1 + 2 * I)) == "(1 + 2*i)"


def test_roundtrip_examples():
    assert roundtrip("[X^2,Y^2]") == nf_monomial(1, 1, 4 * c) + 2 * c**2
    assert roundtrip("X*Y - Y*X - c") == ZERO
    expected = word_to_nf("XXY") + word_to_nf("XYX") * 2 + word_to_nf("YXX")
    assert roundtrip("{X,{X,Y}}") == expected


def test_json_schema():
    A = nf_monomial(1, 2, 3 * c - Fraction(1, 2) * I) + 5
    obj = json.loads(to_json(A))
    assert obj["basis"] == "YX" and obj["symbols"] == ["c", "s", "t"]
    assert [(t["y"], t["x"]) for t in obj["terms"]] == [(1, 2), (0, 0)]
    assert obj["terms"][0]["coeff"][0] == {"c": 0, "s": 0, "t": 0, "re": "0/1", "im": "-1/2"}
    assert obj["terms"][0]["coeff"][1]["re"] == "3/1"
    assert from_json(to_json(A)) == A


def test_unary_minus():
    assert parse_nf("-X") == parse_nf("(-1)*X")
    assert parse_nf("--X") == parse_nf("X")
    assert parse_nf("X - -Y") == parse_nf("X + Y")


@settings(max_examples=1000, deadline=None)
@given(expressions)
def test_generated_roundtrip(src):
    A = parse_nf(src)
    assert roundtrip(src) == A
    assert parse_nf(unparse(parse(src))) == A
    assert parse_nf(render(A, "text")) == A


@settings(max_examples=300, deadline=None)
@given(normal_forms(coeffs=polys))
def test_json_is_byte_stable(A):
    text = to_json(A)
    B = from_json(text)
    assert B == A
    assert to_json(B) == text


@settings(max_examples=500, deadline=None)
@given(st.text(alphabet="XYcsti0123/+-*^()[]{}, zq", max_size=20))
def test_parser_totality(src):
    try:
        parse(src)
    except ParseError as exc:
        assert 0 <= exc.position <= len(src)
