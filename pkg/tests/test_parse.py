from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gwsym import (QQ, FunctionField, GWExpr, gen, parse_element, parse_gw, parse_poly, render,
                   render_expr, square_class)
from gwsym.errors import ParseError
from gwsym.gw import GWElement
from gwsym.parse import GWTerm, parse_class

K = FunctionField(QQ)


def test_example_terms():
    e = parse_gw("3<1> - 2<-1> + <2>")
    assert [(t.sign, t.mult, t.cls) for t in e.terms] == [(1, 3, 1), (-1, 2, -1), (1, 1, 2)]


def test_empty_and_zero():
    assert parse_gw("") == GWExpr()
    assert parse_gw("   ") == GWExpr()
    assert parse_gw("0") == GWExpr()


def test_star_and_leading_sign():
    e = parse_gw("-1*<1>-1*<-1>")
    assert [(t.sign, t.mult, t.cls) for t in e.terms] == [(-1, 1, 1), (-1, 1, -1)]
    assert parse_gw(" + 2 * < 3/4 > ").terms[0].cls == Fraction(3, 4)


@pytest.mark.parametrize("text,offset", [
    ("<0>", 1),
    ("<1> <2>", 4),
    ("3<1> -", 6),
    ("<1", 2),
    ("<a>", 1),
    ("2*", 2),
    ("<1/0>", 3),
    ("0*<1>", 0),
])
def test_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as e:
        parse_gw(text)
    assert e.value.offset == offset


def test_error_message_names_expectation():
    with pytest.raises(ParseError, match="offset 1.*nonzero class"):
        parse_gw("<0>")


def test_to_element():
    assert parse_element("3<1> - 2<-1> + <8>") == 3 * gen(1) - 2 * gen(-1) + gen(2)


terms = st.builds(GWTerm, st.sampled_from([1, -1]), st.integers(1, 20),
                  st.builds(Fraction, st.integers(-50, 50).filter(bool), st.integers(1, 9)))


@given(st.lists(terms, max_size=5).map(tuple))
def test_round_trip(ts):
    e = GWExpr(ts)
    assert parse_gw(render_expr(e)) == e


@given(st.lists(st.tuples(st.integers(-30, 30).filter(bool), st.integers(-4, 4)), max_size=4))
def test_render_parse_element(entries):
    x = GWElement(QQ, [(square_class(a, QQ), m) for a, m in entries])
    assert parse_element(render(x)) == x


def test_function_field_classes():
    x = parse_element("<5*t> + <3*(1+t)> - <t^2>", K)
    assert x == GWElement(K, [(square_class(([0, 5], [1]), K), 1),
                              (square_class(([3, 3], [1]), K), 1),
                              (square_class(1, K), -1)])
    assert parse_class("(t^2 - 1)/(t + 1)^2", K) == square_class(([-1, 1], [1, 1]), K)
    assert parse_class("5t", K) == square_class(([0, 5], [1]), K)
    with pytest.raises(ParseError):
        parse_element("<t - t>", K)


def test_function_field_render_round_trip():
    x = GWElement(K, [(square_class(([0, 15, 15], [1]), K), 2),
                      (square_class(([-1, 0, 3], [1, 0, 0, 1]), K), -1)])
    assert parse_element(render(x), K) == x


def test_polynomials():
    assert parse_poly("x^2-2") == (-2, 0, 1)
    assert parse_poly("x^3 - x - 1") == (-1, -1, 0, 1)
    assert parse_poly("(x+1)*(x-1)") == (-1, 0, 1)
    with pytest.raises(ParseError):
        parse_poly("x/2 + 1/3")
    with pytest.raises(ParseError):
        parse_poly("1/x")
    with pytest.raises(ParseError):
        parse_poly("x^")
