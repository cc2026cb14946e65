import random

import pytest
from conftest import random_poly

from divpow.diffop import DividedPowerOp
from divpow.errors import ParseError, UndeclaredVariableError
from divpow.expr import parse_operator, parse_poly, render_operator, render_poly
from divpow.identity import DELTA1, DELTA3, VARS
from divpow.ring import Polynomial, VarTable

XY = VarTable(("x", "y"))
x, y = XY.gens()


def test_parse_minor():
    assert parse_poly("v*z - w*y", VARS) == DELTA1


def test_parse_power():
    assert parse_poly("(x+y)^2", XY) == x ** 2 + 2 * x * y + y ** 2


def test_syntax_error_position():
    with pytest.raises(ParseError) as info:
        parse_poly("x + * y", XY)
    assert info.value.pos == 4


@pytest.mark.parametrize("src", ["2x", "x +", "(x", "x ^ y", "x y", "x ** 2", "x & y", ""])
def test_syntax_errors(src):
    with pytest.raises(ParseError):
        parse_poly(src, XY)


def test_undeclared_variable():
    with pytest.raises(UndeclaredVariableError) as info:
        parse_poly("x + q", XY)
    assert info.value.pos == 4


@pytest.mark.parametrize("src,expected", [
    ("-x", lambda: -x),
    ("x - -y", lambda: x + y),
    ("x*-3", lambda: -3 * x),
    ("-(x - y)^3", lambda: -((x - y) ** 3)),
    ("2^3*x", lambda: 8 * x),
    ("x^2^2", lambda: x ** 4),
    ("  x *\ty  ", lambda: x * y),
    ("0", lambda: Polynomial.zero(XY)),
])
def test_precedence_and_signs(src, expected):
    assert parse_poly(src, XY) == expected()


def test_parse_mod_p():
    assert parse_poly("3*x + 2*y", XY, modulus=3) == XY.gen("y", 3) * 2


def test_render_examples():
    assert render_poly(DELTA3) == "u*y - v*x"
    assert render_poly(Polynomial.zero(XY)) == "0"
    assert render_poly(3 * x ** 2) == "3*x^2"
    assert render_poly(-x + 1) == "-x + 1"
    assert render_poly(x - 5) == "x - 5"


def test_round_trip():
    rng = random.Random(41)
    six = VarTable(("a", "b", "c", "d", "e", "f"))
    for _ in range(500):
        f = random_poly(rng, six, max_deg=5, max_terms=6, coeff=1000)
        text = render_poly(f)
        assert parse_poly(text, six) == f
        assert render_poly(parse_poly(text, six)) == text


def test_render_canonicalizes():
    assert render_poly(parse_poly("y*x + x*y - 2*y*x + y^2 + (x)", XY)) == "y^2 + x"


def test_operator_syntax():
    op = parse_operator("Du^2 Dy^2 Dz^2", VARS)
    assert op == DividedPowerOp.from_orders(VARS, {"u": 2, "y": 2, "z": 2})
    assert render_operator(op) == "Du^2 Dy^2 Dz^2"
    assert parse_operator("Dx", XY) == DividedPowerOp(XY, (1, 0))
    # repeated variables compose: (1/1!)d * (1/1!)d = 2 * (1/2!)d^2
    assert parse_operator("Dx Dx", XY) == DividedPowerOp(XY, (2, 0), 2)
    assert render_operator(DividedPowerOp(XY, (2, 0), 2)) == "2 Dx^2"
    assert render_operator(DividedPowerOp.identity(XY)) == "1"
    assert parse_operator("3 Dx^2 Dy", XY) == DividedPowerOp(XY, (2, 1), 3)
    assert parse_operator("1", XY) == DividedPowerOp.identity(XY)


@pytest.mark.parametrize("src", ["", "Dq", "Dx^", "x", "Dx^-1"])
def test_operator_syntax_errors(src):
    with pytest.raises(ParseError):
        parse_operator(src, XY)
