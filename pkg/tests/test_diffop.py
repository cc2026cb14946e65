import random

import pytest
from conftest import random_poly

from divpow.diffop import (DiffOperator, DividedPowerOp, apply_to_monomial, apply_to_poly, compose,
                           derivative, iterated_then_divided, leibniz_expand, single)
from divpow.identity import DELTA, VARS, operator_D
from divpow.ring import Polynomial, VarTable, binomial

XY = VarTable(("x", "y"))
x, y = XY.gens()


def test_monomial_action():
    op = DividedPowerOp(XY, (2, 0))
    assert apply_to_monomial(op, (5, 0)) == (10, (3, 0))
    assert apply_to_monomial(DividedPowerOp(XY, (1, 0)), (0, 3)) == (0, None)
    ident = DividedPowerOp.identity(XY)
    assert apply_to_monomial(ident, (4, 7)) == (1, (4, 7))


def test_monomial_action_matches_binomial_formula():
    for m in range(9):
        for k in range(9):
            coeff, mono = apply_to_monomial(DividedPowerOp(XY, (k, 0)), (m, 2))
            assert coeff == binomial(m, k)
            if m >= k:
                assert mono == (m - k, 2)


def test_apply_to_poly():
    assert apply_to_poly(single(XY, 0, 1), x ** 3 + x) == 3 * x ** 2 + 1


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (5, 1), (2, 2)])
def test_operator_sends_minor_power_product_to_frobenius_power(p, e):
    q = p ** e
    k = q - 1
    g = dict(zip(VARS.names, VARS.gens()))
    D = operator_D(k)
    for lead, a, b in (("u", 1, 2), ("v", 2, 0), ("w", 0, 1)):
        f = g[lead] * DELTA.power(a, k) * DELTA.power(b, k)
        # reduce before and after applying: both routes must agree
        assert apply_to_poly(D, f).reduce_mod_p(p) == (g[lead] ** q).reduce_mod_p(p)
        assert apply_to_poly(D, f.reduce_mod_p(p)) == (g[lead] ** q).reduce_mod_p(p)


def test_compose_examples():
    d1 = DividedPowerOp(XY, (1, 0))
    c = compose(d1, d1)
    assert c.orders == (2, 0) and c.scalar == 2
    ident = DividedPowerOp.identity(XY)
    op = DividedPowerOp(XY, (3, 1), scalar=5)
    assert compose(ident, op) == op
    c = compose(DividedPowerOp(XY, (2, 0)), DividedPowerOp(XY, (3, 0)))
    assert c.orders == (5, 0) and c.scalar == 10


def test_leibniz_examples():
    assert leibniz_expand(1, 0, x, y) == y
    assert leibniz_expand(0, 0, x + 1, y) == (x + 1) * y
    assert leibniz_expand(2, 0, x, x) == Polynomial.constant(XY, 1)
    assert apply_to_poly(single(XY, 0, 2), x * x) == Polynomial.constant(XY, 1)


SIX = VarTable(("a", "b", "c", "d", "e", "f"))


def test_leibniz_property():
    rng = random.Random(1)
    for _ in range(500):
        f, g = random_poly(rng, SIX), random_poly(rng, SIX)
        k, var = rng.randint(0, 4), rng.randrange(6)
        assert leibniz_expand(k, var, f, g) == apply_to_poly(single(SIX, var, k), f * g)


def _random_op(rng, vars, max_order=3):
    return DividedPowerOp(vars, tuple(rng.randint(0, max_order) for _ in vars),
                          rng.choice([1, 1, 2, -3]))


def test_composition_consistency_and_commutativity():
    rng = random.Random(2)
    for _ in range(300):
        a, b = _random_op(rng, SIX), _random_op(rng, SIX)
        f = random_poly(rng, SIX, max_deg=6)
        assert apply_to_poly(compose(a, b), f) == apply_to_poly(a, apply_to_poly(b, f))
        assert compose(a, b) == compose(b, a)


def test_iterated_derivative_oracle():
    rng = random.Random(3)
    for _ in range(200):
        f = random_poly(rng, SIX, max_deg=8, max_terms=6)
        k, var = rng.randint(0, 6), rng.randrange(6)
        assert iterated_then_divided(f, var, k) == apply_to_poly(single(SIX, var, k), f)


def test_apply_mod_p_agrees_with_reduction():
    rng = random.Random(4)
    for _ in range(200):
        f = random_poly(rng, SIX, max_deg=8)
        op = _random_op(rng, SIX)
        p = rng.choice([2, 3, 5])
        assert apply_to_poly(op, f.reduce_mod_p(p)) == apply_to_poly(op, f).reduce_mod_p(p)


def test_derivative():
    assert derivative(x ** 3 * y + 2 * y, 0) == 3 * x ** 2 * y
    assert derivative(x ** 3 * y + 2 * y, 1) == x ** 3 + 2


def test_diff_operator_sum():
    op = DiffOperator([(y, single(XY, 0, 1)), (Polynomial.constant(XY, 2), single(XY, 1, 2))])
    f = x ** 2 * y ** 2
    assert op(f) == y * (2 * x * y ** 2) + 2 * x ** 2
    assert DiffOperator.of(single(XY, 0, 1))(f) == 2 * x * y ** 2


def test_from_orders():
    op = DividedPowerOp.from_orders(VARS, {"u": 2, "z": 1})
    assert op.orders == (2, 0, 0, 0, 0, 1)
