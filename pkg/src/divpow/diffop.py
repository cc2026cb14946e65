"""Divided-power differential operators.

An operator is a multi-index ``(k_1, ..., k_d)`` together with an integer
scalar and stands for ``scalar * prod_i (1/k_i!) d^{k_i}/dx_i^{k_i}``.  On a
monomial it acts by ``x^m -> binomial(m, k) x^(m-k)`` in each variable, so
everything stays in the integers and the same data makes sense mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from .errors import DomainError, IncompatibleOperandsError
from .ring import Monomial, Polynomial, VarTable, binomial


@dataclass(frozen=True)
class DividedPowerOp:
    vars: VarTable
    orders: Tuple[int, ...]
    scalar: int = 1

    def __post_init__(self):
        orders = tuple(self.orders)
        if len(orders) != len(self.vars):
            raise DomainError(f"operator has {len(orders)} orders for {len(self.vars)} variables")
        if any(k < 0 for k in orders):
            raise DomainError(f"negative order in {orders}")
        object.__setattr__(self, "orders", orders)

    @classmethod
    def identity(cls, vars: VarTable) -> "DividedPowerOp":
        return cls(vars, (0,) * len(vars))

    @classmethod
    def from_orders(cls, vars: VarTable, orders: Mapping[str, int], scalar: int = 1) -> "DividedPowerOp":
        """Build from a ``{variable name: order}`` mapping; missing names get order 0."""
        ks = [0] * len(vars)
        for name, k in orders.items():
            ks[vars.index(name)] += k
        return cls(vars, tuple(ks), scalar)

    @property
    def total_order(self) -> int:
        return sum(self.orders)

    def is_identity(self) -> bool:
        return self.scalar == 1 and not any(self.orders)

    def __call__(self, f: Polynomial) -> Polynomial:
        return apply_to_poly(self, f)

    def __matmul__(self, other: "DividedPowerOp") -> "DividedPowerOp":
        return compose(self, other)


def apply_to_monomial(op: DividedPowerOp, m: Monomial) -> Tuple[int, Optional[Monomial]]:
    """Return ``(coefficient, monomial)``; the monomial is None when the image is zero."""
    coeff = op.scalar
    out = []
    for e, k in zip(m, op.orders):
        if e < k:
            return 0, None
        coeff *= binomial(e, k)
        out.append(e - k)
    return coeff, tuple(out)


def apply_to_poly(op: DividedPowerOp, f: Polynomial) -> Polynomial:
    if op.vars != f.vars:
        raise IncompatibleOperandsError("operator and polynomial use different variable tables")
    acc: Dict[Monomial, int] = {}
    for exps, c in f.as_dict().items():
        coeff, m = apply_to_monomial(op, exps)
        if coeff:
            acc[m] = coeff * c
    return Polynomial(f.vars, acc, f.modulus)


def compose(a: DividedPowerOp, b: DividedPowerOp) -> DividedPowerOp:
    """Composite ``a . b`` in divided-power normal form."""
    if a.vars != b.vars:
        raise IncompatibleOperandsError("operators use different variable tables")
    scalar = a.scalar * b.scalar
    for r, s in zip(a.orders, b.orders):
        scalar *= binomial(r + s, r)
    return DividedPowerOp(a.vars, tuple(r + s for r, s in zip(a.orders, b.orders)), scalar)


def single(vars: VarTable, var: int, k: int) -> DividedPowerOp:
    """``(1/k!) d^k/dx_var^k``."""
    orders = [0] * len(vars)
    orders[var] = k
    return DividedPowerOp(vars, tuple(orders))


def derivative(f: Polynomial, var: int) -> Polynomial:
    """Ordinary first partial derivative."""
    acc = {}
    for exps, c in f.as_dict().items():
        e = exps[var]
        if e:
            m = list(exps)
            m[var] -= 1
            acc[tuple(m)] = c * e
    return Polynomial(f.vars, acc, f.modulus)


def leibniz_expand(k: int, var: int, f: Polynomial, g: Polynomial) -> Polynomial:
    """``sum_{i+j=k} (1/i!)d^i(f) * (1/j!)d^j(g)`` in the variable ``var``."""
    total = Polynomial.zero(f.vars, f.modulus)
    for i in range(k + 1):
        total = total + apply_to_poly(single(f.vars, var, i), f) * apply_to_poly(
            single(f.vars, var, k - i), g)
    return total


def iterated_then_divided(f: Polynomial, var: int, k: int) -> Polynomial:
    """``k`` ordinary derivatives followed by one exact division by ``k!``."""
    for _ in range(k):
        f = derivative(f, var)
    return f.exact_div(factorial(k))


class DiffOperator:
    """R-linear combination ``sum_i c_i * op_i`` of basis operators.

    Coefficients multiply on the left: ``(c * op)(f) = c * op(f)``.
    """

    def __init__(self, terms: Iterable[Tuple[Polynomial, DividedPowerOp]]):
        self.terms: List[Tuple[Polynomial, DividedPowerOp]] = list(terms)
        if not self.terms:
            raise DomainError("empty operator sum")
        self.vars = self.terms[0][1].vars
        for c, op in self.terms:
            if c.vars != self.vars or op.vars != self.vars:
                raise IncompatibleOperandsError("mixed variable tables in operator sum")

    @classmethod
    def of(cls, op: Union[DividedPowerOp, "DiffOperator"]) -> "DiffOperator":
        if isinstance(op, DiffOperator):
            return op
        return cls([(Polynomial.constant(op.vars, 1), op)])

    def __call__(self, f: Polynomial) -> Polynomial:
        total = Polynomial.zero(f.vars, f.modulus)
        for c, op in self.terms:
            if f.modulus is not None:
                c = c.reduce_mod_p(f.modulus)
            total = total + c * apply_to_poly(op, f)
        return total

    def __repr__(self) -> str:
        return f"DiffOperator({self.terms!r})"

