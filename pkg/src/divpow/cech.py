"""Čech cochains over a denominator basis of size at most three.

Index sets are stored 0-based as increasing tuples; the component on
``S`` lives in the localization at ``prod_{i in S} f_i``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple, Union

from .diffop import DiffOperator, DividedPowerOp
from .errors import DomainError, NoHigherDegreeError, UnsupportedSizeError
from .ratfun import DenomBasis, RationalSum, apply_op_to_sum, clear_denominators, is_zero
from .ring import Polynomial

Subset = Tuple[int, ...]
MAX_BASIS = 3


def subsets(m: int, n: int) -> list:
    """All ``n``-subsets of ``range(m)`` in lexicographic order."""
    return list(combinations(range(m), n))


class CechCochain:
    def __init__(self, basis: DenomBasis, degree: int,
                 components: Optional[Mapping[Subset, RationalSum]] = None):
        m = len(basis)
        if m > MAX_BASIS:
            raise UnsupportedSizeError(f"basis of size {m}; at most {MAX_BASIS} supported")
        if not 0 <= degree <= m:
            raise DomainError(f"degree {degree} outside 0..{m}")
        self.basis = basis
        self.degree = degree
        comps: Dict[Subset, RationalSum] = {}
        given = dict(components or {})
        for S in subsets(m, degree):
            s = given.pop(S, None)
            if s is None:
                s = RationalSum(basis)
            for t in s.terms:
                if any(e and i not in S for i, e in enumerate(t.exponents)):
                    raise DomainError(
                        f"component on {S} has denominator exponents {t.exponents} outside it")
            comps[S] = s
        if given:
            raise DomainError(f"components on invalid index sets {sorted(given)}")
        self.components = comps

    def __getitem__(self, S: Subset) -> RationalSum:
        return self.components[tuple(S)]

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.components)

    def items(self):
        return self.components.items()

    def apply(self, op: Union[DividedPowerOp, DiffOperator]) -> "CechCochain":
        """Apply an operator componentwise."""
        return CechCochain(self.basis, self.degree,
                           {S: apply_op_to_sum(op, s) for S, s in self.components.items()})

    def term_counts(self) -> Dict[Subset, int]:
        return {S: len(s) for S, s in self.components.items()}

    def __str__(self) -> str:
        parts = []
        for S, s in self.components.items():
            label = "{" + ",".join(str(i + 1) for i in S) + "}"
            parts.append(f"{label}: {s}")
        return "(" + "; ".join(parts) + ")"


def coboundary(c: CechCochain) -> CechCochain:
    """Alternating-sum Čech differential."""
    m = len(c.basis)
    if c.degree >= m:
        raise NoHigherDegreeError(f"no cochains above degree {m}")
    out: Dict[Subset, RationalSum] = {}
    for T in subsets(m, c.degree + 1):
        acc = RationalSum(c.basis)
        for j in range(len(T)):
            face = c[T[:j] + T[j + 1:]]
            acc = acc + (face if j % 2 == 0 else -face)
        out[T] = acc.collect()
    return CechCochain(c.basis, c.degree + 1, out)


def is_cocycle(c: CechCochain) -> bool:
    return all(is_zero(s) for s in coboundary(c).components.values())


def coboundary_cleared(c: CechCochain) -> Dict[Subset, Polynomial]:
    """Cleared numerator of every coboundary component; all zero iff ``c`` is a cocycle."""
    return {S: clear_denominators(s, s.max_exponents()) for S, s in coboundary(c).items()}


class Syzygy:
    """Coefficients ``g`` with ``sum_i g_i f_i = 0`` against a basis ``f``."""

    def __init__(self, basis: DenomBasis, coeffs: Sequence[Polynomial]):
        coeffs = tuple(coeffs)
        if len(coeffs) != len(basis):
            raise DomainError(f"{len(coeffs)} coefficients for a basis of size {len(basis)}")
        total = Polynomial.zero(basis.vars)
        for g, f in zip(coeffs, basis):
            total = total + g * f
        if not total.is_zero():
            raise DomainError(f"not a syzygy: sum g_i f_i = {total}")
        self.basis = basis
        self.coeffs = coeffs

    def __repr__(self) -> str:
        return "Syzygy(" + ", ".join(str(g) for g in self.coeffs) + ")"


def syzygy_to_cocycle(s: Syzygy) -> CechCochain:
    """Degree-2 cocycle attached to a syzygy on three elements.

    The component on ``{i, j}`` is ``(-1)^(l+1) g_l / (f_i f_j)`` where ``l``
    is the missing (1-based) index.
    """
    basis = s.basis
    m = len(basis)
    if m != 3:
        raise UnsupportedSizeError(f"syzygy_to_cocycle needs three basis elements, got {m}")
    comps = {}
    for S in subsets(3, 2):
        missing = ({0, 1, 2} - set(S)).pop()
        sign = 1 if missing % 2 == 0 else -1  # (-1)^(l+1) with l = missing + 1
        exps = tuple(1 if i in S else 0 for i in range(3))
        comps[S] = RationalSum.of(basis, s.coeffs[missing] * sign, exps).collect()
    return CechCochain(basis, 2, comps)
