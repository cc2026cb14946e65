"""Formal rational terms ``N / prod_i q_i^e_i`` over a fixed denominator basis.

Numerators and denominators are never cancelled against each other.  Two
sums are compared by multiplying through by a common power product of the
basis and comparing the resulting polynomials, which is sound because the
basis elements are nonzero in an integral domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .diffop import DiffOperator, DividedPowerOp, derivative
from .errors import DivisibilityError, DomainError, IncompatibleOperandsError, UnderflowError
from .ring import Polynomial, VarTable

Exponents = Tuple[int, ...]


class DenomBasis:
    """Ordered list of nonzero polynomials used as denominators."""

    def __init__(self, basis: Sequence[Polynomial], names: Optional[Sequence[str]] = None):
        basis = tuple(basis)
        if not basis:
            raise DomainError("denominator basis is empty")
        vars = basis[0].vars
        for q in basis:
            if q.is_zero():
                raise DomainError("denominator basis elements must be nonzero")
            if q.vars != vars or q.modulus is not None:
                raise IncompatibleOperandsError("basis polynomials must share one integral ring")
        self.basis = basis
        self.vars: VarTable = vars
        self.names = tuple(names) if names else tuple(f"f{i + 1}" for i in range(len(basis)))
        self._powers: Dict[Tuple[int, int], Polynomial] = {}
        self._partials: Dict[Tuple[int, int], Polynomial] = {}

    def __len__(self) -> int:
        return len(self.basis)

    def __getitem__(self, i: int) -> Polynomial:
        return self.basis[i]

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DenomBasis):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def power(self, i: int, n: int) -> Polynomial:
        key = (i, n)
        if key not in self._powers:
            self._powers[key] = self.basis[i] ** n
        return self._powers[key]

    def partial(self, i: int, var: int) -> Polynomial:
        key = (i, var)
        if key not in self._partials:
            self._partials[key] = derivative(self.basis[i], var)
        return self._partials[key]

    def power_product(self, exponents: Sequence[int]) -> Polynomial:
        out = Polynomial.constant(self.vars, 1)
        for i, n in enumerate(exponents):
            if n:
                out = out * self.power(i, n)
        return out


@dataclass(frozen=True)
class RationalTerm:
    basis: DenomBasis
    numerator: Polynomial
    exponents: Exponents

    def __post_init__(self):
        exps = tuple(self.exponents)
        if len(exps) != len(self.basis) or any(e < 0 for e in exps):
            raise DomainError(f"bad denominator exponents {exps}")
        if self.numerator.vars != self.basis.vars or self.numerator.modulus is not None:
            raise IncompatibleOperandsError("numerator must live in the basis ring")
        object.__setattr__(self, "exponents", exps)

    def evaluate(self, point: Sequence) -> Fraction:
        den = Fraction(1)
        for q, e in zip(self.basis, self.exponents):
            if e:
                den *= Fraction(q.evaluate(point)) ** e
        return Fraction(self.numerator.evaluate(point)) / den

    def __neg__(self) -> "RationalTerm":
        return RationalTerm(self.basis, -self.numerator, self.exponents)

    def __str__(self) -> str:
        den = " * ".join(
            f"{n}^{e}" if e > 1 else n for n, e in zip(self.basis.names, self.exponents) if e)
        return f"({self.numerator})/({den})" if den else f"({self.numerator})"


class RationalSum:
    """Formal finite sum of rational terms over one basis."""

    def __init__(self, basis: DenomBasis, terms: Iterable[RationalTerm] = ()):
        self.basis = basis
        self.terms: Tuple[RationalTerm, ...] = tuple(terms)
        for t in self.terms:
            if t.basis is not basis and t.basis != basis:
                raise IncompatibleOperandsError("terms over different denominator bases")

    @classmethod
    def of(cls, basis: DenomBasis, numerator: Polynomial, exponents: Sequence[int]) -> "RationalSum":
        return cls(basis, [RationalTerm(basis, numerator, tuple(exponents))])

    def __iter__(self) -> Iterator[RationalTerm]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "RationalSum") -> "RationalSum":
        if other.basis != self.basis:
            raise IncompatibleOperandsError("sums over different denominator bases")
        return RationalSum(self.basis, self.terms + other.terms)

    def __neg__(self) -> "RationalSum":
        return RationalSum(self.basis, [-t for t in self.terms])

    def __sub__(self, other: "RationalSum") -> "RationalSum":
        return self + (-other)

    def scale(self, c: Union[int, Polynomial]) -> "RationalSum":
        return RationalSum(self.basis, [
            RationalTerm(self.basis, t.numerator * c, t.exponents) for t in self.terms])

    def collect(self) -> "RationalSum":
        """Merge terms with equal exponent vectors; drop zero numerators.

        Output is sorted by exponent vector so it does not depend on input order.
        """
        acc: Dict[Exponents, Polynomial] = {}
        for t in self.terms:
            if t.exponents in acc:
                acc[t.exponents] = acc[t.exponents] + t.numerator
            else:
                acc[t.exponents] = t.numerator
        return RationalSum(self.basis, [
            RationalTerm(self.basis, n, e) for e, n in sorted(acc.items()) if not n.is_zero()])

    def exact_div(self, d: int) -> "RationalSum":
        return RationalSum(self.basis, [
            RationalTerm(self.basis, t.numerator.exact_div(d), t.exponents) for t in self.terms])

    def max_exponents(self) -> Exponents:
        out = [0] * len(self.basis)
        for t in self.terms:
            out = [max(a, b) for a, b in zip(out, t.exponents)]
        return tuple(out)

    def evaluate(self, point: Sequence) -> Fraction:
        return sum((t.evaluate(point) for t in self.terms), Fraction(0))

    def __str__(self) -> str:
        return " + ".join(str(t) for t in self.terms) if self.terms else "0"

    def __repr__(self) -> str:
        return f"RationalSum({self})"


def diff_term(var: int, t: RationalTerm) -> RationalSum:
    """Ordinary partial derivative of one term by the quotient rule."""
    basis = t.basis
    out: List[RationalTerm] = []
    dn = derivative(t.numerator, var)
    if not dn.is_zero():
        out.append(RationalTerm(basis, dn, t.exponents))
    for i, e in enumerate(t.exponents):
        if not e:
            continue
        dq = basis.partial(i, var)
        if dq.is_zero():
            continue
        exps = list(t.exponents)
        exps[i] += 1
        out.append(RationalTerm(basis, dq * t.numerator * (-e), tuple(exps)))
    return RationalSum(basis, out).collect()


def diff_sum(var: int, s: RationalSum) -> RationalSum:
    out: List[RationalTerm] = []
    for t in s.terms:
        out.extend(diff_term(var, t).terms)
    return RationalSum(s.basis, out).collect()


def divpow_sum(k: int, var: int, s: RationalSum) -> RationalSum:
    """``(1/k!) d^k/dx_var^k`` applied to a whole sum.

    Step ``j`` differentiates once and divides by ``j``, so after step ``j``
    the running value is the order-``j`` divided power.  Each division is
    exact; a remainder means an engine bug.
    """
    cur = s.collect()
    for step in range(1, k + 1):
        cur = diff_sum(var, cur)
        try:
            cur = cur.exact_div(step)
        except DivisibilityError as exc:
            raise DivisibilityError(
                f"divided power of order {step} in variable {var} is not integral: {exc}") from exc
    return cur


def apply_divpow_to_term(k: int, var: int, t: RationalTerm) -> RationalSum:
    return divpow_sum(k, var, RationalSum(t.basis, [t]))


def apply_op_to_sum(op: Union[DividedPowerOp, DiffOperator], s: RationalSum) -> RationalSum:
    """Apply a divided-power operator (or an R-combination of them) termwise."""
    if isinstance(op, DiffOperator):
        out = RationalSum(s.basis)
        for c, basic in op.terms:
            out = out + apply_op_to_sum(basic, s).scale(c)
        return out.collect()
    if op.vars != s.basis.vars:
        raise IncompatibleOperandsError("operator and sum use different variable tables")
    cur = s.collect()
    for var, k in enumerate(op.orders):
        if k:
            cur = divpow_sum(k, var, cur)
    if op.scalar != 1:
        cur = cur.scale(op.scalar).collect()
    return cur


def clear_denominators(s: RationalSum, target: Sequence[int]) -> Polynomial:
    """``sum_t N_t * prod_i q_i^(target_i - e_i)``."""
    target = tuple(target)
    if len(target) != len(s.basis):
        raise DomainError(f"target {target} has the wrong length")
    basis = s.basis
    total = Polynomial.zero(basis.vars)
    for t in s.collect().terms:
        gap = [a - e for a, e in zip(target, t.exponents)]
        if any(g < 0 for g in gap):
            raise UnderflowError(f"target {target} below term exponents {t.exponents}")
        total = total + t.numerator * basis.power_product(gap)
    return total


def is_zero(s: RationalSum) -> bool:
    return clear_denominators(s, s.max_exponents()).is_zero()


def sums_equal(a: RationalSum, b: RationalSum) -> bool:
    return is_zero(a - b)
