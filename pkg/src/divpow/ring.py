"""Sparse multivariate polynomials with exact integer or mod-p coefficients.

A polynomial is a mapping from exponent tuples to nonzero coefficients.
Terms are kept in a plain dict internally and reported in graded
lexicographic order (total degree first, ties broken lexicographically
along the variable table), highest term first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import DivisibilityError, DomainError, IncompatibleOperandsError

Monomial = Tuple[int, ...]


def monomial_key(exponents: Monomial) -> Tuple[int, Monomial]:
    """Sort key realizing graded lexicographic order."""
    return (sum(exponents), exponents)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise DomainError(f"{p!r} is not a prime")
    return p


def binomial(m: int, k: int) -> int:
    """Binomial coefficient for nonnegative arguments, zero when ``m < k``."""
    if m < 0 or k < 0:
        raise DomainError(f"binomial({m}, {k}): arguments must be nonnegative")
    return math.comb(m, k)


@dataclass(frozen=True)
class VarTable:
    """Ordered, duplicate-free list of variable names."""

    names: Tuple[str, ...]

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise DomainError(f"duplicate variable names in {names}")
        object.__setattr__(self, "names", names)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise DomainError(f"unknown variable {name!r}") from None

    def gen(self, name: str, modulus: Optional[int] = None) -> "Polynomial":
        exps = [0] * len(self.names)
        exps[self.index(name)] = 1
        return Polynomial(self, {tuple(exps): 1}, modulus)

    def gens(self, modulus: Optional[int] = None) -> List["Polynomial"]:
        return [self.gen(n, modulus) for n in self.names]


PolyLike = Union["Polynomial", int]


class Polynomial:
    """Immutable sparse polynomial over ZZ or ZZ/p."""

    __slots__ = ("vars", "modulus", "_terms", "_hash")

    def __init__(
        self,
        vars: VarTable,
        terms: Optional[Mapping[Monomial, int]] = None,
        modulus: Optional[int] = None,
    ):
        if modulus is not None:
            check_prime(modulus)
        n = len(vars)
        clean: Dict[Monomial, int] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise DomainError(f"bad exponent vector {exps} for {n} variables")
            if modulus is not None:
                c %= modulus
            if c:
                clean[exps] = c
        self.vars = vars
        self.modulus = modulus
        self._terms = clean
        self._hash = None

    @classmethod
    def _make(cls, vars: VarTable, terms: Dict[Monomial, int], modulus: Optional[int]) -> "Polynomial":
        # terms must already be canonical
        obj = cls.__new__(cls)
        obj.vars = vars
        obj.modulus = modulus
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, vars: VarTable, modulus: Optional[int] = None) -> "Polynomial":
        return cls._make(vars, {}, modulus)

    @classmethod
    def constant(cls, vars: VarTable, c: int, modulus: Optional[int] = None) -> "Polynomial":
        return cls(vars, {(0,) * len(vars): c}, modulus)

    @classmethod
    def monomial(cls, vars: VarTable, exponents: Sequence[int], coeff: int = 1,
                 modulus: Optional[int] = None) -> "Polynomial":
        return cls(vars, {tuple(exponents): coeff}, modulus)

    # -- inspection ---------------------------------------------------------

    def terms(self) -> List[Tuple[Monomial, int]]:
        """Terms in descending graded lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: monomial_key(t[0]), reverse=True)

    def as_dict(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def coeff(self, exponents: Sequence[int]) -> int:
        return self._terms.get(tuple(exponents), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def degree_in(self, var: int) -> int:
        if not self._terms:
            return -1
        return max(e[var] for e in self._terms)

    def evaluate(self, point: Sequence) -> object:
        """Evaluate at a point given in variable-table order (ints, Fractions, ...)."""
        total = 0
        for exps, c in self._terms.items():
            v = c
            for x, e in zip(point, exps):
                if e:
                    v *= x ** e
            total += v
        if self.modulus is not None:
            total %= self.modulus
        return total

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(self.vars, other, self.modulus)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.vars == other.vars and self.modulus == other.modulus
                and self._terms == other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, self.modulus, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        from .expr import render_poly

        suffix = f" mod {self.modulus}" if self.modulus is not None else ""
        return f"Polynomial({render_poly(self)!r}{suffix})"

    def __str__(self) -> str:
        from .expr import render_poly

        return render_poly(self)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other: PolyLike) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.vars != self.vars:
                raise IncompatibleOperandsError("polynomials over different variable tables")
            if other.modulus != self.modulus:
                raise IncompatibleOperandsError(
                    f"moduli differ: {self.modulus} vs {other.modulus}")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.vars, other, self.modulus)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other: PolyLike) -> "Polynomial":
        other = self._coerce(other)
        p = self.modulus
        out = dict(self._terms)
        for exps, c in other._terms.items():
            s = out.get(exps, 0) + c
            if p is not None:
                s %= p
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return Polynomial._make(self.vars, out, p)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = self.modulus
        if p is None:
            return Polynomial._make(self.vars, {e: -c for e, c in self._terms.items()}, None)
        return Polynomial._make(self.vars, {e: p - c for e, c in self._terms.items()}, p)

    def __sub__(self, other: PolyLike) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: PolyLike) -> "Polynomial":
        return self._coerce(other) - self

    def scale(self, c: int) -> "Polynomial":
        if not c:
            return Polynomial.zero(self.vars, self.modulus)
        p = self.modulus
        if p is None:
            return Polynomial._make(self.vars, {e: v * c for e, v in self._terms.items()}, None)
        return Polynomial(self.vars, {e: v * c for e, v in self._terms.items()}, p)

    def __mul__(self, other: PolyLike) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        p = self.modulus
        out: Dict[Monomial, int] = {}
        get = out.get
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        if p is None:
            out = {e: c for e, c in out.items() if c}
        else:
            out = {e: c % p for e, c in out.items() if c % p}
        return Polynomial._make(self.vars, out, p)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise DomainError(f"exponent must be a nonnegative integer, got {n!r}")
        result = Polynomial.constant(self.vars, 1, self.modulus)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div(self, d: int) -> "Polynomial":
        """Divide every coefficient by ``d``; raises if any division is inexact."""
        if self.modulus is not None:
            raise DomainError("exact integer division needs characteristic 0")
        if d == 0:
            raise DomainError("division by zero")
        out = {}
        for e, c in self._terms.items():
            q, r = divmod(c, d)
            if r:
                raise DivisibilityError(f"coefficient {c} is not divisible by {d}")
            out[e] = q
        return Polynomial._make(self.vars, out, None)

    def reduce_mod_p(self, p: int) -> "Polynomial":
        """Image in (ZZ/p)[vars]."""
        if self.modulus is not None:
            raise DomainError("polynomial is already reduced")
        check_prime(p)
        return Polynomial(self.vars, self._terms, p)

    def lift(self) -> "Polynomial":
        """Forget the modulus, taking representatives in [0, p)."""
        return Polynomial._make(self.vars, dict(self._terms), None)


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_pow(a: Polynomial, n: int) -> Polynomial:
    return a ** n


def poly_exact_div(a: Polynomial, d: int) -> Polynomial:
    return a.exact_div(d)


def reduce_mod_p(a: Polynomial, p: int) -> Polynomial:
    return a.reduce_mod_p(p)
