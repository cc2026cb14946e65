"""The determinantal identity on the 2x2 minors of a generic 2x3 matrix.

The matrix is ``[[u, v, w], [x, y, z]]`` with minors

    Delta1 = v*z - w*y,  Delta2 = w*x - u*z,  Delta3 = u*y - v*x,

which satisfy ``u*Delta1 + v*Delta2 + w*Delta3 = 0``.  For each ``k >= 0``
the order-``k`` operator ``D = (1/k!)^3 d^k_u d^k_y d^k_z`` applied termwise
to ``w/(Delta1 Delta2) + v/(Delta1 Delta3) + u/(Delta2 Delta3) = 0`` gives
three double sums that again add to zero.  This module builds those sums
literally, re-derives them with the operator engine, and checks their mod-p
behaviour at ``k = p^e - 1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .cech import CechCochain, Syzygy, coboundary_cleared, syzygy_to_cocycle
from .diffop import DiffOperator, DividedPowerOp, apply_to_poly
from .errors import DerivationMismatchError, DomainError, SizeError
from .ratfun import (DenomBasis, RationalSum, RationalTerm, apply_op_to_sum, clear_denominators,
                     is_zero, sums_equal)
from .ring import Polynomial, VarTable, binomial, check_prime

DEFAULT_MAX_PE = 32

VARS = VarTable(("u", "v", "w", "x", "y", "z"))
u, v, w, x, y, z = VARS.gens()
DELTA1 = v * z - w * y
DELTA2 = w * x - u * z
DELTA3 = u * y - v * x
DELTA = DenomBasis((DELTA1, DELTA2, DELTA3), names=("D1", "D2", "D3"))

# Per summand: leading variable, the i- and j-step factors, and which minors
# carry the i- and j-exponents.  The second and third rows are cyclic shifts
# of the first (u->v->w, x->y->z, Delta1->Delta2->Delta3).
_SUMMANDS = (
    (u, -(w * x), v * x, 1, 2),
    (v, -(u * y), w * y, 2, 0),
    (w, -(v * z), u * z, 0, 1),
)


def identity_coefficient(k: int, i: int, j: int) -> int:
    return binomial(k, i + j) * binomial(k + i, k) * binomial(k + j, k)


def index_pairs(k: int) -> List[Tuple[int, int]]:
    """``(i, j)`` with ``i, j >= 0`` and ``i + j <= k``; all other coefficients vanish."""
    return [(i, j) for i in range(k + 1) for j in range(k + 1 - i)]


def operator_D(k: int, vars: VarTable = VARS) -> DividedPowerOp:
    return DividedPowerOp.from_orders(vars, {"u": k, "y": k, "z": k})


def base_terms() -> Tuple[RationalSum, RationalSum, RationalSum]:
    """``u/(D2 D3)``, ``v/(D3 D1)``, ``w/(D1 D2)`` as one-term sums."""
    out = []
    for lead, _, _, a, b in _SUMMANDS:
        exps = [0, 0, 0]
        exps[a] = exps[b] = 1
        out.append(RationalSum.of(DELTA, lead, exps))
    return tuple(out)


def build_identity_sums(k: int) -> Tuple[RationalSum, RationalSum, RationalSum]:
    """The three double sums of the identity at ``k``, built term by term."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    sums = []
    for lead, step_i, step_j, a, b in _SUMMANDS:
        lead_pow = lead ** (k + 1)
        terms = []
        for i, j in index_pairs(k):
            num = (step_i ** i) * (step_j ** j) * lead_pow * identity_coefficient(k, i, j)
            exps = [0, 0, 0]
            exps[a] = k + 1 + i
            exps[b] = k + 1 + j
            terms.append(RationalTerm(DELTA, num, tuple(exps)))
        sums.append(RationalSum(DELTA, terms))
    return tuple(sums)


@dataclass
class IdentityReport:
    k: Optional[int]
    cleared: Polynomial
    term_counts: Tuple[int, ...]
    mod_p: Optional[Dict[str, object]] = None

    @property
    def term_count(self) -> int:
        return sum(self.term_counts)

    @property
    def verified(self) -> bool:
        return self.cleared.is_zero()


def verify_identity(k: int) -> IdentityReport:
    sums = build_identity_sums(k)
    total = sums[0] + sums[1] + sums[2]
    cleared = clear_denominators(total, (2 * k + 1,) * 3)
    return IdentityReport(k, cleared, tuple(len(s) for s in sums))


@dataclass
class DerivationReport:
    k: int
    derived: Tuple[RationalSum, ...]
    closed_forms: Tuple[RationalSum, ...]
    matches: Tuple[bool, ...]
    total_is_zero: bool

    @property
    def verified(self) -> bool:
        return all(self.matches) and self.total_is_zero


def derive_via_operator(k: int, strict: bool = True) -> DerivationReport:
    """Apply ``D`` to each term of the base relation and compare with the closed forms.

    With ``strict`` a mismatch raises DerivationMismatchError.
    """
    op = operator_D(k)
    derived = tuple(apply_op_to_sum(op, t) for t in base_terms())
    closed = build_identity_sums(k)
    matches = tuple(sums_equal(d, c) for d, c in zip(derived, closed))
    total_zero = is_zero(derived[0] + derived[1] + derived[2])
    report = DerivationReport(k, derived, closed, matches, total_zero)
    if strict and not report.verified:
        raise DerivationMismatchError(
            f"k={k}: operator output disagrees with closed form (matches={matches}, "
            f"total zero={total_zero})")
    return report


def operators_agree(a: Union[DividedPowerOp, DiffOperator], b: Union[DividedPowerOp, DiffOperator],
                    target: RationalSum) -> bool:
    return sums_equal(apply_op_to_sum(a, target), apply_op_to_sum(b, target))


def commuting_check(max_k: int = 4) -> bool:
    """``(1/k!)^2 d^k_u d^k_y`` and ``(1/k!)^2 d^k_v d^k_x`` agree on ``u/(D2 D3)`` for ``k <= max_k``."""
    target = base_terms()[0]
    for k in range(max_k + 1):
        a = DividedPowerOp.from_orders(VARS, {"u": k, "y": k})
        b = DividedPowerOp.from_orders(VARS, {"v": k, "x": k})
        if not operators_agree(a, b, target):
            return False
    return True


def _check_pe(p: int, e: int, max_pe: int) -> int:
    check_prime(p)
    if e < 1:
        raise DomainError("e must be positive")
    q = p ** e
    if q > max_pe:
        raise SizeError(f"p^e = {q} exceeds the bound {max_pe}")
    return q


def lucas_vanishing_check(p: int, e: int) -> bool:
    """Every coefficient with ``(i, j) != (0, 0)`` vanishes mod p at ``k = p^e - 1``."""
    check_prime(p)
    if e < 1:
        raise DomainError("e must be positive")
    k = p ** e - 1
    return all(identity_coefficient(k, i, j) % p == 0
               for i, j in index_pairs(k) if (i, j) != (0, 0))


def frobenius_sum(q: int) -> Tuple[RationalSum, RationalSum, RationalSum]:
    """``u^q/(D2^q D3^q)``, ``v^q/(D3^q D1^q)``, ``w^q/(D1^q D2^q)``."""
    out = []
    for lead, _, _, a, b in _SUMMANDS:
        exps = [0, 0, 0]
        exps[a] = exps[b] = q
        out.append(RationalSum.of(DELTA, lead ** q, exps))
    return tuple(out)


def mod_p_specialize(p: int, e: int, max_pe: int = DEFAULT_MAX_PE) -> IdentityReport:
    """Reduce the identity at ``k = p^e - 1`` mod p and compare with the q-th power relation.

    The ``mod_p`` field of the report records:
      lucas            coefficient vanishing for (i, j) != (0, 0)
      summand_matches  each cleared double sum agrees mod p with its q-th power term
      total_matches    same for the whole identity
      frobenius_zero   the cleared three-term q-th power sum is 0 mod p
      operator_checks  D mod p sends u*D2^k*D3^k to u^q (and cyclically)
    """
    q = _check_pe(p, e, max_pe)
    k = q - 1
    target = (2 * k + 1,) * 3
    sums = build_identity_sums(k)
    frob = frobenius_sum(q)

    summand_matches = []
    for s, f in zip(sums, frob):
        lhs = clear_denominators(s, target).reduce_mod_p(p)
        rhs = clear_denominators(f, target).reduce_mod_p(p)
        summand_matches.append(lhs == rhs)

    total = sums[0] + sums[1] + sums[2]
    frob_total = frob[0] + frob[1] + frob[2]
    cleared = clear_denominators(total, target)
    total_matches = cleared.reduce_mod_p(p) == clear_denominators(frob_total, target).reduce_mod_p(p)
    frobenius_zero = clear_denominators(frob_total, (q, q, q)).reduce_mod_p(p).is_zero()

    op = operator_D(k)
    operator_checks = []
    for lead, _, _, a, b in _SUMMANDS:
        poly = (lead * DELTA.power(a, k) * DELTA.power(b, k)).reduce_mod_p(p)
        operator_checks.append(apply_to_poly(op, poly) == (lead ** q).reduce_mod_p(p))

    details = {
        "p": p,
        "e": e,
        "k": k,
        "lucas": lucas_vanishing_check(p, e),
        "summand_matches": summand_matches,
        "total_matches": total_matches,
        "frobenius_zero": frobenius_zero,
        "operator_checks": operator_checks,
    }
    details["passed"] = bool(details["lucas"] and all(summand_matches) and total_matches
                             and frobenius_zero and all(operator_checks))
    return IdentityReport(k, cleared, tuple(len(s) for s in sums), details)


def frobenius_power_relation(s: Syzygy, p: int, e: int, max_pe: int = DEFAULT_MAX_PE) -> bool:
    """``sum_i g_i^q f_i^q == 0 mod p`` with ``q = p^e``, computed over ZZ then reduced."""
    q = _check_pe(p, e, max_pe)
    total = Polynomial.zero(s.basis.vars)
    for g, f in zip(s.coeffs, s.basis):
        total = total + (g ** q) * (f ** q)
    return total.reduce_mod_p(p).is_zero()


def determinantal_syzygies() -> Tuple[Syzygy, Syzygy]:
    """The relations ``(u, v, w)`` and ``(x, y, z)`` against the minors."""
    return Syzygy(DELTA, (u, v, w)), Syzygy(DELTA, (x, y, z))


def generate_identity(s: Syzygy, op: Union[DividedPowerOp, DiffOperator]
                      ) -> Tuple[CechCochain, IdentityReport]:
    """Apply ``op`` componentwise to the cocycle of ``s``.

    The report's ``cleared`` polynomial is the cleared top coboundary; it is
    zero exactly when the output is a cocycle, and the vanishing sum of the
    three components is the generated identity.
    """
    cochain = syzygy_to_cocycle(s).apply(op)
    top = coboundary_cleared(cochain)
    (cleared,) = top.values()
    k = None
    if isinstance(op, DividedPowerOp) and len(set(op.orders) - {0}) <= 1:
        k = max(op.orders)
    return cochain, IdentityReport(k, cleared, tuple(len(c) for c in cochain.components.values()))


def identity_at_point(k: int, point: Sequence[int]) -> Fraction:
    """Left side of the identity at an integer point, in exact rationals.

    Uses only scalar arithmetic so it is independent of polynomial expansion.
    """
    pu, pv, pw, px, py, pz = (Fraction(c) for c in point)
    d1 = pv * pz - pw * py
    d2 = pw * px - pu * pz
    d3 = pu * py - pv * px
    if d1 * d2 * d3 == 0:
        raise DomainError(f"point {tuple(point)} lies on a minor's zero set")
    summands = (
        (pu, -pw * px, pv * px, d2, d3),
        (pv, -pu * py, pw * py, d3, d1),
        (pw, -pv * pz, pu * pz, d1, d2),
    )
    total = Fraction(0)
    for lead, a, b, da, db in summands:
        for i, j in index_pairs(k):
            total += (identity_coefficient(k, i, j) * a ** i * b ** j * lead ** (k + 1)
                      / (da ** (k + 1 + i) * db ** (k + 1 + j)))
    return total


def random_points(n: int, rng: random.Random, bound: int = 9) -> List[Tuple[int, ...]]:
    """``n`` random integer points with all three minors nonzero."""
    points = []
    while len(points) < n:
        pt = tuple(rng.randint(-bound, bound) for _ in range(6))
        pu, pv, pw, px, py, pz = pt
        if (pv * pz - pw * py) and (pw * px - pu * pz) and (pu * py - pv * px):
            points.append(pt)
    return points


def random_point_check(k: int, n_points: int = 20, seed: int = 0) -> bool:
    rng = random.Random(seed)
    return all(identity_at_point(k, pt) == 0 for pt in random_points(n_points, rng))
