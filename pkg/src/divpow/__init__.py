"""Exact divided-power differential operators on rational terms over ZZ[x_1, ..., x_d].

The determinantal identity on the minors of a generic 2x3 matrix lives in
:mod:`divpow.identity`; the generic machinery is split into ``ring``
(polynomials), ``diffop`` (operators), ``ratfun`` (rational terms) and
``cech`` (cochains and syzygies).
"""

from .cech import CechCochain, Syzygy, coboundary, is_cocycle, syzygy_to_cocycle
from .diffop import (DiffOperator, DividedPowerOp, apply_to_monomial, apply_to_poly, compose,
                     leibniz_expand)
from .errors import (DerivationMismatchError, DivisibilityError, DivpowError, DomainError,
                     EngineError, IncompatibleOperandsError, NoHigherDegreeError, ParseError,
                     SizeError, UndeclaredVariableError, UnderflowError, UnsupportedSizeError)
from .expr import parse_operator, parse_poly, render_operator, render_poly
from .ratfun import (DenomBasis, RationalSum, RationalTerm, apply_divpow_to_term, apply_op_to_sum,
                     clear_denominators, diff_term, is_zero)
from .ring import (Polynomial, VarTable, binomial, poly_add, poly_exact_div, poly_mul, poly_pow,
                   reduce_mod_p)

__version__ = "0.1.0"

__all__ = [
    "CechCochain", "DenomBasis", "DerivationMismatchError", "DiffOperator", "DividedPowerOp",
    "DivisibilityError", "DivpowError", "DomainError", "EngineError", "IncompatibleOperandsError",
    "NoHigherDegreeError", "ParseError", "Polynomial", "RationalSum", "RationalTerm", "SizeError",
    "Syzygy", "UndeclaredVariableError", "UnderflowError", "UnsupportedSizeError", "VarTable",
    "apply_divpow_to_term", "apply_op_to_sum", "apply_to_monomial", "apply_to_poly", "binomial",
    "clear_denominators", "coboundary", "compose", "diff_term", "is_cocycle", "is_zero",
    "leibniz_expand", "parse_operator", "parse_poly", "poly_add", "poly_exact_div", "poly_mul",
    "poly_pow", "reduce_mod_p", "render_operator", "render_poly", "syzygy_to_cocycle",
]
