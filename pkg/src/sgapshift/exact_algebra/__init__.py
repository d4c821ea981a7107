"""Exact integer polynomials, rational functions, matrices and Smith forms."""

from .matrix import (
    IntMatrix,
    char_poly,
    det,
    lemma1_det,
    lemma1_matrix,
    trace_power,
    trace_powers,
)
from .poly import ONE, X, ZERO, IntPoly, RatFunc, poly_gcd
from .smith import SmithForm, is_divisibility_chain, smith_normal_form

__all__ = [
    "IntPoly",
    "RatFunc",
    "IntMatrix",
    "SmithForm",
    "X",
    "ONE",
    "ZERO",
    "char_poly",
    "det",
    "lemma1_det",
    "lemma1_matrix",
    "poly_gcd",
    "smith_normal_form",
    "is_divisibility_chain",
    "trace_power",
    "trace_powers",
]
