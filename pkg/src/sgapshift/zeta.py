"""Zeta functions of sofic S-gap shifts and their periodic-point counts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import NonIntegerCoefficient, NormalizationError
from .exact_algebra import IntMatrix, IntPoly, RatFunc, char_poly, trace_powers
from .gapset import GapSpec, ShiftClass, canonicalize, classify
from .presentation import build_presentation
from .spectral import entropy_function

__all__ = [
    "ZetaResult",
    "zeta_closed_form",
    "zeta_from_matrix",
    "periodic_counts",
    "trace_corrected_count",
    "trace_corrected_counts",
    "zeta_result",
    "DEFAULT_SERIES_LENGTH",
]

DEFAULT_SERIES_LENGTH = 20

_ONE_MINUS_T = IntPoly([1, -1])


@dataclass(frozen=True)
class ZetaResult:
    closed_form: RatFunc
    matrix_form: RatFunc
    p: Tuple[int, ...]

    @property
    def routes_agree(self) -> bool:
        return self.closed_form == self.matrix_form


def zeta_closed_form(spec: GapSpec) -> RatFunc:
    """``1 / f_S(1/t)`` for finite S, ``1 / ((1 - t) f_S(1/t))`` otherwise."""
    spec = canonicalize(spec)
    f_inv = entropy_function(spec).reciprocal_substitute()
    zeta = RatFunc(f_inv.den, f_inv.num)
    if not spec.is_finite:
        zeta = RatFunc(zeta.num, zeta.den * _ONE_MINUS_T).cancel(_ONE_MINUS_T)
    return zeta.simplified()


def zeta_from_matrix(spec: GapSpec, A: Optional[IntMatrix] = None) -> RatFunc:
    """``1 / det(Id - tA)``, times ``(1 - t^g)/(1 - t)`` for strictly sofic S.

    ``det(Id - tA)`` is the degree-n reversal of the characteristic polynomial.
    The correction accounts for 0^inf being lifted to g periodic paths (or to
    none, when g does not divide the period).
    """
    spec = canonicalize(spec)
    if A is None:
        A = build_presentation(spec).adjacency
    det_id_minus_tA = char_poly(A).reverse(A.nrows)
    if classify(spec) is ShiftClass.STRICTLY_SOFIC:
        # (1 - t^g) / (1 - t) = 1 + t + ... + t^{g-1}
        zeta = RatFunc(IntPoly([1] * spec.g), det_id_minus_tA)
    else:
        zeta = RatFunc(1, det_id_minus_tA)
    return zeta.simplified()


def _log_derivative(p: IntPoly, N: int) -> List[Fraction]:
    """First N coefficients of p'/p as a power series (p(0) != 0)."""
    c0 = p[0]
    dp = p.derivative()
    out: List[Fraction] = []
    for m in range(N):
        acc = Fraction(dp[m])
        for j in range(1, min(m, p.degree) + 1):
            acc -= p[j] * out[m - j]
        out.append(acc / c0)
    return out


def periodic_counts(zeta: RatFunc, N: int) -> List[int]:
    """p_1..p_N from ``t zeta'/zeta = sum p_n t^n``.

    Each series ``num'/num`` and ``den'/den`` is generated by the linear
    recurrence its polynomial defines; all arithmetic is exact.
    """
    if N < 1:
        raise ValueError("N must be positive")
    num, den = zeta.num, zeta.den
    shift = min(num.low_order(), den.low_order())
    if shift:
        num = IntPoly(num.coeffs[shift:])
        den = IntPoly(den.coeffs[shift:])
    if num[0] == 0 or den[0] == 0 or num[0] != den[0]:
        raise NormalizationError(f"zeta(0) must be 1, got num(0)={num[0]}, den(0)={den[0]}")
    ln = _log_derivative(num, N)
    ld = _log_derivative(den, N)
    out = []
    for n in range(1, N + 1):
        c = ln[n - 1] - ld[n - 1]
        if c.denominator != 1:
            raise NonIntegerCoefficient(f"p_{n} = {c} is not an integer")
        out.append(int(c))
    return out


def trace_corrected_counts(spec: GapSpec, A: IntMatrix, N: int) -> List[int]:
    """p_1..p_N from path counts ``tr(A^n)``.

    For strictly sofic S, 0^inf is the image of g closed paths of length n
    when g divides n and of none otherwise, hence ``- (g - 1)`` or ``+ 1``.
    """
    spec = canonicalize(spec)
    traces = trace_powers(A, N)
    if classify(spec) is not ShiftClass.STRICTLY_SOFIC:
        return traces
    g = spec.g
    return [tr - (g - 1) if n % g == 0 else tr + 1 for n, tr in enumerate(traces, start=1)]


def trace_corrected_count(spec: GapSpec, A: IntMatrix, n: int) -> int:
    return trace_corrected_counts(spec, A, n)[-1]


def zeta_result(spec: GapSpec, N: int = DEFAULT_SERIES_LENGTH) -> ZetaResult:
    spec = canonicalize(spec)
    closed = zeta_closed_form(spec)
    matrix = zeta_from_matrix(spec)
    return ZetaResult(closed_form=closed, matrix_form=matrix, p=tuple(periodic_counts(closed, N)))
