"""Entropy function, entropy, and characteristic-polynomial identities."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import ConvergenceError
from .exact_algebra import IntMatrix, IntPoly, RatFunc, X, char_poly
from .gapset import GapSpec, canonicalize
from .presentation import CaseTag, build_presentation

__all__ = [
    "EntropyResult",
    "TheoremDReport",
    "entropy_function",
    "entropy",
    "perron_root",
    "theoremD_report",
    "DEFAULT_TOL",
]

DEFAULT_TOL = 1e-12


def entropy_function(spec: GapSpec) -> RatFunc:
    """``f_S(x) = 1 - sum_{s in S} x^{-(s+1)}`` as an exact rational function.

    Finite S gives ``(x^{s_k+1} - sum x^{s_k - s}) / x^{s_k+1}``.  For infinite
    S the periodic tail sums to a geometric factor ``x^g / (x^g - 1)`` (which is
    ``x / (x - 1)`` in the cofinite case), and everything is put over the
    common denominator ``x^M (x^g - 1)`` with ``M = s_{k+l-1} + 1``.
    """
    spec = canonicalize(spec)
    if spec.is_finite:
        top = spec.last_transient + 1
        num = IntPoly.monomial(top)
        for s in spec.finite_gaps:
            num = num - IntPoly.monomial(top - 1 - s)
        return RatFunc(num, IntPoly.monomial(top))

    k, l, g = spec.k, spec.l, spec.g
    M = spec.s(k + l - 1) + 1
    xg1 = IntPoly.monomial(g) - 1
    num = IntPoly.monomial(M) * xg1
    for i in range(1, k):
        num = num - IntPoly.monomial(M - spec.s(i) - 1) * xg1
    for i in range(k, k + l):
        num = num - IntPoly.monomial(M - spec.s(i) - 1 + g)
    return RatFunc(num, IntPoly.monomial(M) * xg1)


@dataclass(frozen=True)
class EntropyResult:
    lam: float
    h_bits: float
    residual: float
    cleared_numerator: IntPoly

    @property
    def lambda_(self) -> float:
        return self.lam


def _sign_at_dyadic(p: IntPoly, a: int, m: int) -> int:
    """Sign of p(a / 2^m), exactly."""
    acc = 0
    scale = 1
    step = 1 << m
    for c in reversed(p.coeffs):
        acc = acc * a + c * scale
        scale *= step
    # acc = 2^{m d} * p(a/2^m) computed with a shifted Horner scheme
    return (acc > 0) - (acc < 0)


def entropy(spec: GapSpec, tol: float = DEFAULT_TOL, max_steps: int = 400) -> EntropyResult:
    """Bisection on the cleared numerator of f_S over [1, 2].

    Signs are evaluated exactly at dyadic midpoints.  Bisection continues
    until the bracket is narrower than ``tol`` and ``|f_S(mid)| <= tol``
    (or floating point can no longer resolve the midpoint).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    f = entropy_function(spec)
    num = f.num
    # on (1, inf) the denominator is positive, so num has the sign of f_S
    if num(1) == 0:
        lam = 1.0
    elif num(2) == 0:
        lam = 2.0
    else:
        lo, hi, m = 2, 4, 1  # bracket [lo/2^m, hi/2^m] = [1, 2]
        for _ in range(max_steps):
            lo, hi, m = 2 * lo, 2 * hi, m + 1
            mid = (lo + hi) // 2
            if _sign_at_dyadic(num, mid, m) < 0:
                lo = mid
            else:
                hi = mid
            width = (hi - lo) / 2**m
            centre = float(Fraction(lo + hi, 2 ** (m + 1)))
            if width <= tol and abs(f(centre)) <= tol:
                break
            if width < 1e-17:
                break
        lam = float(Fraction(lo + hi, 2 ** (m + 1)))
    residual = abs(float(f(lam))) if lam > 1.0 or spec.is_finite else 0.0
    return EntropyResult(lam=lam, h_bits=math.log2(lam), residual=residual, cleared_numerator=num)


def perron_root(A: IntMatrix, tol: float = 1e-11, max_iter: int = 10_000) -> float:
    """Spectral radius of a nonnegative irreducible matrix.

    Power iteration on ``Id + A`` (primitive, same Perron vector), accelerated
    by repeated squaring.  Stops once the Collatz-Wielandt bounds
    ``min (Av)_i / v_i <= rho <= max (Av)_i / v_i`` are within ``tol``.
    """
    n = A.nrows
    a = np.array(A.tolist(), dtype=float).reshape(n, n)
    B = a + np.eye(n)
    B /= B.max()
    v = np.ones(n)
    for it in range(max_iter):
        w = a @ v
        ratios = w / v
        lo, hi = ratios.min(), ratios.max()
        if hi - lo <= tol:
            return float((lo + hi) / 2)
        if it < 64:
            B = B @ B
            B /= B.max()
            v = B @ np.ones(n)
        else:
            v = v + w
        v /= v.max()
        if not np.all(v > 0):
            raise ConvergenceError("iterate lost positivity; matrix is not irreducible")
    raise ConvergenceError(f"no convergence to {tol} within {max_iter} iterations")


@dataclass(frozen=True)
class TheoremDReport:
    """Outcome of the case-specific identity ``lhs_factor * chi = rhs_factor * f_S``.

    ``lhs`` and ``rhs`` are the identity sides multiplied through by the
    denominator of f_S.  When 0 is in S, ``adjusted`` is set and
    ``adjusted_holds`` records whether the identity with its right side
    multiplied by ``(x - 1)/x`` holds instead.
    """

    case_tag: CaseTag
    chi: IntPoly
    f_s: RatFunc
    q_s: RatFunc
    lhs: IntPoly
    rhs: IntPoly
    holds: bool
    adjusted: bool = False
    adjusted_holds: Optional[bool] = None


def _identity_factors(spec: GapSpec, tag: CaseTag):
    k, l, g = spec.k, spec.l, spec.g
    s = spec.s
    mono = IntPoly.monomial
    if tag is CaseTag.FINITE:
        return IntPoly([1]), mono(s(k) + 1)
    if tag is CaseTag.COFINITE:
        return IntPoly([1]), mono(s(k)) * (X - 1)
    xg1 = mono(g) - 1
    if tag in (CaseTag.WRAP_TO_START, CaseTag.WRAP_TO_START_DOUBLE):
        return IntPoly([1]), xg1
    top = s(k + l - 1)
    if tag is CaseTag.WRAP_INTO_TRANSIENT:
        return mono(g), mono(top + 1) * xg1
    return mono(top - s(k - 1)), mono(top + 1) * xg1


def theoremD_report(spec: GapSpec) -> TheoremDReport:
    spec = canonicalize(spec)
    P = build_presentation(spec)
    chi = char_poly(P.adjacency)
    f = entropy_function(spec)
    lhs_factor, rhs_factor = _identity_factors(spec, P.case_tag)
    lhs = lhs_factor * chi * f.den
    rhs = rhs_factor * f.num
    zero_in_s = spec.s(1) == 0
    adjusted_holds = None
    if zero_in_s:
        adjusted_holds = X * lhs == (X - 1) * rhs
    return TheoremDReport(
        case_tag=P.case_tag,
        chi=chi,
        f_s=f,
        q_s=RatFunc(chi) / f,
        lhs=lhs,
        rhs=rhs,
        holds=lhs == rhs,
        adjusted=zero_in_s,
        adjusted_holds=adjusted_holds,
    )
