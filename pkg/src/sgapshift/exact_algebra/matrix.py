"""Dense integer matrices with exact determinants and characteristic polynomials."""

from __future__ import annotations

from functools import lru_cache
from math import isqrt, prod
from typing import Iterable, List, Sequence

import numpy as np

from ..errors import DimensionError
from .poly import IntPoly

__all__ = [
    "IntMatrix",
    "det",
    "char_poly",
    "trace_power",
    "trace_powers",
    "lemma1_det",
    "lemma1_matrix",
]


class IntMatrix:
    """Immutable rectangular matrix of Python integers."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(int(v) for v in row) for row in rows)
        ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise DimensionError("ragged rows")
        self._rows = data
        self.nrows = len(data)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "IntMatrix":
        return cls([[0] * c for _ in range(r)])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int):
        return self._rows[i]

    def tolist(self) -> List[List[int]]:
        return [list(r) for r in self._rows]

    def to_numpy(self, dtype=object) -> np.ndarray:
        return np.array(self.tolist(), dtype=dtype).reshape(self.shape)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self._rows)) if self.nrows else IntMatrix.zeros(self.ncols, 0)

    T = property(transpose)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return IntMatrix([a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([-a for a in r] for r in self._rows)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other._rows))
        return IntMatrix([sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()})"

    def trace(self) -> int:
        self._require_square()
        return sum(self._rows[i][i] for i in range(self.nrows))

    def _require_square(self) -> None:
        if not self.is_square:
            raise DimensionError(f"square matrix required, got {self.shape}")


def _as_rows(M) -> List[list]:
    if isinstance(M, IntMatrix):
        return M.tolist()
    return [list(r) for r in M]


def det(M) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Works over any exact ring whose ``//`` is exact division, so nested lists
    of :class:`IntPoly` are accepted as well as :class:`IntMatrix`.
    """
    rows = _as_rows(M)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0 * rows[k][k]
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            lead = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - lead * rk[j]) // prev
        prev = pivot
    return sign * rows[n - 1][n - 1]


# -- characteristic polynomial: Hessenberg reduction modulo primes + CRT ----

# Residues stay below 2**26 so products (< 2**52) summed over <= 2**11 terms
# fit in int64.
_PRIME_CEILING = 1 << 26
_MAX_DIM_INT64 = 1 << 11


@lru_cache(maxsize=None)
def _prime(index: int) -> int:
    start = _PRIME_CEILING - 1 if index == 0 else _prime(index - 1) - 2
    c = start if start % 2 else start - 1
    while True:
        if all(c % q for q in range(3, isqrt(c) + 1, 2)):
            return c
        c -= 2


def _charpoly_mod(A: np.ndarray, p: int) -> List[int]:
    n = A.shape[0]
    H = A.copy()
    for j in range(n - 2):
        col = H[j + 1 :, j]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        r = j + 1 + int(nz[0])
        if r != j + 1:
            H[[r, j + 1], :] = H[[j + 1, r], :]
            H[:, [r, j + 1]] = H[:, [j + 1, r]]
        inv = pow(int(H[j + 1, j]), p - 2, p)
        u = (H[j + 2 :, j] * inv) % p
        if not u.any():
            continue
        H[j + 2 :, :] = (H[j + 2 :, :] - (u[:, None] * H[j + 1, :][None, :]) % p) % p
        H[:, j + 1] = (H[:, j + 1] + (H[:, j + 2 :] @ u) % p) % p

    # charpoly of upper Hessenberg H via the standard column recurrence
    P = np.zeros((n + 1, n + 1), dtype=np.int64)
    P[0, 0] = 1
    for m in range(1, n + 1):
        nxt = np.zeros(n + 1, dtype=np.int64)
        nxt[1:] = P[m - 1, :-1]
        nxt = (nxt - (int(H[m - 1, m - 1]) * P[m - 1]) % p) % p
        if m > 1:
            w = np.zeros(m - 1, dtype=np.int64)
            run = 1
            for i in range(m - 1, 0, -1):
                run = run * int(H[i, i - 1]) % p
                if run == 0:
                    break
                w[i - 1] = int(H[i - 1, m - 1]) * run % p
            if w.any():
                nxt = (nxt - (w @ P[: m - 1]) % p) % p
        P[m] = nxt
    return [int(c) for c in P[n]]


def _coefficient_bound(rows: Sequence[Sequence[int]]) -> int:
    # every coefficient is a signed sum of principal minors; Hadamard bounds each
    return prod(1 + isqrt(sum(v * v for v in r)) + 1 for r in rows)


def char_poly(A: IntMatrix) -> IntPoly:
    """Monic ``det(x*Id - A)`` with exact integer coefficients.

    Computed modulo a sequence of primes (similarity reduction to Hessenberg
    form, then the Hessenberg recurrence) and lifted by the Chinese remainder
    theorem until the modulus exceeds twice a Hadamard coefficient bound.
    """
    A._require_square()
    n = A.nrows
    if n == 0:
        return IntPoly([1])
    if n > _MAX_DIM_INT64:
        raise DimensionError(f"char_poly supports n <= {_MAX_DIM_INT64}, got {n}")
    rows = A.tolist()
    bound = 2 * _coefficient_bound(rows) + 1
    coeffs = [0] * (n + 1)
    modulus = 1
    idx = 0
    while modulus <= bound:
        p = _prime(idx)
        idx += 1
        Ap = np.array([[v % p for v in r] for r in rows], dtype=np.int64)
        res = _charpoly_mod(Ap, p)
        inv = pow(modulus % p, p - 2, p)
        coeffs = [c + modulus * (((r - c) * inv) % p) for c, r in zip(coeffs, res)]
        modulus *= p
    half = modulus // 2
    return IntPoly(c - modulus if c > half else c for c in coeffs)


# -- traces ------------------------------------------------------------------

def _int64_safe(A: IntMatrix, power: int) -> bool:
    if A.nrows > _MAX_DIM_INT64:
        return False
    r = max((sum(abs(v) for v in row) for row in A.tolist()), default=0)
    # |entries of A^m| <= r^m; keep every partial sum below 2**62
    return A.nrows * max(r, 1) ** (power + 1) < (1 << 62)


def trace_powers(A: IntMatrix, N: int) -> List[int]:
    """``[tr(A), tr(A^2), ..., tr(A^N)]`` by repeated exact multiplication."""
    A._require_square()
    if N < 1:
        return []
    dtype = np.int64 if _int64_safe(A, N) else object
    base = A.to_numpy(dtype)
    M = base.copy()
    out = [int(np.trace(M))]
    for _ in range(N - 1):
        M = M @ base
        out.append(int(np.trace(M)))
    return out


def trace_power(A: IntMatrix, n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return trace_powers(A, n)[-1]


# -- the special determinant used to expand x*Id - A along its first row ----

def _check_pivots(n: int, pivot_rows) -> List[int]:
    if n < 1:
        raise ValueError("diag must be nonempty")
    pivots = sorted(set(int(i) for i in pivot_rows))
    if not pivots:
        raise ValueError("pivot_rows must be nonempty")
    bad = [i for i in pivots if not 1 <= i <= n]
    if bad:
        raise IndexError(f"pivot rows {bad} outside 1..{n}")
    return pivots


def lemma1_matrix(diag: Sequence, pivot_rows) -> List[list]:
    """Assemble the n x n matrix the closed form refers to (1-based pivots).

    Column 1 holds -1 exactly at the pivot rows and 0 elsewhere, so ``diag[0]``
    is not used; ``diag[1:]`` fills positions (2,2)..(n,n) and the
    superdiagonal is -1.
    """
    n = len(diag)
    pivots = set(_check_pivots(n, pivot_rows))
    zero = 0 * diag[0]
    E = [[zero] * n for _ in range(n)]
    for i in range(n):
        if i >= 1:
            E[i][i] = diag[i]
        if i + 1 < n:
            E[i][i + 1] = zero - 1
        if i + 1 in pivots:
            E[i][0] = zero - 1
    return E


def lemma1_det(diag: Sequence, pivot_rows) -> IntPoly:
    """Closed-form determinant ``-sum_r prod_{i > l_r} e_ii`` of :func:`lemma1_matrix`.

    A pivot at row n contributes the empty product, i.e. the term -1.
    """
    n = len(diag)
    pivots = _check_pivots(n, pivot_rows)
    total = 0 * diag[0]
    for ell in pivots:
        term = 1
        for i in range(ell, n):  # 0-based indices of rows ell+1..n
            term = diag[i] * term
        total = total - term
    return total
