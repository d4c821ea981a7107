"""Smith normal form over the integers (diagonal only, no transforms)."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, Tuple

from .matrix import IntMatrix

__all__ = ["SmithForm", "smith_normal_form", "is_divisibility_chain"]


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d_1 | d_2 | ... with zeros trailing."""

    diag: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d)

    @property
    def zero_count(self) -> int:
        return sum(1 for d in self.diag if d == 0)


def is_divisibility_chain(diag) -> bool:
    seen_zero = False
    for a, b in zip(diag, diag[1:]):
        if a < 0 or b < 0:
            return False
        if a == 0:
            seen_zero = True
        if seen_zero and b != 0:
            return False
        if a and b % a:
            return False
    return all(d >= 0 for d in diag)


def _diagonalize(rows: List[List[int]]) -> List[int]:
    m = len(rows)
    n = len(rows[0]) if m else 0
    diag: List[int] = []
    top = 0
    while top < min(m, n):
        # smallest nonzero |entry| in the active block; |1| ends the scan early
        best = None
        for i in range(top, m):
            ri = rows[i]
            for j in range(top, n):
                v = ri[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            diag.extend([0] * (min(m, n) - top))
            break
        _, pi, pj = best
        rows[top], rows[pi] = rows[pi], rows[top]
        if pj != top:
            for r in rows:
                r[top], r[pj] = r[pj], r[top]

        while True:
            pivot = rows[top][top]
            dirty = False
            prow = rows[top]
            for i in range(top + 1, m):
                v = rows[i][top]
                if v:
                    q = v // pivot
                    ri = rows[i]
                    for j in range(top, n):
                        if prow[j]:
                            ri[j] -= q * prow[j]
                    if ri[top]:
                        dirty = True
            for j in range(top + 1, n):
                v = prow[j]
                if v:
                    q = v // pivot
                    for i in range(top, m):
                        piv_col = rows[i][top]
                        if piv_col:
                            rows[i][j] -= q * piv_col
                    if prow[j]:
                        dirty = True
            if not dirty:
                break
            # a remainder smaller than the pivot survived; move it to the pivot slot
            best = None
            for i in range(top + 1, m):
                v = rows[i][top]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, None)
            for j in range(top + 1, n):
                v = prow[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), None, j)
            _, bi, bj = best
            if bi is not None:
                rows[top], rows[bi] = rows[bi], rows[top]
            else:
                for r in rows:
                    r[top], r[bj] = r[bj], r[top]
        diag.append(abs(rows[top][top]))
        top += 1
    return diag


def _normalize_chain(diag: List[int]) -> List[int]:
    nz = [d for d in diag if d]
    zeros = len(diag) - len(nz)
    # replace every pair by (gcd, lcm) until the chain property holds
    for i in range(len(nz)):
        for j in range(i + 1, len(nz)):
            a, b = nz[i], nz[j]
            g = gcd(a, b)
            nz[i], nz[j] = g, a // g * b
    return nz + [0] * zeros


def smith_normal_form(M: IntMatrix) -> SmithForm:
    """Invariant factors of an integer matrix.

    Elimination picks the smallest nonzero pivot and reduces its row and column
    by integer multiples, re-pivoting on any remainder; the resulting diagonal
    is then rewritten into a divisibility chain with gcd/lcm exchanges.

    >>> smith_normal_form(IntMatrix([[2, 0], [0, 3]])).diag
    (1, 6)
    """
    rows = M.tolist()
    if not rows or not rows[0]:
        return SmithForm(())
    return SmithForm(tuple(_normalize_chain(_diagonalize(rows))))
