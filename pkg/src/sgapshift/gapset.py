"""Gap sets S and their eventually periodic difference sequences.

A gap set is either a finite list ``s_1 < ... < s_k`` or an eventually
periodic difference sequence ``d_1, ..., d_k, (g_1, ..., g_l)*`` with
``s_1 = d_1`` and ``s_i = s_{i-1} + d_i``.  The set S is the single source of
truth; everything downstream (presentations, polynomials, oracles) is derived
from membership queries.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import SpecSyntaxError, ValidationError

__all__ = [
    "GapKind",
    "ShiftClass",
    "GapSpec",
    "parse_spec",
    "canonicalize",
    "classify",
    "contains",
    "exists_gap_at_least",
    "indicator",
    "render_spec",
]


class GapKind(enum.Enum):
    FINITE = "Finite"
    EVENTUALLY_PERIODIC = "EventuallyPeriodic"


class ShiftClass(enum.Enum):
    FINITE_SFT = "FiniteSFT"
    COFINITE_SFT = "CofiniteSFT"
    STRICTLY_SOFIC = "StrictlySofic"

    @property
    def is_sft(self) -> bool:
        return self is not ShiftClass.STRICTLY_SOFIC


@dataclass(frozen=True)
class GapSpec:
    """Finite description of a gap set S.

    Use :meth:`finite` / :meth:`delta` to build validated instances; the
    plain constructor does no checking.
    """

    kind: GapKind
    finite_gaps: Tuple[int, ...] = ()
    transient: Tuple[int, ...] = ()
    period: Tuple[int, ...] = ()

    @classmethod
    def finite(cls, gaps: Sequence[int]) -> "GapSpec":
        gaps = tuple(int(s) for s in gaps)
        if not gaps:
            raise ValidationError("finite gap list must be nonempty")
        if gaps[0] < 0:
            raise ValidationError(f"gaps must be nonnegative, got {gaps[0]}")
        for a, b in zip(gaps, gaps[1:]):
            if b <= a:
                raise ValidationError(f"finite gaps must be strictly increasing: {a} then {b}")
        return cls(GapKind.FINITE, finite_gaps=gaps)

    @classmethod
    def delta(cls, transient: Sequence[int], period: Sequence[int]) -> "GapSpec":
        transient = tuple(int(d) for d in transient)
        period = tuple(int(g) for g in period)
        if not transient:
            raise ValidationError("transient part must be nonempty (d_1 = s_1)")
        if not period:
            raise ValidationError("period must be nonempty")
        if transient[0] < 0:
            raise ValidationError(f"d_1 = s_1 must be >= 0, got {transient[0]}")
        for i, d in enumerate(transient[1:], start=2):
            if d < 1:
                raise ValidationError(f"d_{i} must be >= 1, got {d}")
        for i, g in enumerate(period, start=1):
            if g < 1:
                raise ValidationError(f"g_{i} must be >= 1, got {g}")
        return cls(GapKind.EVENTUALLY_PERIODIC, transient=transient, period=period)

    # -- derived accessors -------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.kind is GapKind.FINITE

    @property
    def k(self) -> int:
        """Length of the finite list, or of the transient part."""
        return len(self.finite_gaps) if self.is_finite else len(self.transient)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.period)

    @property
    def g(self) -> int:
        """Sum of the period; the eventual period of the membership indicator."""
        return sum(self.period)

    @property
    def cardinality(self) -> Optional[int]:
        """|S|, or None when S is infinite."""
        return len(self.finite_gaps) if self.is_finite else None

    @property
    def is_degenerate(self) -> bool:
        """True when |S| = 1, which the flow-equivalence results exclude."""
        return self.cardinality == 1

    @property
    def last_transient(self) -> int:
        """s_k: the largest element for finite S, else the last transient element."""
        if self.is_finite:
            return self.finite_gaps[-1]
        return sum(self.transient)

    def s(self, i: int) -> int:
        """The i-th smallest element of S (1-based); ``s(0) == 0`` by convention."""
        if i < 0:
            raise IndexError(i)
        if i == 0:
            return 0
        if self.is_finite:
            return self.finite_gaps[i - 1]
        if i <= self.k:
            return sum(self.transient[:i])
        q, r = divmod(i - self.k, self.l)
        return self.last_transient + q * self.g + sum(self.period[:r])

    def elements(self, upto: int) -> List[int]:
        """All elements of S that are <= ``upto``."""
        return list(self._iter_elements(upto))

    def _iter_elements(self, upto: int) -> Iterator[int]:
        i = 1
        while True:
            if self.is_finite and i > self.k:
                return
            s = self.s(i)
            if s > upto:
                return
            yield s
            i += 1

    def __contains__(self, j: int) -> bool:
        return contains(self, j)

    def __str__(self) -> str:
        return render_spec(self)


_FINITE_RE = re.compile(r"^finite:(\d+(?:,\d+)*)$")
_DELTA_RE = re.compile(r"^delta:(\d+(?:,\d+)*)\|(\d+(?:,\d+)*)$")


def parse_spec(text: str) -> GapSpec:
    """Parse ``finite: 1,2`` or ``delta: 2 | 1,2`` into a canonical spec.

    >>> parse_spec("delta: 2 | 1,2")
    GapSpec(kind=<GapKind.EVENTUALLY_PERIODIC: 'EventuallyPeriodic'>, finite_gaps=(), transient=(2,), period=(1, 2))
    """
    compact = re.sub(r"\s+", "", text)
    m = _FINITE_RE.match(compact)
    if m:
        return canonicalize(GapSpec.finite(int(t) for t in m.group(1).split(",")))
    m = _DELTA_RE.match(compact)
    if m:
        transient = [int(t) for t in m.group(1).split(",")]
        period = [int(t) for t in m.group(2).split(",")]
        return canonicalize(GapSpec.delta(transient, period))
    raise SpecSyntaxError(
        f"cannot parse {text!r}; expected 'finite: n,n,...' or 'delta: d,d,... | g,g,...'"
    )


def render_spec(spec: GapSpec) -> str:
    if spec.is_finite:
        return "finite:" + ",".join(map(str, spec.finite_gaps))
    return "delta:" + ",".join(map(str, spec.transient)) + "|" + ",".join(map(str, spec.period))


def _primitive_root(seq: Tuple[int, ...]) -> Tuple[int, ...]:
    n = len(seq)
    for p in range(1, n + 1):
        if n % p == 0 and seq == seq[:p] * (n // p):
            return seq[:p]
    return seq


def canonicalize(spec: GapSpec) -> GapSpec:
    """Primitive period and shortest transient, with the same set S."""
    if spec.is_finite:
        return spec
    transient = list(spec.transient)
    period = list(_primitive_root(spec.period))
    # s_k = s_{k-1} + g_l means s_k already belongs to the rotated periodic tail
    while len(transient) > 1 and transient[-1] == period[-1]:
        transient.pop()
        period = [period[-1]] + period[:-1]
    return GapSpec(GapKind.EVENTUALLY_PERIODIC, transient=tuple(transient), period=tuple(period))


def classify(spec: GapSpec) -> ShiftClass:
    if spec.is_finite:
        return ShiftClass.FINITE_SFT
    if _primitive_root(spec.period) == (1,):
        return ShiftClass.COFINITE_SFT
    return ShiftClass.STRICTLY_SOFIC


def contains(spec: GapSpec, j: int) -> bool:
    """Membership test ``j in S``."""
    if j < 0:
        return False
    if spec.is_finite:
        return j in spec.finite_gaps
    prefix = list(accumulate(spec.transient))
    sk = prefix[-1]
    if j <= sk:
        return j in prefix
    offsets = set(accumulate(spec.period[:-1], initial=0))
    return (j - sk) % spec.g in offsets


def exists_gap_at_least(spec: GapSpec, a: int) -> bool:
    """True iff some s in S satisfies s >= a."""
    if not spec.is_finite:
        return True
    return spec.finite_gaps[-1] >= a


def indicator(spec: GapSpec, length: int) -> List[int]:
    """Membership indicator ``[1 if j in S else 0 for j in range(length)]``."""
    marks = [0] * length
    for s in spec.elements(length - 1):
        marks[s] = 1
    return marks
