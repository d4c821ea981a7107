"""Minimal right-resolving presentations of sofic S-gap shifts.

Vertex ``i`` (0-based) stands for the follower set of the word ``1 0^i``;
vertex 0 is the follower set of ``1``.  Two such follower sets coincide iff
the shifted membership indicators ``j -> [i + j in S]`` agree, which is
decided on a finite window because the indicator is eventually periodic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import CaseDispatchError
from .exact_algebra import IntMatrix
from .gapset import GapSpec, ShiftClass, canonicalize, classify, contains, indicator

__all__ = [
    "CaseTag",
    "Presentation",
    "build_presentation",
    "paper_case_matrix",
    "case_tag",
    "is_right_resolving",
    "is_irreducible",
    "to_dot",
]


class CaseTag(enum.Enum):
    FINITE = "FiniteCase"
    COFINITE = "CofiniteCase"
    WRAP_TO_START_DOUBLE = "Case_2_1_1a"
    WRAP_TO_START = "Case_2_1_1b"
    WRAP_PAST_TRANSIENT = "Case_2_1_2"
    WRAP_INTO_TRANSIENT = "Case_2_1_3"


Edge = Tuple[int, int, int]


@dataclass(frozen=True)
class Presentation:
    n: int
    edges: Tuple[Edge, ...]
    adjacency: IntMatrix
    case_tag: CaseTag

    def out_edges(self, v: int) -> List[Edge]:
        return [e for e in self.edges if e[0] == v]

    def successor(self, v: int, label: int) -> Optional[int]:
        for src, dst, lab in self.edges:
            if src == v and lab == label:
                return dst
        return None


def _window(spec: GapSpec) -> int:
    # past s_k the indicator has period g, so preperiod + 2 periods separates tails
    if spec.is_finite:
        return spec.last_transient + 1
    return spec.last_transient + 2 * spec.g + 1


def build_presentation(spec: GapSpec) -> Presentation:
    """Follower-set construction: the ground truth for the adjacency matrix."""
    spec = canonicalize(spec)
    tag = case_tag(spec)
    if spec.is_finite:
        n = spec.last_transient + 1
        edges = [(i, i + 1, 0) for i in range(n - 1)]
        edges += [(s, 0, 1) for s in spec.finite_gaps]
        return _finish(n, edges, tag)

    w = _window(spec)
    marks = indicator(spec, 2 * w + 1)
    seen: Dict[Tuple[int, ...], int] = {}
    i = 0
    while True:
        tail = tuple(marks[i : i + w])
        if tail in seen:
            back = seen[tail]
            break
        seen[tail] = i
        i += 1
    n = i
    edges = [(v, v + 1, 0) for v in range(n - 1)] + [(n - 1, back, 0)]
    edges += [(v, 0, 1) for v in range(n) if marks[v]]
    return _finish(n, edges, tag)


def _finish(n: int, edges: List[Edge], tag: CaseTag) -> Presentation:
    adj = [[0] * n for _ in range(n)]
    for src, dst, _ in edges:
        adj[src][dst] += 1
    edges.sort()
    return Presentation(n=n, edges=tuple(edges), adjacency=IntMatrix(adj), case_tag=tag)


def case_tag(spec: GapSpec) -> CaseTag:
    spec = canonicalize(spec)
    cls = classify(spec)
    if cls is ShiftClass.FINITE_SFT:
        return CaseTag.FINITE
    if cls is ShiftClass.COFINITE_SFT:
        return CaseTag.COFINITE
    k = spec.k
    s1 = spec.s(1)
    g_last = spec.period[-1]
    d_last = spec.transient[-1]
    if k == 1 and g_last > s1:
        return CaseTag.WRAP_TO_START_DOUBLE if g_last == s1 + 1 else CaseTag.WRAP_TO_START
    if g_last <= d_last:
        return CaseTag.WRAP_INTO_TRANSIENT
    if k != 1:
        return CaseTag.WRAP_PAST_TRANSIENT
    raise CaseDispatchError(f"no case applies to {spec}")


def paper_case_matrix(spec: GapSpec) -> IntMatrix:
    """Adjacency matrix assembled from the closed-form size and wrap column.

    Rows ``i`` with ``i - 1 in S`` (1-based) get a 1 in column 1, rows
    1..n-1 get a superdiagonal 1, and the last row gets the 0-labelled
    return edge in the column the case formula names.  Entries add, so a
    return edge to column 1 from a row whose index is also in S yields 2.
    """
    spec = canonicalize(spec)
    tag = case_tag(spec)
    k, l, g = spec.k, spec.l, spec.g
    s = spec.s
    wrap: Optional[int]  # 1-based column of the last row's 0-edge
    if tag is CaseTag.FINITE:
        n, wrap = s(k) + 1, None
    elif tag is CaseTag.COFINITE:
        n = s(k) + 1
        wrap = n
    elif tag is CaseTag.WRAP_TO_START_DOUBLE:
        n, wrap = s(l) + 1, 1
    elif tag is CaseTag.WRAP_TO_START:
        n, wrap = g, 1
    elif tag is CaseTag.WRAP_PAST_TRANSIENT:
        n, wrap = g + s(k - 1) + 1, s(k - 1) + 2
    elif tag is CaseTag.WRAP_INTO_TRANSIENT:
        n, wrap = s(k + l - 1) + 1, s(k) - spec.period[-1] + 2
    else:  # pragma: no cover
        raise CaseDispatchError(tag)

    A = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        if contains(spec, i - 1):
            A[i - 1][0] += 1
        if i < n:
            A[i - 1][i] = 1
    if wrap is not None:
        A[n - 1][wrap - 1] += 1
    return IntMatrix(A)


def is_right_resolving(P: Presentation) -> bool:
    seen = set()
    for src, _, lab in P.edges:
        if (src, lab) in seen:
            return False
        seen.add((src, lab))
    return True


def is_irreducible(A: IntMatrix) -> bool:
    """Strong connectivity of the graph with adjacency ``A``."""
    n = A.nrows
    if n == 0:
        return False
    fwd = [[j for j in range(n) if A[i, j]] for i in range(n)]
    bwd = [[j for j in range(n) if A[j, i]] for i in range(n)]
    for nbrs in (fwd, bwd):
        reached = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in nbrs[v]:
                if u not in reached:
                    reached.add(u)
                    stack.append(u)
        if len(reached) != n:
            return False
    return True


def follower_tails(spec: GapSpec, P: Presentation) -> List[Tuple[int, ...]]:
    """Indicator tail identifying each vertex's follower set."""
    spec = canonicalize(spec)
    w = _window(spec)
    marks = indicator(spec, P.n + w + 1)
    if spec.is_finite:
        # a finite tail also records where admissible zero-runs stop
        return [tuple(marks[i : spec.last_transient + 1]) for i in range(P.n)]
    return [tuple(marks[i : i + w]) for i in range(P.n)]


def to_dot(P: Presentation, name: str = "S") -> str:
    lines = [f'digraph "{name}" {{', "  rankdir=LR;"]
    for v in range(P.n):
        label = "1" if v == 0 else f"10^{v}"
        lines.append(f'  v{v} [label="F({label})"];')
    for src, dst, lab in P.edges:
        lines.append(f'  v{src} -> v{dst} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
