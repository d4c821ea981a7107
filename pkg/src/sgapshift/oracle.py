"""Brute-force ground truth computed straight from the definition of X(S).

Nothing here uses the closed forms; the only shared code is membership in S.
Block counting has a second mode that walks a determinized presentation, so
the two counting modes can be checked against each other.
"""

from __future__ import annotations

import math
from itertools import product
from typing import Dict, FrozenSet, Iterator, Sequence, Tuple

from .gapset import GapSpec, contains, exists_gap_at_least
from .presentation import build_presentation

__all__ = [
    "is_admissible_block",
    "count_blocks",
    "count_blocks_enumerate",
    "count_blocks_automaton",
    "brute_periodic_count",
    "entropy_estimate",
    "ENUMERATION_LIMIT",
]

ENUMERATION_LIMIT = 24
PERIODIC_LIMIT = 16

Block = Sequence[int]


def _as_bits(w) -> Tuple[int, ...]:
    if isinstance(w, str):
        return tuple(int(c) for c in w)
    return tuple(int(b) for b in w)


def is_admissible_block(spec: GapSpec, w) -> bool:
    """Does ``w`` occur in some point of X(S)?

    Interior zero-runs must have length in S; a leading or trailing run of
    length a only needs some gap >= a to extend into.
    """
    bits = _as_bits(w)
    ones = [i for i, b in enumerate(bits) if b]
    if not ones:
        return exists_gap_at_least(spec, len(bits))
    if not exists_gap_at_least(spec, ones[0]):
        return False
    if not exists_gap_at_least(spec, len(bits) - 1 - ones[-1]):
        return False
    return all(contains(spec, b - a - 1) for a, b in zip(ones, ones[1:]))


def count_blocks_enumerate(spec: GapSpec, n: int) -> int:
    if n > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration mode is limited to n <= {ENUMERATION_LIMIT}")
    return sum(1 for w in product((0, 1), repeat=n) if is_admissible_block(spec, w))


def count_blocks_automaton(spec: GapSpec, n: int) -> int:
    """Count distinct labels of length-n paths via subset construction."""
    P = build_presentation(spec)
    step: Dict[Tuple[int, int], list] = {}
    for src, dst, lab in P.edges:
        step.setdefault((src, lab), []).append(dst)

    def move(state: FrozenSet[int], lab: int) -> FrozenSet[int]:
        return frozenset(d for v in state for d in step.get((v, lab), ()))

    layer: Dict[FrozenSet[int], int] = {frozenset(range(P.n)): 1}
    for _ in range(n):
        nxt: Dict[FrozenSet[int], int] = {}
        for state, cnt in layer.items():
            for lab in (0, 1):
                t = move(state, lab)
                if t:
                    nxt[t] = nxt.get(t, 0) + cnt
        layer = nxt
    return sum(layer.values())


def count_blocks(spec: GapSpec, n: int) -> int:
    """|B_n(X(S))|: enumeration for n <= 16, automaton counting beyond."""
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 16:
        return count_blocks_enumerate(spec, n)
    return count_blocks_automaton(spec, n)


def _cyclic_words(n: int) -> Iterator[int]:
    return iter(range(1 << n))


def brute_periodic_count(spec: GapSpec, n: int) -> int:
    """Number of words w of length n with w^inf in X(S), i.e. points of period n."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > PERIODIC_LIMIT:
        raise ValueError(f"brute force is limited to n <= {PERIODIC_LIMIT}")
    in_s = [contains(spec, j) for j in range(n)]
    infinite = not spec.is_finite
    count = 0
    for word in _cyclic_words(n):
        if word == 0:
            count += infinite  # 0^inf lies in X(S) only for infinite S
            continue
        ones = [i for i in range(n) if word >> i & 1]
        ok = True
        for a, b in zip(ones, ones[1:] + [ones[0] + n]):
            if not in_s[b - a - 1]:
                ok = False
                break
        count += ok
    return count


def entropy_estimate(spec: GapSpec, n: int) -> float:
    """``log2 |B_n| / n``, an upper bound on the entropy in bits."""
    return math.log2(count_blocks(spec, n)) / n
