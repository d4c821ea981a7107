"""Test corpora of gap specs covering every presentation case."""

from __future__ import annotations

import random
from importlib import resources
from pathlib import Path
from typing import Iterable, List, Optional, Tuple

from .gapset import GapSpec, canonicalize, parse_spec, render_spec
from .presentation import CaseTag, case_tag

__all__ = ["load_corpus", "default_corpus", "random_spec", "generate_corpus", "CorpusEntry"]

CorpusEntry = Tuple[str, GapSpec]


def _parse_lines(lines: Iterable[str]) -> List[CorpusEntry]:
    out = []
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((line, parse_spec(line)))
    return out


def load_corpus(path: str | Path) -> List[CorpusEntry]:
    """Read one spec per line; ``#`` starts a comment.  Entries keep their source text."""
    with open(path, encoding="utf-8") as fh:
        return _parse_lines(fh)


def default_corpus() -> List[CorpusEntry]:
    text = resources.files("sgapshift").joinpath("data/default_corpus.txt").read_text("utf-8")
    return _parse_lines(text.splitlines())


def _small(rng: random.Random, lo: int, hi: int) -> int:
    # skewed toward lo so matrices stay small while still reaching hi
    return min(rng.randint(lo, hi), rng.randint(lo, hi))


def random_spec(
    rng: random.Random,
    max_gap: int = 30,
    max_l: int = 5,
    max_k: int = 3,
    allow_zero: bool = False,
    target: Optional[CaseTag] = None,
) -> GapSpec:
    """Draw a canonical spec; with ``target`` set, retry until it has that case tag."""
    lo = 0 if allow_zero else 1
    while True:
        if target is CaseTag.FINITE or (target is None and rng.random() < 0.25):
            size = rng.randint(1, min(6, max_gap + 1 - lo))
            spec = GapSpec.finite(sorted(rng.sample(range(lo, max_gap + 1), size)))
        else:
            k = 1 if target in (CaseTag.WRAP_TO_START, CaseTag.WRAP_TO_START_DOUBLE) else rng.randint(1, max_k)
            transient = [_small(rng, lo, max_gap)] + [_small(rng, 1, max_gap) for _ in range(k - 1)]
            if target is CaseTag.COFINITE:
                period = [1]
            else:
                period = [_small(rng, 1, max_gap) for _ in range(rng.randint(1, max_l))]
                if target is CaseTag.WRAP_TO_START_DOUBLE and transient[0] + 1 <= max_gap:
                    period[-1] = transient[0] + 1
            spec = canonicalize(GapSpec.delta(transient, period))
        if target is None or case_tag(spec) is target:
            return spec


def generate_corpus(count: int, seed: int = 0, **kwargs) -> List[GapSpec]:
    """``count`` distinct specs, cycling through all six case tags."""
    rng = random.Random(seed)
    tags = list(CaseTag)
    seen = set()
    out: List[GapSpec] = []
    i = 0
    while len(out) < count:
        spec = random_spec(rng, target=tags[i % len(tags)], **kwargs)
        i += 1
        key = render_spec(spec)
        if key not in seen:
            seen.add(key)
            out.append(spec)
    return out
