"""Bowen-Franks groups and flow-equivalence invariants."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Tuple

from .errors import DegenerateError, DimensionError
from .exact_algebra import IntMatrix, char_poly, smith_normal_form
from .gapset import GapSpec, ShiftClass, canonicalize, classify
from .presentation import build_presentation

__all__ = [
    "AbelianGroup",
    "BFGroups",
    "FlowClass",
    "bf_groups",
    "det_sign",
    "flow_class",
    "check_theorems_H_M",
    "flow_compare",
]


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^free_rank + Z_{d1} + Z_{d2} + ...`` with d1 | d2 | ... and every d >= 2."""

    invariant_factors: Tuple[int, ...] = ()
    free_rank: int = 0

    @classmethod
    def from_smith_diagonal(cls, diag) -> "AbelianGroup":
        return cls(
            invariant_factors=tuple(d for d in diag if d > 1),
            free_rank=sum(1 for d in diag if d == 0),
        )

    @classmethod
    def cyclic(cls, order: int) -> "AbelianGroup":
        return cls((order,) if order > 1 else ())

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors and self.free_rank == 0

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z_{d}" for d in self.invariant_factors]
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> Dict:
        return {"free_rank": self.free_rank, "factors": list(self.invariant_factors)}

    @classmethod
    def from_dict(cls, d: Dict) -> "AbelianGroup":
        return cls(tuple(d["factors"]), int(d["free_rank"]))


@dataclass(frozen=True)
class BFGroups:
    bf: AbelianGroup
    bf_t: AbelianGroup
    bf1_rank: int
    bf1_t_rank: int


def _id_minus(A: IntMatrix) -> IntMatrix:
    if not A.is_square:
        raise DimensionError(f"square matrix required, got {A.shape}")
    return IntMatrix.identity(A.nrows) - A


def bf_groups(A: IntMatrix) -> BFGroups:
    """Cokernels and kernel ranks of ``Id - A`` acting on rows and on columns."""
    M = _id_minus(A)
    snf = smith_normal_form(M)
    snf_t = smith_normal_form(M.transpose())
    return BFGroups(
        bf=AbelianGroup.from_smith_diagonal(snf.diag),
        bf_t=AbelianGroup.from_smith_diagonal(snf_t.diag),
        bf1_rank=snf.zero_count,
        bf1_t_rank=snf_t.zero_count,
    )


def det_id_minus(A: IntMatrix) -> int:
    """``det(Id - A)``, read off the characteristic polynomial at x = 1."""
    if not A.is_square:
        raise DimensionError(f"square matrix required, got {A.shape}")
    return char_poly(A)(1)


def det_sign(A: IntMatrix) -> int:
    d = det_id_minus(A)
    return (d > 0) - (d < 0)


@dataclass(frozen=True)
class FlowClass:
    """Either a full shift (complete invariant) or a BF/sign pair (not complete)."""

    full_shift: int | None = None
    group: AbelianGroup | None = None
    det_sign: int | None = None
    complete: bool = False

    def __str__(self) -> str:
        if self.full_shift is not None:
            return f"full {self.full_shift}-shift"
        return f"sofic invariants (BF={self.group}, sgn det(Id-A)={self.det_sign:+d}), not complete"

    def to_dict(self) -> Dict:
        if self.full_shift is not None:
            return {"kind": "FullShift", "k": self.full_shift, "complete": True}
        return {
            "kind": "SoficInvariantPair",
            "group": self.group.to_dict(),
            "det_sign": self.det_sign,
            "complete": False,
        }

    @classmethod
    def from_dict(cls, d: Dict) -> "FlowClass":
        if d["kind"] == "FullShift":
            return cls(full_shift=int(d["k"]), complete=True)
        return cls(group=AbelianGroup.from_dict(d["group"]), det_sign=int(d["det_sign"]))


def _require_nondegenerate(spec: GapSpec) -> None:
    if spec.is_degenerate:
        raise DegenerateError(f"{spec}: |S| = 1 is excluded from the flow-equivalence results")


def flow_class(spec: GapSpec) -> FlowClass:
    spec = canonicalize(spec)
    _require_nondegenerate(spec)
    cls = classify(spec)
    if cls is ShiftClass.FINITE_SFT:
        return FlowClass(full_shift=spec.k, complete=True)
    if cls is ShiftClass.COFINITE_SFT:
        return FlowClass(full_shift=2, complete=True)
    A = build_presentation(spec).adjacency
    return FlowClass(group=bf_groups(A).bf, det_sign=det_sign(A), complete=False)


@dataclass(frozen=True)
class BFTheoremReport:
    predicted: AbelianGroup
    groups: BFGroups
    det_id_minus_a: int
    clauses: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.clauses.values())


def predicted_bf(spec: GapSpec) -> AbelianGroup:
    """Z_{|S|-1} for finite S, trivial for cofinite S, Z_l for strictly sofic S."""
    spec = canonicalize(spec)
    cls = classify(spec)
    if cls is ShiftClass.FINITE_SFT:
        return AbelianGroup.cyclic(spec.k - 1)
    if cls is ShiftClass.COFINITE_SFT:
        return AbelianGroup()
    return AbelianGroup.cyclic(spec.l)


def check_theorems_H_M(spec: GapSpec) -> BFTheoremReport:
    spec = canonicalize(spec)
    _require_nondegenerate(spec)
    A = build_presentation(spec).adjacency
    groups = bf_groups(A)
    predicted = predicted_bf(spec)
    d = det_id_minus(A)
    clauses = {
        "bf_matches_prediction": groups.bf == predicted,
        "bf_t_matches_prediction": groups.bf_t == predicted,
        "bf1_trivial": groups.bf1_rank == 0,
        "bf1_t_trivial": groups.bf1_t_rank == 0,
        "det_negative": d < 0,
    }
    return BFTheoremReport(predicted=predicted, groups=groups, det_id_minus_a=d, clauses=clauses)


@dataclass(frozen=True)
class FlowComparison:
    equivalent: bool | None
    invariants_match: bool
    conclusive: bool
    message: str


def flow_compare(a: GapSpec, b: GapSpec) -> FlowComparison:
    """Compare flow invariants; decisive only when both shifts are SFTs."""
    a, b = canonicalize(a), canonicalize(b)
    _require_nondegenerate(a)
    _require_nondegenerate(b)
    Aa = build_presentation(a).adjacency
    Ab = build_presentation(b).adjacency
    match = bf_groups(Aa).bf == bf_groups(Ab).bf and det_sign(Aa) == det_sign(Ab)
    both_sft = classify(a).is_sft and classify(b).is_sft
    if both_sft:
        verdict = "yes" if match else "no"
        return FlowComparison(match, match, True, f"flow equivalent: {verdict}")
    if match:
        return FlowComparison(None, True, False, "invariants match (not conclusive when matching)")
    return FlowComparison(False, False, True, "invariants differ: not flow equivalent")
