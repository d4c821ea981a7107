"""Aggregate analysis of one spec and the per-spec verification suite."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from .bowen_franks import AbelianGroup, FlowClass, bf_groups, check_theorems_H_M, det_id_minus, flow_class
from .exact_algebra import IntPoly, RatFunc, char_poly
from .gapset import GapSpec, canonicalize, classify, render_spec
from .oracle import PERIODIC_LIMIT, brute_periodic_count
from .presentation import build_presentation, is_irreducible, is_right_resolving, paper_case_matrix
from .spectral import entropy, perron_root, theoremD_report
from .zeta import DEFAULT_SERIES_LENGTH, periodic_counts, trace_corrected_counts, zeta_closed_form, zeta_from_matrix

__all__ = ["AnalysisReport", "analyze", "verify_spec", "render_text", "CHECK_NAMES"]

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

CHECK_NAMES = (
    "right_resolving",
    "irreducible",
    "case_matrix",
    "char_poly_identity",
    "zeta_routes",
    "series_vs_trace",
    "series_vs_brute",
    "entropy_vs_perron",
    "bowen_franks",
)


def _ratfunc_dict(r: RatFunc) -> Dict[str, List[int]]:
    return {"num": list(r.num.coeffs), "den": list(r.den.coeffs)}


@dataclass
class AnalysisReport:
    """Every invariant of one gap spec, as plain JSON-compatible data."""

    spec_canonical: str
    shift_class: str
    case_tag: str
    n_vertices: int
    adjacency: List[List[int]]
    char_poly: List[int]
    entropy: Dict[str, Any]
    f_s: Dict[str, List[int]]
    q_s: Dict[str, List[int]]
    zeta: Dict[str, List[int]]
    periodic_counts: List[int]
    bf: Dict[str, Any]
    bf_t: Dict[str, Any]
    bf1_rank: int
    bf1_t_rank: int
    det_sign: int
    flow: Optional[Dict[str, Any]]
    checks: Dict[str, str] = field(default_factory=dict)
    degenerate: bool = False
    notes: List[str] = field(default_factory=list)

    def to_json(self, indent: int | None = 2) -> str:
        data = asdict(self)
        # the schema names this field "class", which is reserved in Python
        data = {("class" if k == "shift_class" else k): v for k, v in data.items()}
        return json.dumps(data, indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        data = json.loads(text)
        data["shift_class"] = data.pop("class")
        return cls(**data)


def verify_spec(spec: GapSpec, pmax: int = 12, N: int | None = None) -> Dict[str, str]:
    """Run every cross-check on one spec; values are pass/fail/skipped."""
    spec = canonicalize(spec)
    N = max(N or 0, pmax, 1)
    P = build_presentation(spec)
    A = P.adjacency
    checks: Dict[str, str] = {}

    def put(name: str, ok: bool) -> None:
        checks[name] = PASS if ok else FAIL

    put("right_resolving", is_right_resolving(P))
    put("irreducible", is_irreducible(A))
    put("case_matrix", paper_case_matrix(spec) == A)
    put("char_poly_identity", theoremD_report(spec).holds)
    zc = zeta_closed_form(spec)
    put("zeta_routes", zc == zeta_from_matrix(spec, A))
    series = periodic_counts(zc, N)
    put("series_vs_trace", series == trace_corrected_counts(spec, A, N))
    limit = min(pmax, PERIODIC_LIMIT)
    if limit >= 1:
        put("series_vs_brute", series[:limit] == [brute_periodic_count(spec, n) for n in range(1, limit + 1)])
    else:
        checks["series_vs_brute"] = SKIPPED
    put("entropy_vs_perron", abs(entropy(spec).lam - perron_root(A)) <= 1e-9)
    if spec.is_degenerate:
        checks["bowen_franks"] = SKIPPED
    else:
        put("bowen_franks", check_theorems_H_M(spec).passed)
    return checks


def analyze(spec: GapSpec, N: int = DEFAULT_SERIES_LENGTH, pmax: int = 12) -> AnalysisReport:
    original = spec
    spec = canonicalize(spec)
    notes = []
    if spec != original:
        notes.append(f"canonicalized from {render_spec(original)}")
    if spec.is_degenerate:
        notes.append("|S| = 1: flow-equivalence results do not apply; checks skipped")
    P = build_presentation(spec)
    A = P.adjacency
    chi = char_poly(A)
    ent = entropy(spec)
    thm = theoremD_report(spec)
    if thm.adjusted:
        notes.append(
            "0 in S: identity with right side times (x-1)/x "
            + ("holds" if thm.adjusted_holds else "does not hold")
        )
    zc = zeta_closed_form(spec)
    groups = bf_groups(A)
    d = det_id_minus(A)
    flow = None if spec.is_degenerate else flow_class(spec).to_dict()
    return AnalysisReport(
        spec_canonical=render_spec(spec),
        shift_class=classify(spec).value,
        case_tag=P.case_tag.value,
        n_vertices=P.n,
        adjacency=A.tolist(),
        char_poly=list(chi.coeffs),
        entropy={
            "lambda": ent.lam,
            "h_bits": ent.h_bits,
            "residual": ent.residual,
            "cleared_numerator": list(ent.cleared_numerator.coeffs),
        },
        f_s=_ratfunc_dict(thm.f_s),
        q_s=_ratfunc_dict(thm.q_s),
        zeta=_ratfunc_dict(zc),
        periodic_counts=periodic_counts(zc, N),
        bf=groups.bf.to_dict(),
        bf_t=groups.bf_t.to_dict(),
        bf1_rank=groups.bf1_rank,
        bf1_t_rank=groups.bf1_t_rank,
        det_sign=(d > 0) - (d < 0),
        flow=flow,
        checks=verify_spec(spec, pmax=min(pmax, N), N=N),
        degenerate=spec.is_degenerate,
        notes=notes,
    )


def _fmt_ratfunc(d: Dict[str, List[int]], var: str) -> str:
    num, den = IntPoly(d["num"]), IntPoly(d["den"])
    if den[0] < 0:
        num, den = -num, -den
    return f"({num.format(var)}) / ({den.format(var)})"


def render_text(rep: AnalysisReport) -> str:
    rows = [
        ("spec", rep.spec_canonical),
        ("class", rep.shift_class),
        ("case", rep.case_tag),
        ("vertices", str(rep.n_vertices)),
        ("char poly", IntPoly(rep.char_poly).format("x")),
        ("f_S(x)", _fmt_ratfunc(rep.f_s, "x")),
        ("Q_S(x)", _fmt_ratfunc(rep.q_s, "x")),
        ("lambda", f"{rep.entropy['lambda']:.15g}"),
        ("entropy", f"{rep.entropy['h_bits']:.15g} bits"),
        ("zeta(t)", _fmt_ratfunc(rep.zeta, "t")),
        ("p_n", ", ".join(map(str, rep.periodic_counts))),
        ("BF(A)", str(AbelianGroup.from_dict(rep.bf))),
        ("BF^t(A)", str(AbelianGroup.from_dict(rep.bf_t))),
        ("rank BF_1", f"{rep.bf1_rank} (transpose {rep.bf1_t_rank})"),
        ("sgn det(Id-A)", f"{rep.det_sign:+d}"),
        ("flow class", str(FlowClass.from_dict(rep.flow)) if rep.flow else "n/a (|S| = 1)"),
    ]
    width = max(len(k) for k, _ in rows)
    out = [f"{k:<{width}}  {v}" for k, v in rows]
    out.append("adjacency:")
    out += ["  " + " ".join(str(v) for v in r) for r in rep.adjacency]
    out.append("checks:")
    out += [f"  {name:<20} {verdict}" for name, verdict in rep.checks.items()]
    out += [f"note: {n}" for n in rep.notes]
    return "\n".join(out) + "\n"
