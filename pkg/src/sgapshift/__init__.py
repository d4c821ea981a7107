"""Symbolic dynamics of S-gap shifts: presentations, zeta functions, entropy and flow invariants."""

from .bowen_franks import (
    AbelianGroup,
    BFGroups,
    FlowClass,
    bf_groups,
    check_theorems_H_M,
    det_sign,
    flow_class,
    flow_compare,
)
from .errors import (
    CaseDispatchError,
    ConvergenceError,
    DegenerateError,
    DimensionError,
    NonIntegerCoefficient,
    NormalizationError,
    SGapError,
    SpecSyntaxError,
    ValidationError,
)
from .gapset import GapKind, GapSpec, ShiftClass, canonicalize, classify, contains, parse_spec, render_spec
from .presentation import CaseTag, Presentation, build_presentation, case_tag, paper_case_matrix
from .report import AnalysisReport, analyze, verify_spec
from .spectral import EntropyResult, entropy, entropy_function, perron_root, theoremD_report
from .zeta import periodic_counts, trace_corrected_counts, zeta_closed_form, zeta_from_matrix

__version__ = "0.1.0"
