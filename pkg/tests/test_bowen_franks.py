import pytest

from sgapshift.bowen_franks import (
    AbelianGroup,
    FlowClass,
    bf_groups,
    check_theorems_H_M,
    det_sign,
    flow_class,
    flow_compare,
)
from sgapshift.errors import DegenerateError, DimensionError
from sgapshift.exact_algebra import IntMatrix
from sgapshift.gapset import GapSpec, ShiftClass, classify, parse_spec
from sgapshift.presentation import build_presentation

S2_12 = GapSpec.delta([2], [1, 2])


def adj(spec):
    return build_presentation(spec).adjacency


def test_bf_examples():
    g = bf_groups(adj(GapSpec.finite([1, 2, 3])))
    assert g.bf.invariant_factors == (2,) and g.bf.free_rank == 0
    assert bf_groups(IntMatrix([[0, 1], [1, 1]])).bf.is_trivial
    assert bf_groups(adj(S2_12)).bf == AbelianGroup((2,))
    with pytest.raises(DimensionError):
        bf_groups(IntMatrix([[1, 2]]))


def test_free_part():
    g = bf_groups(IntMatrix([[1, 0], [0, 3]]))
    assert g.bf == AbelianGroup((2,), 1) and g.bf1_rank == 1
    assert str(g.bf) == "Z + Z_2"


def test_det_sign_examples():
    assert det_sign(IntMatrix([[1, 1], [1, 0]])) == -1
    assert det_sign(IntMatrix([[1]])) == 0
    assert det_sign(adj(S2_12)) == -1


def test_flow_class_examples():
    assert flow_class(GapSpec.finite([1, 2, 3])) == FlowClass(full_shift=3, complete=True)
    assert flow_class(GapSpec.delta([1], [1])) == FlowClass(full_shift=2, complete=True)
    fc = flow_class(S2_12)
    assert fc.group == AbelianGroup((2,)) and fc.det_sign == -1 and not fc.complete
    assert FlowClass.from_dict(fc.to_dict()) == fc
    with pytest.raises(DegenerateError):
        flow_class(GapSpec.finite([4]))


@pytest.mark.parametrize("spec", [GapSpec.finite([1, 2]), GapSpec.delta([1], [2]), S2_12])
def test_bf_checks_examples(spec):
    assert check_theorems_H_M(spec).passed


def test_bf_check_predictions():
    assert check_theorems_H_M(GapSpec.finite([1, 2])).predicted.is_trivial
    assert check_theorems_H_M(GapSpec.delta([1], [2])).predicted.is_trivial
    assert check_theorems_H_M(S2_12).predicted == AbelianGroup((2,))
    with pytest.raises(DegenerateError):
        check_theorems_H_M(GapSpec.finite([0]))


@pytest.mark.parametrize(
    "a, b, equivalent, message",
    [
        ("finite:1,2,3", "finite:0,5,9", True, "flow equivalent: yes"),
        ("finite:1,2", "delta:1|1", True, "flow equivalent: yes"),
        ("finite:1,2", "finite:1,2,3", False, "flow equivalent: no"),
        ("delta:2|1,2", "delta:1|2", False, "invariants differ: not flow equivalent"),
        ("delta:1|2", "finite:1,2", None, "invariants match (not conclusive when matching)"),
    ],
)
def test_flow_compare(a, b, equivalent, message):
    res = flow_compare(parse_spec(a), parse_spec(b))
    assert res.equivalent is equivalent
    assert res.message == message


def test_corpus_bf_predictions(corpus):
    for spec in corpus:
        if spec.is_degenerate:
            continue
        rep = check_theorems_H_M(spec)
        assert rep.passed, (spec, rep.clauses)
        cls = classify(spec)
        if cls is ShiftClass.FINITE_SFT:
            assert rep.predicted == AbelianGroup.cyclic(spec.k - 1)
        elif cls is ShiftClass.STRICTLY_SOFIC:
            assert rep.predicted == AbelianGroup.cyclic(spec.l)


def test_group_rendering():
    assert str(AbelianGroup()) == "0"
    assert str(AbelianGroup((3,))) == "Z_3"
    assert str(AbelianGroup((2, 4), 2)) == "Z^2 + Z_2 + Z_4"
    assert AbelianGroup.from_dict(AbelianGroup((2, 4), 2).to_dict()) == AbelianGroup((2, 4), 2)
