import pytest
from hypothesis import given, strategies as st

from sgapshift.errors import SpecSyntaxError, ValidationError
from sgapshift.gapset import (
    GapKind,
    GapSpec,
    ShiftClass,
    canonicalize,
    classify,
    contains,
    exists_gap_at_least,
    parse_spec,
    render_spec,
)


def test_parse_finite():
    spec = parse_spec("finite: 1,2")
    assert spec.kind is GapKind.FINITE
    assert spec.finite_gaps == (1, 2)


def test_parse_delta():
    spec = parse_spec("delta: 2 | 1,2")
    assert spec.kind is GapKind.EVENTUALLY_PERIODIC
    assert (spec.transient, spec.period) == ((2,), (1, 2))
    assert spec.elements(10) == [2, 3, 5, 6, 8, 9]


@pytest.mark.parametrize("text", ["finite: 2,1", "finite: 1,1", "delta: 1,0 | 2", "delta: 1 | 0", "delta: -1 | 2"])
def test_parse_rejects_invalid_values(text):
    with pytest.raises((ValidationError, SpecSyntaxError)):
        parse_spec(text)


@pytest.mark.parametrize("text", ["", "finite:", "delta: 1 |", "delta: | 2", "finite: a", "cofinite: 1", "delta: 1 2"])
def test_parse_rejects_bad_grammar(text):
    with pytest.raises(SpecSyntaxError):
        parse_spec(text)


def test_finite_2_1_is_validation_error():
    with pytest.raises(ValidationError):
        parse_spec("finite: 2,1")


@pytest.mark.parametrize(
    "transient, period, expected",
    [
        ([1], [2, 2], ((1,), (2,))),
        ([1, 2], [2], ((1,), (2,))),
        ([3], [1, 1], ((3,), (1,))),
        ([1, 2, 1], [2, 1], ((1,), (2, 1))),
    ],
)
def test_canonicalize(transient, period, expected):
    c = canonicalize(GapSpec.delta(transient, period))
    assert (c.transient, c.period) == expected


def test_canonicalize_preserves_membership():
    raw = GapSpec.delta([1, 2, 1], [2, 1])
    assert raw.elements(60) == canonicalize(raw).elements(60)


def test_classify():
    assert classify(GapSpec.finite([0, 2])) is ShiftClass.FINITE_SFT
    assert classify(GapSpec.delta([1], [1])) is ShiftClass.COFINITE_SFT
    assert classify(GapSpec.delta([3], [1, 1])) is ShiftClass.COFINITE_SFT
    assert classify(GapSpec.delta([1], [2])) is ShiftClass.STRICTLY_SOFIC
    assert ShiftClass.COFINITE_SFT.is_sft and not ShiftClass.STRICTLY_SOFIC.is_sft


def test_contains():
    assert contains(GapSpec.finite([1, 2]), 2)
    assert not contains(GapSpec.delta([1], [2]), 4)
    assert contains(GapSpec.delta([2], [1, 2]), 6)


def test_exists_gap_at_least():
    assert not exists_gap_at_least(GapSpec.finite([1, 2]), 3)
    assert exists_gap_at_least(GapSpec.finite([1, 2]), 2)
    assert exists_gap_at_least(GapSpec.delta([1], [2]), 10**6)


def test_indexing_and_degenerate():
    spec = GapSpec.delta([2], [1, 2])
    assert [spec.s(i) for i in range(5)] == [0, 2, 3, 5, 6]
    assert spec.g == 3 and spec.k == 1 and spec.l == 2
    assert GapSpec.finite([30]).is_degenerate
    assert not GapSpec.finite([0, 30]).is_degenerate


def test_render_roundtrip_examples():
    for text in ["finite:0,1", "delta:1|1", "delta:2|1,2", "delta:4,1,3|2,5"]:
        assert render_spec(parse_spec(text)) == text


delta_specs = st.builds(
    GapSpec.delta,
    st.lists(st.integers(1, 12), min_size=1, max_size=4).flatmap(
        lambda t: st.integers(0, 1).map(lambda z: [t[0] - z] + t[1:])
    ),
    st.lists(st.integers(1, 12), min_size=1, max_size=5),
)


@given(delta_specs)
def test_canonicalize_is_idempotent_and_keeps_set(spec):
    c = canonicalize(spec)
    assert canonicalize(c) == c
    assert c.elements(200) == spec.elements(200)


@given(delta_specs)
def test_render_parse_roundtrip(spec):
    assert parse_spec(render_spec(spec)) == canonicalize(spec)


@given(delta_specs, st.integers(0, 150))
def test_contains_matches_elements(spec, j):
    assert contains(spec, j) == (j in spec.elements(150))
