import math

import pytest
from hypothesis import given, settings, strategies as st

from sgapshift.gapset import GapSpec, canonicalize
from sgapshift.oracle import (
    brute_periodic_count,
    count_blocks,
    count_blocks_automaton,
    count_blocks_enumerate,
    entropy_estimate,
    is_admissible_block,
)
from sgapshift.spectral import entropy

FIN12 = GapSpec.finite([1, 2])
ODD = GapSpec.delta([1], [2])


def test_admissible_examples():
    assert is_admissible_block(FIN12, "101")
    assert not is_admissible_block(FIN12, "11")
    assert not is_admissible_block(FIN12, "000")
    assert is_admissible_block(FIN12, (0, 0))


def test_count_blocks_examples():
    assert count_blocks(GapSpec.finite([0, 1]), 2) == 3
    assert count_blocks(FIN12, 1) == 2
    assert count_blocks(GapSpec.finite([0]), 1) == 1
    assert count_blocks(ODD, 3) == 5


def test_periodic_examples():
    assert brute_periodic_count(GapSpec.delta([1], [1]), 2) == 3
    assert brute_periodic_count(GapSpec.finite([0]), 5) == 1
    assert brute_periodic_count(ODD, 3) == 1
    with pytest.raises(ValueError):
        brute_periodic_count(ODD, 17)


def test_entropy_estimate_examples():
    assert abs(entropy_estimate(GapSpec.finite([0, 1]), 24) - math.log2((1 + 5**0.5) / 2)) < 0.05
    assert entropy_estimate(GapSpec.finite([0]), 10) == 0.0
    assert abs(entropy_estimate(ODD, 24) - 0.5) < 0.05


specs = st.one_of(
    st.sets(st.integers(0, 8), min_size=1, max_size=4).map(lambda s: GapSpec.finite(sorted(s))),
    st.builds(
        lambda t, p: canonicalize(GapSpec.delta(t, p)),
        st.lists(st.integers(1, 5), min_size=1, max_size=2),
        st.lists(st.integers(1, 5), min_size=1, max_size=3),
    ),
)


@settings(max_examples=50, deadline=None)
@given(specs, st.integers(1, 11))
def test_two_counting_modes_agree(spec, n):
    assert count_blocks_enumerate(spec, n) == count_blocks_automaton(spec, n)


@settings(max_examples=40, deadline=None)
@given(specs, st.integers(1, 9))
def test_block_counts_are_factorial(spec, n):
    # every admissible block extends to the right, and blocks are closed under subwords
    words = [w for w in range(1 << (n + 1)) if is_admissible_block(spec, format(w, f"0{n + 1}b"))]
    shorter = {format(w, f"0{n + 1}b")[:-1] for w in words}
    assert len(shorter) == count_blocks(spec, n)


@settings(max_examples=30, deadline=None)
@given(specs)
def test_estimate_bounds_entropy(spec):
    assert entropy_estimate(spec, 14) >= entropy(spec).h_bits - 1e-12


@settings(max_examples=30, deadline=None)
@given(specs, st.integers(1, 9), st.integers(1, 9))
def test_block_counts_submultiplicative(spec, m, n):
    assert count_blocks(spec, m + n) <= count_blocks(spec, m) * count_blocks(spec, n)
