from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sgapshift.errors import NonIntegerCoefficient, NormalizationError
from sgapshift.exact_algebra import IntMatrix, IntPoly, RatFunc
from sgapshift.gapset import GapSpec, canonicalize
from sgapshift.oracle import brute_periodic_count
from sgapshift.presentation import build_presentation
from sgapshift.zeta import (
    periodic_counts,
    trace_corrected_count,
    trace_corrected_counts,
    zeta_closed_form,
    zeta_from_matrix,
    zeta_result,
)

T = IntPoly([0, 1])
ODD = GapSpec.delta([1], [2])


def test_closed_form_examples():
    assert zeta_closed_form(GapSpec.delta([1], [1])) == RatFunc(1, 1 - T - T * T)
    for n in range(1, 7):
        den = IntPoly([1, 0] + [-1] * n)
        assert zeta_closed_form(GapSpec.finite(range(1, n + 1))) == RatFunc(1, den)
    assert zeta_closed_form(ODD) == RatFunc(1 + T, 1 - 2 * T * T)


def test_matrix_route_examples():
    assert zeta_from_matrix(GapSpec.finite([0]), IntMatrix([[1]])) == RatFunc(1, 1 - T)
    assert zeta_from_matrix(ODD) == RatFunc(1 + T, 1 - 2 * T * T)
    assert zeta_from_matrix(GapSpec.finite([0, 1])) == RatFunc(1, 1 - T - T * T)


def test_periodic_counts_examples():
    assert periodic_counts(RatFunc(1, 1 - T - T * T), 4) == [1, 3, 4, 7]
    assert periodic_counts(RatFunc(1, 1 - T), 3) == [1, 1, 1]
    assert periodic_counts(RatFunc(1 + T, 1 - 2 * T * T), 4) == [1, 3, 1, 7]


def test_periodic_counts_errors():
    with pytest.raises(NormalizationError):
        periodic_counts(RatFunc(2, 1 - T), 3)
    with pytest.raises(NonIntegerCoefficient):
        # exp(t/2 + ...) is not the zeta function of any shift
        periodic_counts(RatFunc(2, 2 - T), 2)


def test_trace_corrected_examples():
    A = IntMatrix([[0, 1], [2, 0]])
    assert trace_corrected_count(ODD, A, 1) == 1
    assert trace_corrected_count(ODD, A, 2) == 3
    assert trace_corrected_count(GapSpec.finite([0, 1]), IntMatrix([[1, 1], [1, 0]]), 1) == 1


def test_series_matches_exp_of_log():
    # direct exp(sum p_n t^n / n) reproduces the zeta coefficients
    spec = GapSpec.delta([2], [1, 2])
    z = zeta_closed_form(spec)
    N = 12
    p = periodic_counts(z, N)
    a = [Fraction(1)] + [Fraction(0)] * N
    for m in range(1, N + 1):
        a[m] = sum(p[j - 1] * a[m - j] for j in range(1, m + 1)) / m
    # z.den * series = z.num
    for m in range(N + 1):
        lhs = sum(z.den[i] * a[m - i] for i in range(m + 1))
        assert lhs == z.num[m]


def test_corpus_routes_and_counts(corpus):
    for spec in corpus:
        A = build_presentation(spec).adjacency
        res = zeta_result(spec, N=20)
        assert res.routes_agree, spec
        assert list(res.p) == trace_corrected_counts(spec, A, 20), spec


delta_specs = st.builds(
    lambda t, p: canonicalize(GapSpec.delta(t, p)),
    st.lists(st.integers(0, 6), min_size=1, max_size=3).map(lambda t: [t[0]] + [max(1, d) for d in t[1:]]),
    st.lists(st.integers(1, 6), min_size=1, max_size=3),
)


@settings(max_examples=40, deadline=None)
@given(delta_specs)
def test_counts_match_brute_force(spec):
    p = periodic_counts(zeta_closed_form(spec), 10)
    assert p == [brute_periodic_count(spec, n) for n in range(1, 11)]


@settings(max_examples=40, deadline=None)
@given(delta_specs)
def test_growth_rate_matches_entropy(spec):
    from sgapshift.spectral import entropy

    p = periodic_counts(zeta_closed_form(spec), 60)
    lam = entropy(spec).lam
    # p_n <= tr(A^n) + 1 <= n_vertices * lam^n + 1
    n_vertices = build_presentation(spec).n
    assert all(pn <= n_vertices * lam**n + 1 + 1e-6 * lam**n for n, pn in enumerate(p, 1))
