"""정규화, 직교성, 두 순서"""

import pytest
from hypothesis import given, settings

from core.errors import NotAtomicError, PolarityError
from core.syntax import DAIMON, OMEGA, X0, Neg, substitute
from reduction import NO_HEAD_CUT, Status, is_orthogonal, normalize, obs_leq, stable_leq, step
from tests.conftest import d, negative_designs, positive_designs


def test_step_without_head_cut():
    assert step(d("x0|a<>")) is NO_HEAD_CUT
    assert step(d("#")) is NO_HEAD_CUT


def test_step_fires_one_cut():
    assert step(d("[a().#]|a<>")) == DAIMON


def test_step_on_missing_branch_gives_omega():
    assert step(d("[a().#]|b<>")) == OMEGA


def test_normalize_converges():
    outcome = normalize(d("[a(y).(y|b<>)]|a<b().#>"))
    assert outcome.status is Status.CONVERGED
    assert outcome.result == DAIMON
    assert outcome.steps == 2


def test_normalize_diverges_to_omega():
    outcome = normalize(d("[a(y).(y|b<>)]|a<c().#>"))
    assert outcome.status is Status.DIVERGED_OMEGA
    assert outcome.result == OMEGA


def test_normalize_fuel_exhausted():
    outcome = normalize(d("[a(y).(y|b<>)]|a<b().#>"), fuel=1)
    assert outcome.status is Status.FUEL_EXHAUSTED
    assert outcome.result == OMEGA
    assert outcome.steps == 1


def test_normalize_rejects_non_positive_fuel():
    with pytest.raises(ValueError):
        normalize(d("#"), fuel=0)


def test_normalize_under_branches():
    outcome = normalize(d("a().([b().#]|b<>)"))
    assert isinstance(outcome.result, Neg)
    assert outcome.result == d("a().#")


def test_trace_callback_sees_every_cut():
    seen = []
    normalize(d("[a(y).(y|b<>)]|a<b().#>"), on_step=lambda k, redex: seen.append(k))
    assert seen == [0, 1]


def test_orthogonality():
    assert is_orthogonal(d("x0|a<>"), d("a().#"))
    assert not is_orthogonal(d("x0|a<>"), d("b().#"))
    assert is_orthogonal(d("x0|b<a().#>"), d("b(y).(y|a<>)"))
    assert is_orthogonal(d("#"), d("{}"))


def test_orthogonality_needs_opposite_polarities():
    with pytest.raises(PolarityError):
        is_orthogonal(d("a().#"), d("x0|a<>"))


def test_orthogonality_needs_atomic_designs():
    with pytest.raises(NotAtomicError):
        is_orthogonal(d("z|a<>"), d("a().#"))


def test_orders_on_positive_designs():
    p = d("x0|a<>")
    assert stable_leq(OMEGA, p)
    assert obs_leq(OMEGA, p)
    assert obs_leq(p, DAIMON)
    assert not stable_leq(p, DAIMON)
    assert not obs_leq(DAIMON, p)


def test_orders_on_negative_designs():
    small, big = d("a().#"), d("a().# + b().#")
    assert stable_leq(small, big)
    assert not stable_leq(big, small)
    assert obs_leq(d("a().(x0|c<>)"), d("a().#"))


def test_orders_ignore_bound_names():
    assert stable_leq(d("a(y).(y|b<>)"), d("a(z).(z|b<>)"))


@settings(max_examples=80, deadline=None)
@given(positive_designs)
def test_orders_are_reflexive_and_daimon_is_top(p):
    assert stable_leq(p, p)
    assert obs_leq(p, p)
    assert obs_leq(p, DAIMON)


@settings(max_examples=80, deadline=None)
@given(positive_designs, negative_designs)
def test_orthogonality_is_closed_normalization_to_daimon(p, n):
    closed = substitute(p, {X0: n})
    assert is_orthogonal(p, n) == (normalize(closed).result == DAIMON)
