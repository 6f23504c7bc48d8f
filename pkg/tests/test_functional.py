"""함수형 타입: 문법, 문맥, 순수성 기준, 비순수 증거"""

from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from core.errors import DesignSyntaxError, NotSteadyError, PatternError, WitnessValidationError
from core.syntax import count_actions
from behaviours import Orth, bool_behaviour, limp_pos, member_by_paths
from functional import (
    BOOL,
    HOLE,
    PURE,
    UNIT,
    Data,
    Decomposition,
    LimpF,
    PlusF,
    Pure,
    Step,
    TensorF,
    check_functional,
    compile_type,
    corpus,
    data,
    impurity_criterion,
    impurity_witness,
    parse_functype,
    plug,
    render_context,
    render_type,
    sample_corpus,
    subterms,
    validate_witness,
    witness_path,
)
from functional.types import depth
from paths import canonical, is_path, is_well_bracketed

SMALL_CORPUS = corpus(3)


def test_parse_functype():
    assert parse_functype("(Bool -o Bool) -o Bool") == LimpF(LimpF(BOOL, BOOL), BOOL)
    assert parse_functype("Bool -o Bool -o Bool") == LimpF(BOOL, LimpF(BOOL, BOOL))
    assert parse_functype("C_u (*) Bool (+) Bool -o Bool") == LimpF(PlusF(TensorF(UNIT, BOOL), BOOL), BOOL)


def test_pattern_leaves():
    T = parse_functype("{mu X. (n (+) X)} -o Bool")
    assert isinstance(T.left, Data) and not T.left.is_constant
    assert UNIT.is_constant and not BOOL.is_constant
    assert data("Nat") == parse_functype("Nat")


def test_bad_leaves():
    with pytest.raises(NotSteadyError):
        parse_functype("{mu X. (b (*) X)}")
    with pytest.raises(PatternError):
        parse_functype("{Y (+) b}")
    with pytest.raises(DesignSyntaxError):
        parse_functype("Bool -o")


def test_render_and_depth():
    T = parse_functype("(Bool -o Bool) -o Bool")
    assert render_type(T) == "((Bool -o Bool) -o Bool)"
    assert depth(T) == 3
    assert depth(BOOL) == 1


def test_compile_type():
    B = bool_behaviour()
    assert compile_type(LimpF(BOOL, BOOL)) == limp_pos(B, B)


def test_context_steps():
    with pytest.raises(ValueError):
        Step("limp", 1, BOOL)
    ctx = (Step("tensor", 2, BOOL), Step("limp", 2, UNIT))
    assert plug(ctx, BOOL) == TensorF(BOOL, LimpF(UNIT, BOOL))
    assert render_context(ctx) == "(Bool (*) (C_u -o [ ]))"
    assert plug(HOLE, UNIT) == UNIT


def test_subterms_skip_left_of_arrow():
    T = parse_functype("Bool (*) (C_u -o Bool)")
    found = [U for _, U in subterms(T)]
    assert found == [T, BOOL, LimpF(UNIT, BOOL), BOOL]


def test_corpus_sizes():
    assert len(corpus(1)) == 2
    assert len(corpus(2)) == 14
    assert len(SMALL_CORPUS) == 590
    assert len(set(SMALL_CORPUS)) == 590


def test_sample_corpus_is_seeded():
    assert sample_corpus(7, seed=3) == sample_corpus(7, seed=3)
    assert len(sample_corpus(7, seed=3)) == 7
    assert sample_corpus(10_000) == SMALL_CORPUS


@pytest.mark.parametrize(
    "text",
    ["Bool -o Bool", "(Bool -o Bool) -o C_u", "Nat -o Bool", "Bool (*) Bool", "C_u -o (Bool -o Bool)"],
)
def test_pure_types(text):
    assert impurity_criterion(parse_functype(text)) is PURE
    assert isinstance(impurity_witness(parse_functype(text)), Pure)


def test_criterion_on_higher_order_bool():
    dec = impurity_criterion(parse_functype("(Bool -o Bool) -o Bool"))
    assert dec == Decomposition(HOLE, HOLE, BOOL, BOOL, BOOL)
    assert dec.to_dict() == {"C1": "[ ]", "C2": "[ ]", "Q1": "Bool", "Q2": "Bool", "R": "Bool"}


def test_criterion_under_tensor():
    dec = impurity_criterion(parse_functype("Bool (*) ((C_u -o C_u) -o Bool)"))
    assert dec.c1 == (Step("tensor", 2, BOOL),)
    assert dec.c2 == HOLE
    assert (dec.q1, dec.q2, dec.r) == (UNIT, UNIT, BOOL)


def test_witness_for_unit_arrow():
    w = impurity_witness(parse_functype("(C_u -o C_u) -o Bool"))
    assert w.validated
    assert len(w.path) == 11
    assert count_actions(w.p) == 11
    assert w.path[-1].is_daimon
    assert is_path(w.path)
    assert not is_well_bracketed(w.path)


def test_witness_for_bool_arrow():
    w = impurity_witness(parse_functype("(Bool -o Bool) -o Bool"))
    assert len(w.path) == 13
    assert str(w.path[0]) == "x0|val<y1>"
    assert canonical(w.path) == w.path
    assert witness_path(w.decomposition) == w.path
    report = w.to_dict()
    assert report["length"] == 13
    assert report["validated"] is True


def test_witness_under_tensor_context():
    w = impurity_witness(parse_functype("Bool (*) ((C_u -o C_u) -o Bool)"))
    assert len(w.path) == 17
    assert str(w.path[0]).startswith("x0|pr<")


@pytest.mark.parametrize(
    "text",
    [
        "(C_u -o C_u) -o Bool",
        "(Bool -o Bool) -o Bool",
        pytest.param("Bool (*) ((C_u -o C_u) -o Bool)", marks=pytest.mark.slow),
    ],
)
def test_witness_designs_belong_to_the_type(text):
    T = parse_functype(text)
    w = impurity_witness(T, check_members=True)
    assert w.validated
    expr = compile_type(T)
    assert member_by_paths(w.p, expr)
    assert member_by_paths(w.n, Orth(expr))


def test_membership_is_checked_by_default(monkeypatch):
    w = impurity_witness(parse_functype("(C_u -o C_u) -o Bool"), validate=False)
    assert not w.validated
    validate_witness(w)
    monkeypatch.setattr("functional.witness.member_by_paths", lambda d, expr: False)
    with pytest.raises(WitnessValidationError, match="P 에 속하지"):
        validate_witness(w)
    validate_witness(w, check_members=False)


def test_validation_rejects_tampered_witness():
    w = impurity_witness(parse_functype("(C_u -o C_u) -o Bool"))
    with pytest.raises(WitnessValidationError):
        validate_witness(replace(w, path=w.path[:-1]))


def test_check_functional_on_pure_type():
    report = check_functional(parse_functype("Bool -o Bool"), max_len=8)
    assert report.holds
    assert report.agrees
    assert report.to_dict()["criterion"] == "Pure"


@pytest.mark.slow
def test_check_functional_finds_impurity():
    report = check_functional(parse_functype("(Bool -o Bool) -o Bool"), max_len=13)
    assert not report.pure.holds
    assert report.quasi_pure.holds
    assert report.agrees


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(SMALL_CORPUS))
def test_plugging_every_subterm_rebuilds_the_type(T):
    for ctx, U in subterms(T):
        assert plug(ctx, U) == T


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(SMALL_CORPUS))
def test_decomposition_rebuilds_the_type(T):
    dec = impurity_criterion(T)
    if isinstance(dec, Pure):
        return
    assert dec.rebuild() == T
    assert not (isinstance(dec.r, Data) and dec.r.is_constant)


@pytest.mark.slow
def test_every_impure_type_in_corpus_has_a_daimon_ended_unbracketed_witness():
    assert len(SMALL_CORPUS) == 590
    impure = [T for T in SMALL_CORPUS if not isinstance(impurity_criterion(T), Pure)]
    assert impure
    for T in impure:
        s = witness_path(impurity_criterion(T))
        assert s[-1].is_daimon, render_type(T)
        assert is_path(s), render_type(T)
        assert not is_well_bracketed(s), render_type(T)
