"""디자인 문법, 시그니처, 치환, 선형성"""

import pytest
from hypothesis import given, settings

from core.errors import (
    ArityError,
    DesignSyntaxError,
    DuplicateBranchError,
    LinearityError,
    SubstitutionError,
    UndeclaredNameError,
)
from core.parser import parse_design, parse_source, render_design
from core.syntax import (
    DAIMON,
    OMEGA,
    X0,
    Branch,
    Cut,
    Neg,
    PosApp,
    Signature,
    alpha_eq,
    barendregt,
    classify,
    count_actions,
    free_vars,
    is_atomic,
    is_cut_free,
    is_linear,
    substitute,
)
from tests.conftest import d, negative_designs, positive_designs


def test_parse_daimon_and_omega():
    assert d("#") == DAIMON
    assert d("_") == OMEGA


def test_parse_positive_with_signature_header():
    parsed = parse_source("sig a/0 b/1; x0|b<a().#>")
    assert parsed.signature.arity("b") == 1
    assert parsed.design == PosApp(X0, "b", (Neg((Branch("a", (), DAIMON),)),))


def test_signature_header_entries_by_space_or_comma():
    spaced = parse_source("sig b/0 c/1;\nx0|b<>")
    assert spaced.signature.arity("c") == 1
    assert spaced.design == PosApp(X0, "b", ())
    assert parse_source("sig b/0, c/1; x0|b<>").design == spaced.design


def test_signature_always_has_reserved_names():
    sig = Signature({"a": 0})
    assert sig.arity("val") == 1
    assert sig.arity("pr") == 2
    assert sig.user_names() == ["a"]


def test_reserved_arity_cannot_change():
    with pytest.raises(ArityError):
        Signature({"val": 2})


def test_declared_signature_rejects_unknown_name():
    with pytest.raises(UndeclaredNameError):
        parse_design("sig a/0; x0|c<>")


def test_declared_signature_checks_arity():
    with pytest.raises(ArityError):
        parse_design("sig a/0; x0|a<b().#>")


def test_inferred_signature_rejects_two_arities():
    with pytest.raises(ArityError):
        parse_design("x0|a<a().#>")


def test_syntax_error_reports_position():
    with pytest.raises(DesignSyntaxError) as info:
        parse_design("x0|a<")
    assert info.value.line == 1


def test_x0_cannot_be_a_parameter():
    with pytest.raises(DesignSyntaxError):
        parse_design("a(x0).#")


def test_duplicate_parameter_is_not_linear():
    with pytest.raises(LinearityError):
        parse_design("a(y, y).#")


def test_duplicate_branch_rejected():
    with pytest.raises(DuplicateBranchError):
        Neg((Branch("a", (), DAIMON), Branch("a", (), DAIMON)))


def test_omega_branches_are_dropped():
    n = d("a().# + b()._")
    assert n.names == ("a",)


def test_branches_are_sorted():
    assert d("b().# + a().#").names == ("a", "b")


def test_comments_are_ignored():
    assert d("x0|a<>  -- 상수") == PosApp(X0, "a", ())


def test_cut_head():
    c = d("[a(y).(y|b<>)]|a<c().#>")
    assert isinstance(c, Cut)
    assert not is_cut_free(c)


def test_free_vars_and_atomicity():
    p = d("x0|a<b(y).(y|c<>)>")
    assert free_vars(p) == {X0}
    assert is_atomic(p)
    assert not is_atomic(d("z|a<>"))
    assert is_atomic(d("a(y).(y|b<>)"))


def test_non_linear_design_detected():
    p = parse_design("x0|pr<a().(z|c<>), b().(z|d<>)>", strict_linear=False)
    assert not is_linear(p)
    with pytest.raises(LinearityError):
        parse_design("x0|pr<a().(z|c<>), b().(z|d<>)>", strict_linear=True)


def test_substitute_into_free_variable():
    p = d("z|a<>")
    n = d("a().#")
    assert substitute(p, {"z": n}) == Cut(n, "a", ())


def test_substitute_bound_variable_rejected():
    with pytest.raises(SubstitutionError):
        substitute(d("a(y).(y|b<>)"), {"y": d("b().#")})


def test_alpha_equivalence():
    assert alpha_eq(d("a(y).(y|b<>)"), d("a(z).(z|b<>)"))
    assert not alpha_eq(d("a(y).(y|b<>)"), d("a(z).(x0|b<>)"))


def test_count_actions():
    assert count_actions(DAIMON) == 1
    assert count_actions(OMEGA) == 0
    assert count_actions(d("x0|b<a().#>")) == 3
    assert count_actions(d("a().# + b(y).(y|c<>)")) == 4


def test_classify():
    info = classify(d("a().#"))
    assert info.polarity.value == "-"
    assert info.atomic and info.cut_free


@settings(max_examples=60, deadline=None)
@given(positive_designs)
def test_enumerated_positive_designs_are_linear_and_atomic(p):
    assert is_linear(p)
    assert is_atomic(p)
    assert alpha_eq(barendregt(p), p)


@settings(max_examples=60, deadline=None)
@given(negative_designs)
def test_enumerated_negative_designs_are_closed(n):
    assert not free_vars(n)
    assert alpha_eq(barendregt(n), n)


def test_render_design_reparses():
    text = "a(y).(y|b<c().#>) + d().#"
    assert alpha_eq(parse_design(render_design(d(text))), d(text))
