"""데이터 패턴, 해석, basis, steady 판정, 표준 값 인코딩"""

import pytest

from core.errors import DesignSyntaxError, NotSteadyError, PatternError
from behaviours import Const, Down, Inj, MuLevel, bool_behaviour, check_pure, check_regular, member
from datatypes import (
    STANDARD_PATTERNS,
    Mu,
    Name,
    PlusP,
    Steadiness,
    TensorP,
    Var,
    basis,
    decode_bool,
    decode_nat,
    encode_bool,
    encode_list,
    encode_nat,
    encode_tree,
    interpret,
    is_steady,
    kleene_monotone_report,
    parse_pattern,
    render_pattern,
    standard_pattern,
    steadiness,
)
from tests.conftest import d


def test_parse_pattern_precedence():
    assert parse_pattern("a (+) b (*) c") == PlusP(Name("a"), TensorP(Name("b"), Name("c")))
    assert parse_pattern("mu X. (n (+) X)") == Mu("X", PlusP(Name("n"), Var("X")))


def test_parse_pattern_errors():
    with pytest.raises(PatternError):
        parse_pattern("val (+) b")
    with pytest.raises(PatternError):
        parse_pattern("Y (+) b")
    with pytest.raises(DesignSyntaxError):
        parse_pattern("(+) b")


def test_free_pattern_variables_can_be_allowed():
    A = parse_pattern("mu X. (l (+) (A (*) X))", free=["A"])
    assert interpret(A, {"A": Const("b")}, level=1) is not None
    with pytest.raises(PatternError):
        interpret(A, level=1)


def test_render_pattern():
    assert render_pattern(standard_pattern("Nat")) == "mu X. (n (+) X)"


def test_standard_patterns():
    assert set(STANDARD_PATTERNS) >= {"Bool", "Nat", "List", "Tree"}
    with pytest.raises(PatternError):
        standard_pattern("Stream")


def test_interpret_bool_is_bool_behaviour():
    assert interpret(standard_pattern("Bool")) == bool_behaviour()


def test_interpret_mu_uses_level():
    B = interpret(standard_pattern("Nat"), level=2)
    assert isinstance(B, MuLevel) and B.level == 2


def test_steadiness():
    assert is_steady(standard_pattern("Nat"))
    assert is_steady(standard_pattern("Tree"))
    assert not is_steady(standard_pattern("ListPrime"))
    assert steadiness(standard_pattern("List")) is Steadiness.STEADY
    assert steadiness(standard_pattern("ListPrime")) is Steadiness.UNKNOWN
    assert steadiness(standard_pattern("ListPrime"), semantic=True, level=2) is Steadiness.NOT_STEADY


def test_basis():
    assert basis(standard_pattern("Bool")) == Inj(1, Down(Const("b")))
    assert basis(standard_pattern("Nat")) == Inj(1, Down(Const("n")))
    with pytest.raises(NotSteadyError):
        basis(standard_pattern("ListPrime"))


def test_kleene_levels_are_monotone():
    report = kleene_monotone_report(standard_pattern("Nat"), levels=3, max_len=8)
    assert report.holds
    assert report.incarnation_sizes == [1, 4, 7, 10]
    assert report.visitable_sizes == sorted(report.visitable_sizes)
    with pytest.raises(PatternError):
        kleene_monotone_report(standard_pattern("Nat"), levels=0)


def test_level_zero_is_daimon_only():
    B = interpret(standard_pattern("Tree"), level=0)
    assert member(d("#"), B)
    assert not member(encode_tree(None), B)
    assert isinstance(B, MuLevel) and B.basis is not None


def test_encoders_build_members():
    assert member(encode_bool(True), interpret(standard_pattern("Bool")))
    assert member(encode_nat(2), interpret(standard_pattern("Nat"), level=3))
    list_of_bools = parse_pattern("mu X. (l (+) (Bool (*) X))", free=["Bool"])
    assert member(encode_list([encode_bool(True)]), interpret(list_of_bools, {"Bool": bool_behaviour()}, level=2))
    assert member(encode_tree((None, None)), interpret(standard_pattern("Tree"), level=2))


def test_encode_nat_rejects_negative():
    with pytest.raises(PatternError):
        encode_nat(-1)


def test_encode_list_rejects_negative_elements():
    with pytest.raises(PatternError):
        encode_list([d("a().#")])


def test_decoders():
    assert decode_nat(encode_nat(3)) == 3
    assert decode_bool(encode_bool(False)) is False
    with pytest.raises(PatternError):
        decode_nat(d("x0|c<>"))


@pytest.mark.slow
@pytest.mark.parametrize(
    "key, level",
    [("Bool", 0), ("Nat", 1), ("Nat", 2), ("Nat", 3), ("List", 1), ("List", 2), ("Tree", 1), ("Tree", 2)],
)
def test_data_types_are_regular_and_pure(key, level):
    B = interpret(standard_pattern(key), level=level)
    regular = check_regular(B, max_len=16)
    assert regular.holds, regular.details
    assert not any("두 판정이 다름" in line for line in regular.details)
    assert check_pure(B, max_len=16).holds
