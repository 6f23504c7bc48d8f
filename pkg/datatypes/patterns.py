"""
patterns.py - 데이터 패턴과 텍스트 문법
========================================
데이터 타입은 이름, ⊕⁺, ⊗⁺, μ 로 만든 패턴으로 적습니다.

    pat ::= NAME                       소문자로 시작 (상수 C_a)
          | VAR                        대문자로 시작 (패턴 변수)
          | pat "(*)" pat              ⊗⁺ (⊕⁺ 보다 강하게 결합)
          | pat "(+)" pat              ⊕⁺
          | "mu" VAR "." pat
          | "(" pat ")"

    "--" 부터 줄 끝까지는 주석입니다.

[초보자 안내]
- Bool = b (+) b,  Nat = mu X. (n (+) X)
- List_A = mu X. (l (+) (A (*) X))  (A 는 환경에서 값을 받는 변수)
- steady 패턴은 "재귀 없이 끝나는 경우(base case)" 가 있는 패턴입니다.
  is_steady 는 문법만 보고 판단하는 충분조건입니다.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

import pyparsing as pp

from core.errors import DesignSyntaxError, PatternError
from core.syntax import RESERVED_ARITIES

pp.ParserElement.enable_packrat()


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Name:
    name: str

    def __post_init__(self):
        if self.name in RESERVED_ARITIES:
            raise PatternError(f"예약 이름 '{self.name}' 은(는) 패턴에 쓸 수 없습니다.")


@dataclass(frozen=True)
class PlusP:
    left: "DataPattern"
    right: "DataPattern"


@dataclass(frozen=True)
class TensorP:
    left: "DataPattern"
    right: "DataPattern"


@dataclass(frozen=True)
class Mu:
    var: str
    body: "DataPattern"


DataPattern = Union[Var, Name, PlusP, TensorP, Mu]


def free_pattern_vars(A: DataPattern) -> frozenset[str]:
    if isinstance(A, Var):
        return frozenset({A.name})
    if isinstance(A, (PlusP, TensorP)):
        return free_pattern_vars(A.left) | free_pattern_vars(A.right)
    if isinstance(A, Mu):
        return free_pattern_vars(A.body) - {A.var}
    return frozenset()


def has_mu_pattern(A: DataPattern) -> bool:
    if isinstance(A, Mu):
        return True
    if isinstance(A, (PlusP, TensorP)):
        return has_mu_pattern(A.left) or has_mu_pattern(A.right)
    return False


def is_steady(A: DataPattern) -> bool:
    """문법적 충분조건으로 steady 인지 판정합니다."""
    if isinstance(A, Name):
        return True
    if isinstance(A, Var):
        return False
    if isinstance(A, PlusP):
        left, right = is_steady(A.left), is_steady(A.right)
        return (left and (right or not has_mu_pattern(A.right))) or (right and not has_mu_pattern(A.left))
    if isinstance(A, TensorP):
        return is_steady(A.left) and is_steady(A.right)
    return is_steady(A.body)


def render_pattern(A: DataPattern) -> str:
    if isinstance(A, (Var, Name)):
        return A.name
    if isinstance(A, PlusP):
        return f"({render_pattern(A.left)} (+) {render_pattern(A.right)})"
    if isinstance(A, TensorP):
        return f"({render_pattern(A.left)} (*) {render_pattern(A.right)})"
    return f"mu {A.var}. {render_pattern(A.body)}"


# ---------------------------------------------------------------
# 문법
# ---------------------------------------------------------------

def _fold(cls):
    def action(t):
        items = list(t[0])
        acc = items[0]
        for item in items[2::2]:
            acc = cls(acc, item)
        return acc

    return action


def _build_grammar() -> pp.ParserElement:
    pat = pp.Forward()
    name = pp.Regex(r"[a-z][A-Za-z0-9']*")
    var = pp.Regex(r"[A-Z][A-Za-z0-9']*")
    mu = pp.Keyword("mu").suppress() + var + pp.Suppress(".") + pat
    mu.set_parse_action(lambda t: Mu(t[0], t[1]))
    atom = mu | (~pp.Keyword("mu") + name).set_parse_action(lambda t: _name(t[0])) | var.copy().set_parse_action(lambda t: Var(t[0]))
    pat <<= pp.infix_notation(
        atom,
        [
            (pp.Literal("(*)"), 2, pp.OpAssoc.LEFT, _fold(TensorP)),
            (pp.Literal("(+)"), 2, pp.OpAssoc.LEFT, _fold(PlusP)),
        ],
    )
    source = pat + pp.StringEnd()
    source.ignore(pp.Regex(r"--[^\n]*"))
    return source


def _name(text: str) -> Name:
    if text in RESERVED_ARITIES:
        raise pp.ParseFatalException(text, 0, f"예약 이름 '{text}' 은(는) 패턴에 쓸 수 없습니다")
    return Name(text)


_GRAMMAR = _build_grammar()


def parse_pattern(text: str, free: Iterable[str] | None = ()) -> DataPattern:
    """
    패턴 텍스트를 DataPattern 으로 바꿉니다.

    Args:
        text: 패턴 텍스트
        free: 자유 변수로 허용할 이름들 (None 이면 검사하지 않음)

    Raises:
        DesignSyntaxError: 문법 오류
        PatternError: 예약 이름, 또는 허용되지 않은 자유 변수
    """
    try:
        parsed = _GRAMMAR.parse_string(text, parse_all=True)
    except pp.ParseFatalException as e:
        raise PatternError(e.msg) from None
    except pp.ParseBaseException as e:
        raise DesignSyntaxError(f"패턴 문법 오류: {e.msg}", e.lineno, e.col) from None
    A = parsed[0]
    if free is not None:
        unbound = free_pattern_vars(A) - set(free)
        if unbound:
            raise PatternError(f"묶이지 않은 패턴 변수: {', '.join(sorted(unbound))}")
    return A


STANDARD_PATTERNS: dict[str, str] = {
    "Bool": "b (+) b",
    "Nat": "mu X. (n (+) X)",
    "List": "mu X. (l (+) (b (*) X))",
    "Tree": "mu X. (b (+) (X (*) X))",
    "ListPrime": "mu X. (b (*) X)",
}


def standard_pattern(key: str) -> DataPattern:
    """미리 정해 둔 패턴 (Bool, Nat, List, Tree, ListPrime)"""
    if key not in STANDARD_PATTERNS:
        raise PatternError(f"알 수 없는 표준 패턴입니다: {key}")
    return parse_pattern(STANDARD_PATTERNS[key])
