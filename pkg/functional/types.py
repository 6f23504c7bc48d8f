"""
types.py - 함수형 타입, 문맥(context), 코퍼스
==============================================
데이터 타입을 잎으로 두고 ⊕⁺, ⊗⁺, ⊸⁺ 로 쌓은 타입입니다.

    T ::= DATA | T "(*)" T | T "(+)" T | T "-o" T       (-o 는 오른쪽 결합)
    DATA ::= "Bool" | "Nat" | "List" | "Tree" | "C_" NAME | "{" 패턴 "}" | "(" T ")"

[초보자 안내]
- compile_type(T) 는 T 를 behaviours 의 행동 식으로 바꿉니다.
  P ⊸⁺ Q 는 ↑(↓P ⊸ Q) 가 됩니다.
- 문맥(Context)은 바깥에서 안쪽으로 내려가는 Step 들의 튜플입니다.
  ⊕⁺, ⊗⁺ 는 양쪽 모두, ⊸⁺ 는 오른쪽으로만 내려갈 수 있습니다.
- corpus(depth) 는 잎 {C_u, Bool} 로 만들 수 있는 깊이 depth 이하의
  모든 타입을 결정적인 순서로 돌려줍니다 (잎의 깊이는 1).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Union

import pyparsing as pp

from config import Config
from core.errors import DesignSyntaxError, NotSteadyError, PatternError
from behaviours.expr import BehaviourExpr, limp_pos, plus_pos, tensor_pos
from datatypes.interpret import interpret
from datatypes.patterns import (
    DataPattern,
    Name,
    free_pattern_vars,
    is_steady,
    parse_pattern,
    render_pattern,
    standard_pattern,
)

pp.ParserElement.enable_packrat()


@dataclass(frozen=True)
class Data:
    pattern: DataPattern
    label: str = ""

    def __post_init__(self):
        if free_pattern_vars(self.pattern):
            raise PatternError(f"함수형 타입의 잎은 닫힌 패턴이어야 합니다: {render_pattern(self.pattern)}")
        if not is_steady(self.pattern):
            raise NotSteadyError(f"함수형 타입의 잎은 steady 패턴이어야 합니다: {render_pattern(self.pattern)}")

    @property
    def is_constant(self) -> bool:
        return isinstance(self.pattern, Name)


@dataclass(frozen=True)
class PlusF:
    left: "FuncType"
    right: "FuncType"


@dataclass(frozen=True)
class TensorF:
    left: "FuncType"
    right: "FuncType"


@dataclass(frozen=True)
class LimpF:
    left: "FuncType"
    right: "FuncType"


FuncType = Union[Data, PlusF, TensorF, LimpF]


def data(key: str) -> Data:
    """표준 데이터 잎: Bool, Nat, List, Tree 또는 상수 C_a"""
    if key.startswith("C_"):
        return Data(Name(key[2:]), key)
    return Data(standard_pattern(key), key)


UNIT = data("C_u")
BOOL = data("Bool")


def compile_type(T: FuncType, level: int | None = None) -> BehaviourExpr:
    if isinstance(T, Data):
        return interpret(T.pattern, level=level)
    left, right = compile_type(T.left, level), compile_type(T.right, level)
    if isinstance(T, PlusF):
        return plus_pos(left, right)
    if isinstance(T, TensorF):
        return tensor_pos(left, right)
    return limp_pos(left, right)


def render_type(T: FuncType) -> str:
    if isinstance(T, Data):
        return T.label or "{" + render_pattern(T.pattern) + "}"
    op = {PlusF: "(+)", TensorF: "(*)", LimpF: "-o"}[type(T)]
    return f"({render_type(T.left)} {op} {render_type(T.right)})"


def depth(T: FuncType) -> int:
    if isinstance(T, Data):
        return 1
    return 1 + max(depth(T.left), depth(T.right))


# ---------------------------------------------------------------
# 문법
# ---------------------------------------------------------------

def _fold_left(cls):
    def action(t):
        items = list(t[0])
        acc = items[0]
        for item in items[2::2]:
            acc = cls(acc, item)
        return acc

    return action


def _fold_right(t):
    items = list(t[0])
    acc = items[-1]
    for item in reversed(items[:-2:2]):
        acc = LimpF(item, acc)
    return acc


def _pattern_leaf(text: str) -> Data:
    return Data(parse_pattern(text), "{" + text.strip() + "}")


def _build_grammar() -> pp.ParserElement:
    standard = pp.one_of("Bool Nat List Tree", as_keyword=True).set_parse_action(lambda t: data(t[0]))
    const = pp.Regex(r"C_?(?P<name>[a-z][A-Za-z0-9']*)").set_parse_action(lambda t: data("C_" + t["name"]))
    braced = pp.QuotedString("{", end_quote_char="}").set_parse_action(lambda t: _pattern_leaf(t[0]))
    atom = standard | const | braced
    T = pp.infix_notation(
        atom,
        [
            (pp.Literal("(*)"), 2, pp.OpAssoc.LEFT, _fold_left(TensorF)),
            (pp.Literal("(+)"), 2, pp.OpAssoc.LEFT, _fold_left(PlusF)),
            (pp.Literal("-o"), 2, pp.OpAssoc.RIGHT, _fold_right),
        ],
    )
    return T + pp.StringEnd()


_GRAMMAR = _build_grammar()


def parse_functype(text: str) -> FuncType:
    """
    함수형 타입 텍스트를 해석합니다. 예: "(Bool -o Bool) -o Bool"

    Raises:
        DesignSyntaxError: 문법 오류
        PatternError / NotSteadyError: 잎 패턴이 닫혀 있지 않거나 steady 가 아닐 때
    """
    try:
        return _GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise DesignSyntaxError(f"타입 문법 오류: {e.msg}", e.lineno, e.col) from None


# ---------------------------------------------------------------
# 문맥
# ---------------------------------------------------------------

@dataclass(frozen=True)
class Step:
    """문맥 한 단계. side 는 구멍이 있는 쪽 (1=왼쪽, 2=오른쪽), other 는 반대쪽 타입."""

    kind: str  # "plus" | "tensor" | "limp"
    side: int
    other: FuncType

    def __post_init__(self):
        if self.kind == "limp" and self.side != 2:
            raise ValueError("⊸⁺ 의 왼쪽에는 구멍을 둘 수 없습니다.")


Context = tuple[Step, ...]
HOLE: Context = ()


def plug(ctx: Context, T: FuncType) -> FuncType:
    """C[T]"""
    for step in reversed(ctx):
        cls = {"plus": PlusF, "tensor": TensorF, "limp": LimpF}[step.kind]
        T = cls(T, step.other) if step.side == 1 else cls(step.other, T)
    return T


def subterms(T: FuncType) -> Iterator[tuple[Context, FuncType]]:
    """문맥 규칙으로 닿을 수 있는 모든 (문맥, 부분 타입). 바깥 먼저, 왼쪽 먼저."""
    yield HOLE, T
    if isinstance(T, (PlusF, TensorF)):
        kind = "plus" if isinstance(T, PlusF) else "tensor"
        for ctx, U in subterms(T.left):
            yield (Step(kind, 1, T.right),) + ctx, U
        for ctx, U in subterms(T.right):
            yield (Step(kind, 2, T.left),) + ctx, U
    elif isinstance(T, LimpF):
        for ctx, U in subterms(T.right):
            yield (Step("limp", 2, T.left),) + ctx, U


def render_context(ctx: Context) -> str:
    text = "[ ]"
    for step in reversed(ctx):
        op = {"plus": "(+)", "tensor": "(*)", "limp": "-o"}[step.kind]
        other = render_type(step.other)
        text = f"({text} {op} {other})" if step.side == 1 else f"({other} {op} {text})"
    return text


# ---------------------------------------------------------------
# 코퍼스
# ---------------------------------------------------------------

def corpus(max_depth: int = 3, leaves: tuple[FuncType, ...] = (UNIT, BOOL)) -> list[FuncType]:
    """깊이 max_depth 이하의 모든 타입 (잎 깊이 1)"""
    by_depth: list[list[FuncType]] = [[], list(leaves)]
    for d in range(2, max_depth + 1):
        lower = [T for level in by_depth[: d] for T in level]
        fresh: list[FuncType] = []
        for cls in (PlusF, TensorF, LimpF):
            for A in lower:
                for B in lower:
                    if max(depth(A), depth(B)) == d - 1:
                        fresh.append(cls(A, B))
        by_depth.append(fresh)
    return [T for level in by_depth for T in level]


def sample_corpus(size: int, max_depth: int = 3, seed: int | None = None) -> list[FuncType]:
    """corpus 에서 seed 로 고른 size 개 (seed 기본값 Config.SEED)"""
    everything = corpus(max_depth)
    rng = random.Random(Config.SEED if seed is None else seed)
    if size >= len(everything):
        return everything
    return rng.sample(everything, size)
