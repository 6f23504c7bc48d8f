"""
parser.py - 행동 식 텍스트 문법
================================
CLI 의 `behaviour` 명령과 테스트에서 행동 식을 텍스트로 적을 때 씁니다.

문법 (결합이 약한 것부터):
    expr   ::= sum ( "-o" expr )?                 오른쪽 결합
    sum    ::= prod ( "(+)" prod )*
    prod   ::= atom ( "(x)" atom )*
    atom   ::= base ( "^" VAR )?                  위치 옮기기 B^x
    base   ::= "#" | "C_" NAME [ "/" INT ] | "Bool"
             | ("up" | "down" | "orth" | "inj1" | "inj2") "(" expr ")"
             | "mu" [ "^" INT ] VAR "." expr
             | VAR                                 (대문자로 시작: 재귀 변수)
             | "(" expr ")"

    "--" 부터 줄 끝까지는 주석입니다.

[초보자 안내]
- (+), (x), -o 는 "날것" 연결사입니다. 양쪽 극성이 맞아야 합니다.
  예: down(C_b) (+) down(C_b) 는 Bool 과 같습니다.
- mu 의 단계를 생략하면 Config.LEVEL 을 씁니다.
"""

from __future__ import annotations

from dataclasses import dataclass

import pyparsing as pp

from config import Config
from core.errors import DesignSyntaxError
from behaviours.expr import (
    DAIMON_BEH,
    BehaviourExpr,
    Const,
    Deloc,
    Down,
    Inj,
    Limp,
    MuLevel,
    Orth,
    Plus,
    RecVar,
    Tensor,
    Up,
    bool_behaviour,
)

pp.ParserElement.enable_packrat()

_UNARY = {"up": Up, "down": Down, "orth": Orth}


@dataclass(frozen=True)
class _Raw:
    kind: str
    args: tuple = ()


def _fold_left(kind: str):
    def action(t):
        items = list(t[0])
        acc = items[0]
        for item in items[2::2]:
            acc = _Raw(kind, (acc, item))
        return acc

    return action


def _fold_right(kind: str):
    def action(t):
        items = list(t[0])
        acc = items[-1]
        for item in reversed(items[:-2:2]):
            acc = _Raw(kind, (item, acc))
        return acc

    return action


def _build_grammar() -> pp.ParserElement:
    expr = pp.Forward()
    LPAR, RPAR, DOT, CARET = map(pp.Suppress, "().^")
    var = pp.Regex(r"[A-Z][A-Za-z0-9']*")
    address = pp.Regex(r"[a-z][A-Za-z0-9']*")

    daimon = pp.Literal("#").set_parse_action(lambda: _Raw("daimon"))
    const = pp.Regex(r"C_?(?P<name>[a-z][A-Za-z0-9']*)(/(?P<arity>\d+))?")
    const.set_parse_action(lambda t: _Raw("const", (t["name"], int(t.get("arity") or 0))))
    boolean = pp.Keyword("Bool").set_parse_action(lambda: _Raw("bool"))
    unary = pp.one_of("up down orth inj1 inj2", as_keyword=True) + LPAR + expr + RPAR
    unary.set_parse_action(lambda t: _Raw("unary", (t[0], t[1])))
    level = pp.Optional(CARET + pp.Word(pp.nums), default="")
    mu = pp.Keyword("mu") + level + var + DOT + expr
    mu.set_parse_action(lambda t: _Raw("mu", (t[1], t[2], t[3])))
    recvar = (~pp.Keyword("Bool") + var).set_parse_action(lambda t: _Raw("var", (t[0],)))

    base = daimon | mu | unary | boolean | const | recvar | (LPAR + expr + RPAR)
    atom = base + pp.Optional(CARET + address)
    atom.set_parse_action(lambda t: _Raw("deloc", (t[0], t[1])) if len(t) == 2 else t[0])

    expr <<= pp.infix_notation(
        atom,
        [
            (pp.Literal("(x)"), 2, pp.OpAssoc.LEFT, _fold_left("tensor")),
            (pp.Literal("(+)"), 2, pp.OpAssoc.LEFT, _fold_left("plus")),
            (pp.Literal("-o"), 2, pp.OpAssoc.RIGHT, _fold_right("limp")),
        ],
    )
    source = expr + pp.StringEnd()
    source.ignore(pp.Regex(r"--[^\n]*"))
    return source


_GRAMMAR = _build_grammar()


def _build(raw: _Raw) -> BehaviourExpr:
    kind, args = raw.kind, raw.args
    if kind == "daimon":
        return DAIMON_BEH
    if kind == "const":
        return Const(args[0], args[1])
    if kind == "bool":
        return bool_behaviour()
    if kind == "var":
        return RecVar(args[0])
    if kind == "unary":
        body = _build(args[1])
        if args[0].startswith("inj"):
            return Inj(int(args[0][-1]), body)
        return _UNARY[args[0]](body)
    if kind == "mu":
        level = int(args[0]) if args[0] else Config.LEVEL
        return MuLevel(args[1], _build(args[2]), level)
    if kind == "deloc":
        return Deloc(_build(args[0]), args[1])
    left, right = _build(args[0]), _build(args[1])
    if kind == "tensor":
        return Tensor(left, right)
    if kind == "plus":
        return Plus(left, right)
    return Limp(left, right)


def parse_behaviour(text: str) -> BehaviourExpr:
    """
    행동 식 텍스트를 BehaviourExpr 로 바꿉니다.

    Raises:
        DesignSyntaxError: 문법 오류
        PolarityError: 연결사 양쪽의 극성이 맞지 않을 때
    """
    try:
        parsed = _GRAMMAR.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise DesignSyntaxError(f"행동 식 문법 오류: {e.msg}", e.lineno, e.col) from None
    return _build(parsed[0])
