"""
parser.py - 디자인 텍스트 문법 해석기와 출력기
==============================================
텍스트로 적은 디자인을 Design 값으로 바꾸고(parse), 다시 텍스트로
되돌립니다(render).

문법:
    source ::= [ "sig" (NAME/INT [","])+ ";" ] design
    design ::= pos | neg
    pos    ::= "#" | "_" | head "|" NAME "<" [neg ("," neg)*] ">" | "(" pos ")"
    head   ::= VAR | "[" neg "]"
    neg    ::= "{}" | branch ("+" branch)* | "(" neg ")"
    branch ::= NAME "(" [VAR ("," VAR)*] ")" "." pos

    "--" 부터 줄 끝까지는 주석입니다.

[초보자 안내]
- sig 머리말이 있으면 거기 선언된 이름만 쓸 수 있습니다 (UndeclaredNameError).
- sig 머리말이 없으면 사용된 모양에서 인자 개수를 추론합니다.
  같은 이름을 다른 개수로 쓰면 ArityError 가 납니다.
- 해석은 두 단계입니다. pyparsing 이 먼저 "날것" 구조를 만들고,
  _Builder 가 이름/선형성 검사를 하면서 Design 값을 만듭니다.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import pyparsing as pp

from config import Config
from core.errors import ArityError, DesignSyntaxError, LinearityError
from core.syntax import (
    DAIMON,
    OMEGA,
    X0,
    Branch,
    Cut,
    Daimon,
    Design,
    Neg,
    Omega,
    PosApp,
    Signature,
    is_linear,
)

pp.ParserElement.enable_packrat()


# ---------------------------------------------------------------
# 날것(raw) 구조: 위치 정보를 가진 중간 표현
# ---------------------------------------------------------------

@dataclass
class _RawApp:
    head: object  # str(변수) 또는 _RawNeg(컷)
    name: str
    args: list
    line: int
    col: int


@dataclass
class _RawBranch:
    name: str
    params: list[str]
    body: object
    line: int
    col: int


@dataclass
class _RawNeg:
    branches: list = field(default_factory=list)


@dataclass
class _RawCutHead:
    neg: _RawNeg


def _where(s: str, loc: int) -> tuple[int, int]:
    return pp.lineno(loc, s), pp.col(loc, s)


def _build_grammar() -> pp.ParserElement:
    ident = pp.Regex(r"[A-Za-z][A-Za-z0-9']*")
    LPAR, RPAR, LANG, RANG, LBRK, RBRK, BAR, DOT, PLUS, COMMA = map(pp.Suppress, "()<>[]|.+,")

    pos = pp.Forward()
    neg = pp.Forward()

    daimon = pp.Literal("#").set_parse_action(lambda: DAIMON)
    omega = pp.Literal("_").set_parse_action(lambda: OMEGA)

    head = ident | (LBRK + neg + RBRK).set_parse_action(lambda t: _RawCutHead(t[0]))
    neg_list = pp.Group(pp.Optional(neg + pp.ZeroOrMore(COMMA + neg)))
    app = head + BAR + ident + LANG + neg_list + RANG
    app.set_parse_action(lambda s, loc, t: _RawApp(t[0], t[1], list(t[2]), *_where(s, loc)))

    pos <<= daimon | omega | app | (LPAR + pos + RPAR)

    params = pp.Group(pp.Optional(ident + pp.ZeroOrMore(COMMA + ident)))
    branch = ident + LPAR + params + RPAR + DOT + pos
    branch.set_parse_action(lambda s, loc, t: _RawBranch(t[0], list(t[1]), t[2], *_where(s, loc)))

    empty = pp.Regex(r"\{\s*\}").set_parse_action(lambda: _RawNeg([]))
    branch_sum = (branch + pp.ZeroOrMore(PLUS + branch)).set_parse_action(lambda t: _RawNeg(list(t)))
    neg <<= empty | branch_sum | (LPAR + neg + RPAR)

    sig_entry = pp.Group(ident + pp.Suppress("/") + pp.Word(pp.nums))
    sig_header = pp.Keyword("sig") + pp.Group(pp.OneOrMore(sig_entry + pp.Optional(COMMA))) + pp.Suppress(";")

    source = pp.Optional(pp.Group(sig_header)("sig")) + pp.Group(pos | neg)("design") + pp.StringEnd()
    source.ignore(pp.Regex(r"--[^\n]*"))
    return source


_GRAMMAR = _build_grammar()


# ---------------------------------------------------------------
# 날것 구조 → Design
# ---------------------------------------------------------------

class _Builder:
    """이름/인자 개수/매개변수 검사를 하면서 Design 을 만듭니다."""

    def __init__(self, signature: Signature, declared: bool):
        self.signature = signature
        self.declared = declared

    def _check_name(self, name: str, arity: int, line: int, col: int) -> None:
        if self.declared:
            expected = self.signature.arity(name)
            if expected != arity:
                raise ArityError(f"이름 '{name}' 은(는) 인자 {expected}개인데 {arity}개가 쓰였습니다 (줄 {line}, 열 {col})")
        else:
            self.signature.declare(name, arity)

    def positive(self, raw) -> Design:
        if isinstance(raw, (Daimon, Omega)):
            return raw
        self._check_name(raw.name, len(raw.args), raw.line, raw.col)
        args = tuple(self.negative(a) for a in raw.args)
        if isinstance(raw.head, _RawCutHead):
            return Cut(self.negative(raw.head.neg), raw.name, args)
        return PosApp(raw.head, raw.name, args)

    def negative(self, raw: _RawNeg) -> Neg:
        branches = []
        for b in raw.branches:
            if X0 in b.params:
                raise DesignSyntaxError(f"{X0} 은(는) 매개변수로 쓸 수 없습니다", b.line, b.col)
            if len(set(b.params)) != len(b.params):
                raise LinearityError(f"분기 '{b.name}' 의 매개변수가 중복되었습니다 (줄 {b.line}, 열 {b.col})")
            self._check_name(b.name, len(b.params), b.line, b.col)
            branches.append(Branch(b.name, tuple(b.params), self.positive(b.body)))
        return Neg(tuple(branches))


@dataclass
class ParsedDesign:
    """해석 결과: 시그니처와 디자인"""

    signature: Signature
    design: Design


def parse_source(
    text: str,
    signature: Signature | None = None,
    strict_linear: bool | None = None,
) -> ParsedDesign:
    """
    디자인 텍스트를 해석합니다.

    Args:
        text: 디자인 텍스트 (sig 머리말 포함 가능)
        signature: 미리 정한 시그니처 (주면 선언된 이름만 허용)
        strict_linear: True 면 비선형 디자인을 거부 (기본값: Config.STRICT_LINEAR)

    Returns:
        ParsedDesign(signature, design)
    """
    strict = Config.STRICT_LINEAR if strict_linear is None else strict_linear
    try:
        parsed = _GRAMMAR.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise DesignSyntaxError(f"디자인 문법 오류: {e.msg}", e.lineno, e.col) from None

    declared = signature is not None
    sig = Signature(dict(signature.arities)) if signature is not None else Signature()
    if "sig" in parsed:
        declared = True
        for name, arity in parsed["sig"][1]:
            sig.declare(name, int(arity))

    builder = _Builder(sig, declared)
    raw = parsed["design"][0]
    design = builder.negative(raw) if isinstance(raw, _RawNeg) else builder.positive(raw)

    if strict and not is_linear(design):
        raise LinearityError("비선형 디자인입니다: 한 변수가 여러 인자에 함께 나타납니다.")
    return ParsedDesign(sig, design)


def parse_design(
    text: str,
    signature: Signature | None = None,
    strict_linear: bool | None = None,
) -> Design:
    """디자인 텍스트를 Design 으로 바꿉니다. (parse_source 의 간단 버전)"""
    return parse_source(text, signature, strict_linear).design


def render_design(d: Design) -> str:
    """Design 을 다시 해석 가능한 텍스트로 바꿉니다."""
    if isinstance(d, Daimon):
        return "#"
    if isinstance(d, Omega):
        return "_"
    if isinstance(d, PosApp):
        return f"{d.head}|{d.name}<{', '.join(render_design(a) for a in d.args)}>"
    if isinstance(d, Cut):
        return f"[{render_design(d.head)}]|{d.name}<{', '.join(render_design(a) for a in d.args)}>"
    if not d.branches:
        return "{}"
    parts = []
    for b in d.branches:
        body = render_design(b.body)
        if isinstance(b.body, (PosApp, Cut)):
            body = f"({body})"
        parts.append(f"{b.name}({', '.join(b.params)}).{body}")
    return " + ".join(parts)
