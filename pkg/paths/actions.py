"""
actions.py - 위치가 있는 행동(located action)과 행동 열
======================================================
행동 하나는 "어느 주소(address)에서, 어떤 이름으로, 어떤 새 주소들을
만들었는가" 를 기록합니다.

  양수 행동   x|a<y1,y2>   주소 x 에 이름 a 를 보내고 새 주소 y1, y2 를 만듦
  음수 행동   a_x(y1,y2)   주소 x 에서 이름 a 를 받고 새 주소 y1, y2 를 만듦
  데몬        #

행동 열(sequence)은 그냥 tuple[LocatedAction, ...] 입니다.
어떤 행동의 "정당화 행동(justifier)" 은 그 행동의 주소를 만든 앞선 행동입니다.

[초보자 안내]
- 같은 경로라도 새 주소 이름은 아무렇게나 붙일 수 있으므로,
  canonical() 로 이름을 y1, y2, ... 순서대로 다시 붙여서 비교합니다.
- canonical 은 접두사에 대해 안정적입니다: canonical(s)[:k] == canonical(s[:k]).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import pyparsing as pp

from core.errors import DesignSyntaxError
from core.syntax import Polarity

CANONICAL_PREFIX = "y"


@dataclass(frozen=True)
class LocatedAction:
    polarity: Polarity
    address: str | None
    name: str | None
    bound: tuple[str, ...] = ()

    @property
    def is_daimon(self) -> bool:
        return self.name is None

    @property
    def is_positive(self) -> bool:
        return self.polarity is Polarity.POSITIVE

    @property
    def is_proper(self) -> bool:
        return self.name is not None

    def overline(self) -> "LocatedAction":
        """극성만 뒤집은 행동 (데몬은 그대로)"""
        if self.is_daimon:
            return self
        return LocatedAction(self.polarity.flip(), self.address, self.name, self.bound)

    def rename(self, mapping: dict[str, str]) -> "LocatedAction":
        if self.is_daimon:
            return self
        return LocatedAction(
            self.polarity,
            mapping.get(self.address, self.address),
            self.name,
            tuple(mapping.get(b, b) for b in self.bound),
        )

    def __str__(self) -> str:
        if self.is_daimon:
            return "#"
        if self.is_positive:
            return f"{self.address}|{self.name}<{','.join(self.bound)}>"
        return f"{self.name}_{self.address}({','.join(self.bound)})"

    def __repr__(self) -> str:
        return f"LocatedAction({self})"


DAIMON_ACTION = LocatedAction(Polarity.POSITIVE, None, None, ())

Seq = tuple[LocatedAction, ...]


def pos(address: str, name: str, *bound: str) -> LocatedAction:
    return LocatedAction(Polarity.POSITIVE, address, name, tuple(bound))


def neg(address: str, name: str, *bound: str) -> LocatedAction:
    return LocatedAction(Polarity.NEGATIVE, address, name, tuple(bound))


def justifiers(s: Sequence[LocatedAction]) -> list[int | None]:
    """각 행동의 정당화 행동 위치. 초기 행동과 데몬은 None."""
    binder: dict[str, int] = {}
    out: list[int | None] = []
    for i, a in enumerate(s):
        out.append(None if a.is_daimon else binder.get(a.address))
        for b in a.bound:
            binder[b] = i
    return out


def free_addresses(s: Sequence[LocatedAction]) -> set[str]:
    """열 안에서 만들어지지 않은 주소들 (x0 같은 바깥 주소)"""
    made: set[str] = set()
    free: set[str] = set()
    for a in s:
        if a.is_proper and a.address not in made:
            free.add(a.address)
        made.update(a.bound)
    return free


def polarity_of_seq(s: Sequence[LocatedAction]) -> Polarity:
    """열의 극성은 첫 행동의 극성입니다. 빈 열은 음수."""
    return s[0].polarity if s else Polarity.NEGATIVE


def canonical(s: Iterable[LocatedAction]) -> Seq:
    """만들어진 주소 이름을 나타나는 순서대로 y1, y2, ... 로 바꿉니다."""
    s = tuple(s)
    taken = free_addresses(s)
    mapping: dict[str, str] = {}
    counter = 0
    out = []
    for a in s:
        for b in a.bound:
            while True:
                counter += 1
                candidate = f"{CANONICAL_PREFIX}{counter}"
                if candidate not in taken:
                    break
            mapping[b] = candidate
        out.append(a.rename(mapping))
    return tuple(out)


def overline_seq(s: Iterable[LocatedAction]) -> Seq:
    return tuple(a.overline() for a in s)


def render_seq(s: Iterable[LocatedAction]) -> str:
    text = " ".join(str(a) for a in s)
    return text or "ε"


# ---------------------------------------------------------------
# 텍스트 / JSON 형식
# ---------------------------------------------------------------

def _build_grammar() -> pp.ParserElement:
    ident = pp.Regex(r"[A-Za-z][A-Za-z0-9']*")
    names = pp.Group(pp.Optional(ident + pp.ZeroOrMore(pp.Suppress(",") + ident)))
    positive = ident + pp.Suppress("|") + ident + pp.Suppress("<") + names + pp.Suppress(">")
    positive.set_parse_action(lambda t: pos(t[0], t[1], *t[2]))
    negative = ident + pp.Suppress("_") + ident + pp.Suppress("(") + names + pp.Suppress(")")
    negative.set_parse_action(lambda t: neg(t[1], t[0], *t[2]))
    daimon = pp.Literal("#").set_parse_action(lambda: DAIMON_ACTION)
    empty = pp.Literal("ε").set_parse_action(lambda: [])
    return (empty | pp.ZeroOrMore(daimon | positive | negative)) + pp.StringEnd()


_GRAMMAR = _build_grammar()


def parse_seq(text: str) -> Seq:
    """
    공백으로 구분된 행동 열을 해석합니다.

    예: "x0|a<y1> b_y1() y2|c<>"   (빈 열은 "" 또는 "ε")
    """
    try:
        return tuple(_GRAMMAR.parse_string(text.strip(), parse_all=True))
    except pp.ParseBaseException as e:
        raise DesignSyntaxError(f"경로 문법 오류: {e.msg}", e.lineno, e.col) from None


def seq_to_json(s: Sequence[LocatedAction]) -> list[dict]:
    """정당화 위치를 명시한 JSON 배열 형식"""
    out = []
    for a, j in zip(s, justifiers(s)):
        if a.is_daimon:
            out.append({"daimon": True})
            continue
        out.append({
            "polarity": a.polarity.value,
            "address": a.address,
            "name": a.name,
            "bound": list(a.bound),
            "justifier": j,
        })
    return out


def seq_from_json(data: str | list) -> Seq:
    items = json.loads(data) if isinstance(data, str) else data
    out = []
    for item in items:
        if item.get("daimon"):
            out.append(DAIMON_ACTION)
        else:
            out.append(LocatedAction(Polarity(item["polarity"]), item["address"], item["name"], tuple(item["bound"])))
    return tuple(out)
