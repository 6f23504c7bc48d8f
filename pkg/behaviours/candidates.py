"""
candidates.py - 작은 디자인 나열과 내부 완전성(internal completeness) 확인
==========================================================================
↑, ↓, ⊕, ⊗, C_a 로 만든 행동은 B⊥⊥ 를 따로 계산하지 않아도
"데몬 또는 연결사 모양 + 성분이 각 부분 행동에 속함" 이라는 명시적 집합과
같습니다. 이 모듈은 작은 디자인을 모두 만들어 보고 두 판정이
정말 같은지 확인합니다.

[초보자 안내]
- enumerate_designs : 주어진 이름들로 만들 수 있는 행동 수 max_actions 이하의
                      컷 없는 선형 원자적 디자인을 모두 만듭니다.
- closure_report    : 후보 c 마다 "|B⊥| 와 모두 직교" 와 "명시적 모양"
                      을 비교합니다. 어긋나는 후보가 있으면 holds=False.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator

from config import Config
from core.errors import BehaviourError
from core.parser import render_design
from core.syntax import DAIMON, X0, Branch, Design, Neg, PosApp, is_linear, rename_free
from behaviours.expr import (
    BehaviourExpr,
    Const,
    Deloc,
    Down,
    MuLevel,
    Orth,
    Plus,
    Tensor,
    Up,
    polarity_of_expr,
    render_behaviour,
    unfold,
    with_level,
)
from behaviours.incarnation import member, ortho_member
from behaviours.visitable import visitable_paths

logger = logging.getLogger(__name__)


def _splits(total: int, parts: int, least: int) -> Iterator[tuple[int, ...]]:
    """total 을 parts 개의 least 이상 정수로 나누는 모든 방법"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(least, total - least * (parts - 1) + 1):
        for rest in _splits(total - first, parts - 1, least):
            yield (first,) + rest


def enumerate_designs(names: dict[str, int], max_actions: int, positive: bool, limit: int | None = None) -> list[Design]:
    """
    행동 수가 max_actions 이하인 모든 선형 원자적 디자인.

    x0 은 양수 디자인의 뿌리에서만 씁니다.

    Raises:
        BehaviourError: 개수가 limit(기본 Config.MAX_DESIGNS)을 넘을 때
    """
    limit = Config.MAX_DESIGNS if limit is None else limit
    ordered = sorted(names.items())
    total = 0

    def grow(out: list, d: Design) -> None:
        nonlocal total
        out.append(d)
        total += 1
        if total > limit:
            raise BehaviourError(f"후보 디자인이 너무 많습니다 (한계 {limit})")

    @lru_cache(maxsize=None)
    def pos(n: int, avail: frozenset[str]) -> tuple[Design, ...]:
        out: list[Design] = []
        if n == 1:
            grow(out, DAIMON)
        for head in sorted(avail):
            rest = avail - {head}
            for name, arity in ordered:
                for split in _splits(n - 1, arity, 0):
                    for args in product(*(neg(k, rest) for k in split)):
                        d = PosApp(head, name, tuple(args))
                        if is_linear(d):
                            grow(out, d)
        return tuple(out)

    @lru_cache(maxsize=None)
    def neg(n: int, avail: frozenset[str]) -> tuple[Neg, ...]:
        if n == 0:
            return (Neg(()),)
        out: list[Neg] = []
        for k in range(1, len(ordered) + 1):
            for chosen in combinations(ordered, k):
                params = [tuple(f"v{n}_{name}{i}" for i in range(arity)) for name, arity in chosen]
                for split in _splits(n, k, 2):
                    bodies = [pos(size - 1, avail | set(ps)) for size, ps in zip(split, params)]
                    for picked in product(*bodies):
                        grow(out, Neg(tuple(Branch(name, ps, b) for (name, _), ps, b in zip(chosen, params, picked))))
        return tuple(out)

    found: list[Design] = []
    for n in range(0 if not positive else 1, max_actions + 1):
        found.extend(pos(n, frozenset({X0})) if positive else neg(n, frozenset()))
    return found


def _names_of(B: BehaviourExpr, max_len: int) -> dict[str, int]:
    names: dict[str, int] = {}
    for s in visitable_paths(B, max_len=max_len):
        for a in s:
            if a.is_proper:
                names[a.name] = len(a.bound)
    return names


def _strip(expr: BehaviourExpr) -> BehaviourExpr:
    while isinstance(expr, (MuLevel, Deloc)):
        if isinstance(expr, Deloc):
            raise BehaviourError("위치를 옮긴 행동은 내부 완전성 검사 대상이 아닙니다.")
        expr = unfold(expr)
    return expr


def in_explicit_form(c: Design, B: BehaviourExpr) -> bool:
    """c 가 B 의 명시적 모양 (데몬 또는 연결사 + 성분 멤버) 인지"""
    expr = _strip(B)
    if polarity_of_expr(expr).value == "+" and c == DAIMON:
        return True
    match expr:
        case Const(name, arity):
            return isinstance(c, PosApp) and c.head == X0 and c.name == name and len(c.args) == arity
        case Up(body):
            return isinstance(c, PosApp) and c.head == X0 and c.name == "val" and member(c.args[0], body)
        case Plus(left, right):
            if not (isinstance(c, PosApp) and c.head == X0 and c.name in ("p1", "p2")):
                return False
            return member(c.args[0], left if c.name == "p1" else right)
        case Tensor(left, right):
            if not (isinstance(c, PosApp) and c.head == X0 and c.name == "pr"):
                return False
            return member(c.args[0], left) and member(c.args[1], right)
        case Down(body):
            branch = c.get("val") if isinstance(c, Neg) else None
            if branch is None:
                return False
            return member(rename_free(branch.body, {branch.params[0]: X0}), body)
    raise BehaviourError(f"명시적 모양을 모르는 연결사입니다: {render_behaviour(B)}")


@dataclass
class ClosureReport:
    behaviour: str
    max_actions: int
    checked: int = 0
    members: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations


def closure_report(B: BehaviourExpr, max_actions: int = 4, level: int | None = None, max_len: int | None = None) -> ClosureReport:
    """
    행동 수 max_actions 이하의 후보마다 "c ∈ B (|B⊥| 와 직교)" 와
    "c 가 명시적 모양" 이 같은 답을 내는지 확인합니다.
    """
    expr = with_level(B, level)
    names = _names_of(expr, max_len or Config.MAX_LEN)
    positive = polarity_of_expr(expr).value == "+"
    report = ClosureReport(render_behaviour(B), max_actions)
    for c in enumerate_designs(names, max_actions, positive):
        report.checked += 1
        inside = ortho_member(c, Orth(expr))
        explicit = in_explicit_form(c, expr)
        report.members += inside
        if inside != explicit:
            tag = "B 에 속하지만 명시적 모양이 아님" if inside else "명시적 모양이지만 B 에 속하지 않음"
            report.violations.append(f"{render_design(c)} : {tag}")
    logger.info("closure(%s): 후보 %d 개, 멤버 %d 개, 위반 %d 개",
                report.behaviour, report.checked, report.members, len(report.violations))
    return report
