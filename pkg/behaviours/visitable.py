"""
visitable.py - 방문 가능 경로 V_B 와 경로 기반 멤버십
======================================================
정규 행동의 방문 가능 경로는 연결사마다 닫힌 형태가 있습니다.

  V_{C_a}      = {#, x0|a<..>}
  V_{↑N}       = {#} ∪ κ▼ V_N
  V_{↓P}       = {ε} ∪ κ▲ V_P
  V_{M ⊕ N}    = {#} ∪ κι1 V_M ∪ κι2 V_N
  V_{M ⊗ N}    = {#} ∪ κ• (V_M ⧢ V_N)
  V_{N ⊸ P}    = {ε} ∪ dual(κ• (V_N ⧢ dual V_P))
  V_{B⊥}       = dual V_B

여기서 κ 는 x0 에 놓인 연결사 행동이고, 부분 행동의 경로는 κ 가 만든
새 주소로 옮겨(delocate) 붙입니다.

[초보자 안내]
- 결과는 항상 canonical 이름을 쓴 경로의 frozenset 입니다.
- max_len 을 넘는 경로는 버립니다. 부분식에 넘기는 한계는 연결사마다
  조금씩 다릅니다 (⊸ 의 오른쪽, ⊥ 는 쌍대 때문에 1 더 길게).
- explore() 는 디자인 d 를 V_B 로 만든 "모든 테스트" 와 맞붙여 보는
  게임 탐색입니다. 상대(O)의 수는 모두 시도하고, d(P)의 응답은 d 의 뷰에서
  찾습니다. 응답이 없거나 V_B 에 없는 수를 두면 실패입니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from config import Config
from core.errors import BehaviourError, PolarityError
from core.syntax import X0, Design, Polarity, count_actions, polarity_of
from behaviours.expr import (
    BehaviourExpr,
    Const,
    DaimonBeh,
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
    polarity_of_expr,
    render_behaviour,
    unfold,
    with_level,
)
from paths.actions import DAIMON_ACTION, LocatedAction, Seq, canonical, neg, pos
from paths.completion import ViewTrie
from paths.forest import views_of
from paths.shuffle import shuffle
from paths.views import dual, view_of

logger = logging.getLogger(__name__)

# 연결사 행동이 만드는 주소의 임시 이름 (canonical 에서 y.. 로 바뀜)
_SUB = "%s"
_LEFT = "%l"
_RIGHT = "%r"


def _at(paths: Iterable[Seq], address: str) -> set[Seq]:
    """x0 에 놓인 경로들을 address 로 옮깁니다."""
    mapping = {X0: address}
    return {tuple(a.rename(mapping) for a in s) for s in paths}


def _behind(first: LocatedAction, paths: Iterable[Seq]) -> set[Seq]:
    return {canonical((first,) + s) for s in paths}


def _cap(paths: Iterable[Seq], bound: int | None) -> frozenset[Seq]:
    return frozenset(s for s in paths if bound is None or len(s) <= bound)


def _less(bound: int | None, k: int = 1) -> int | None:
    return None if bound is None else bound - k


def _pairs_shuffle(left: Iterable[Seq], right: Iterable[Seq], bound: int | None) -> set[Seq]:
    right = list(right)
    out: set[Seq] = set()
    for s in left:
        for t in right:
            if bound is not None and len(s) + len(t) > bound:
                continue
            out |= shuffle(s, t)
    return out


@lru_cache(maxsize=4096)
def _visitable(expr: BehaviourExpr, bound: int | None) -> frozenset[Seq]:
    match expr:
        case Const(name, arity):
            proper = canonical((pos(X0, name, *(f"%{i}" for i in range(arity))),))
            return _cap({(DAIMON_ACTION,), proper}, bound)
        case DaimonBeh():
            return _cap({(DAIMON_ACTION,)}, bound)
        case Up(body):
            inner = _at(_visitable(body, _less(bound)), _SUB)
            return _cap({(DAIMON_ACTION,)} | _behind(pos(X0, "val", _SUB), inner), bound)
        case Down(body):
            inner = _at(_visitable(body, _less(bound)), _SUB)
            return _cap({()} | _behind(neg(X0, "val", _SUB), inner), bound)
        case Inj(index, body):
            inner = _at(_visitable(body, _less(bound)), _SUB)
            return _cap({(DAIMON_ACTION,)} | _behind(pos(X0, f"p{index}", _SUB), inner), bound)
        case Plus(left, right):
            return _visitable(Inj(1, left), bound) | _visitable(Inj(2, right), bound)
        case Tensor(left, right):
            sub = _less(bound)
            merged = _pairs_shuffle(
                _at(_visitable(left, sub), _LEFT),
                _at(_visitable(right, sub), _RIGHT),
                sub,
            )
            return _cap({(DAIMON_ACTION,)} | _behind(pos(X0, "pr", _LEFT, _RIGHT), merged), bound)
        case Limp(left, right):
            tests = {dual(p) for p in _visitable(right, _less(bound, -1))}
            merged = _pairs_shuffle(_at(_visitable(left, bound), _LEFT), _at(tests, _RIGHT), bound)
            kappa = pos(X0, "pr", _LEFT, _RIGHT)
            return _cap({()} | {canonical(dual((kappa,) + u)) for u in merged}, bound)
        case Orth(body):
            return _cap({canonical(dual(s)) for s in _visitable(body, _less(bound, -1))}, bound)
        case Deloc(body, address):
            return frozenset(canonical(s) for s in _at(_visitable(body, bound), address))
        case MuLevel():
            return _visitable(unfold(expr), bound)
        case RecVar(name):
            raise BehaviourError(f"μ 바깥에 재귀 변수 '{name}' 가 있습니다.")
    raise BehaviourError(f"알 수 없는 행동 식입니다: {expr!r}")


def visitable_paths(B: BehaviourExpr, level: int | None = None, max_len: int | None = None) -> frozenset[Seq]:
    """
    V_B 를 길이 max_len 까지 계산합니다.

    Args:
        B: 행동 식
        level: 주면 모든 μ 의 단계를 이 값으로 바꿈
        max_len: 경로 길이 상한 (None 이면 Config.MAX_LEN)
    """
    bound = Config.MAX_LEN if max_len is None else max_len
    paths = _visitable(with_level(B, level), bound)
    logger.debug("V(%s) 길이<=%d: %d 개", render_behaviour(B), bound, len(paths))
    return paths


def all_visitable_paths(B: BehaviourExpr, level: int | None = None) -> frozenset[Seq]:
    """길이 한계 없이 V_B 전체 (μ 가 펼쳐진 뒤에는 항상 유한)"""
    return _visitable(with_level(B, level), None)


def is_visitable(s: Seq, B: BehaviourExpr, level: int | None = None) -> bool:
    return canonical(s) in _visitable(with_level(B, level), len(s))


def next_moves(paths: Iterable[Seq]) -> dict[Seq, set[LocatedAction]]:
    """경로 집합의 모든 접두사에 대해 "다음에 둘 수 있는 행동" 표"""
    table: dict[Seq, set[LocatedAction]] = {}
    for s in paths:
        for k in range(len(s)):
            table.setdefault(s[:k], set()).add(s[k])
    return table


# ---------------------------------------------------------------
# 게임 탐색
# ---------------------------------------------------------------

@dataclass
class Exploration:
    """explore() 결과: 성공 여부, 실패한 위치, 지나간 d 의 뷰들"""

    ok: bool
    failure: Seq | None = None
    views: set[Seq] = field(default_factory=set)


def _reply(trie: ViewTrie, u: Seq) -> LocatedAction | None:
    """u 까지 진행했을 때 d 가 두는 양수 행동을 u 의 이름으로 돌려줍니다."""
    vu = view_of(u)
    cv = canonical(vu)
    back: dict[str, str] = {}
    for original, renamed in zip(vu, cv):
        back.update(zip(renamed.bound, original.bound))
    replies = [a for a in trie.next(cv) if a.is_positive]
    if not replies:
        return None
    a = replies[0]
    if a.is_daimon:
        return a
    return LocatedAction(
        a.polarity,
        back.get(a.address, a.address),
        a.name,
        tuple(f"%n{i}" for i in range(len(a.bound))),
    )


def explore(d: Design, B: BehaviourExpr, level: int | None = None, max_len: int | None = None) -> Exploration:
    """
    d 를 V_B 의 모든 테스트와 맞붙입니다.

    Args:
        d: 컷 없는 원자적 디자인
        B: d 와 극성이 같은 행동
        level: μ 단계
        max_len: 탐색 깊이 (None 이면 d 의 행동 수 + 1, 이보다 긴 경로는 d 와 놀 수 없음)

    Raises:
        PolarityError: 극성이 다를 때
    """
    if polarity_of(d) is not polarity_of_expr(B):
        raise PolarityError("디자인과 행동의 극성이 다릅니다.")
    bound = count_actions(d) + 1 if max_len is None else max_len
    moves = next_moves(_visitable(with_level(B, level), bound))
    trie = ViewTrie(views_of(d))
    seen: set[Seq] = {()}

    def opponent(u: Seq) -> Seq | None:
        for k in sorted(moves.get(u, ()), key=str):
            if k.is_positive:
                continue
            t = u + (k,)
            seen.add(canonical(view_of(t)))
            bad = player(t)
            if bad is not None:
                return bad
        return None

    def player(u: Seq) -> Seq | None:
        if len(u) >= bound:
            return None
        a = _reply(trie, u)
        if a is None:
            return u
        t = canonical(u + (a,))
        seen.add(canonical(view_of(t)))
        if a.is_daimon:
            return None
        if t[-1] not in moves.get(u, ()):
            return t
        return opponent(t)

    failure = player(()) if polarity_of(d) is Polarity.POSITIVE else opponent(())
    if failure is not None:
        logger.debug("탐색 실패: %s", " ".join(map(str, failure)))
    return Exploration(ok=failure is None, failure=failure, views=seen)


def member_by_paths(d: Design, B: BehaviourExpr, level: int | None = None, max_len: int | None = None) -> bool:
    """d ∈ B 를 V_B 게임 탐색으로 판정합니다 (정규 행동에서 incarnation 과 같은 답)."""
    return explore(d, B, level, max_len).ok
