"""
incarnation.py - 행동의 incarnation |B| 와 멤버십
===================================================
|B| 는 B 에 속하는 ⊑-최소 디자인들의 집합입니다. 연결사마다 구조 규칙으로
직접 만들고, ⊸ 와 ⊥ 처럼 구조 규칙이 없는 경우는 V_B 의 뷰 나무 위에서
"모든 일관된 전략" 을 나열합니다.

[초보자 안내]
- 양수 자리: 뷰 나무에 있는 양수 행동 하나를 고릅니다 (# 포함).
- 음수 자리: 그 주소의 음수 행동을 전부 분기로 둡니다.
- 나열할 디자인 수가 limit(기본 Config.MAX_DESIGNS)을 넘으면
  BehaviourError 로 알려 줍니다. 큰 함수형 타입의 멤버십은
  visitable.member_by_paths 를 쓰세요.
- member(d, B)   : |B| 의 어떤 디자인 d' 에 대해 d' ⪯ d
- ortho_member(e, B) : e 가 |B| 의 모든 디자인과 직교 (즉 e ∈ B⊥)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import prod
from typing import Iterator

from config import Config
from core.errors import BehaviourError, CutPresentError, NotAMemberError, PolarityError
from core.syntax import (
    DAIMON,
    X0,
    Branch,
    Design,
    FreshNames,
    Neg,
    PosApp,
    all_vars,
    alpha_eq,
    is_cut_free,
    polarity_of,
    rename_free,
)
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
    signature_of,
    unfold,
    with_level,
)
from behaviours.visitable import all_visitable_paths, explore
from paths.actions import Seq
from paths.completion import ViewTrie, completion, design_from_views, prefix_views
from paths.forest import paths_of
from paths.views import dual
from reduction.normalizer import is_orthogonal
from reduction.orders import obs_leq

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IncarnationSet:
    """|B| 의 디자인들 (나열 순서는 결정적)"""

    designs: tuple[Design, ...]
    behaviour: BehaviourExpr
    level: int | None = None

    def __len__(self) -> int:
        return len(self.designs)

    def __iter__(self) -> Iterator[Design]:
        return iter(self.designs)

    def __contains__(self, d: object) -> bool:
        return any(alpha_eq(d, e) for e in self.designs)


def _check_limit(count: int, limit: int, expr: BehaviourExpr) -> None:
    if count > limit:
        raise BehaviourError(
            f"incarnation 이 너무 큽니다: {render_behaviour(expr)} 에 디자인 {count} 개 (한계 {limit})"
        )


def down_design(p: Design) -> Neg:
    """val(x).p[x/x0] : 양수 디자인을 ↓ 로 감쌉니다 (x 는 p 에 없는 새 이름)."""
    x = FreshNames(all_vars(p) | {X0}, prefix="x")()
    return Neg((Branch("val", (x,), rename_free(p, {X0: x})),))


def _strategies(expr: BehaviourExpr, limit: int) -> tuple[Design, ...]:
    """V_B 의 뷰 나무 위의 모든 전략"""
    views: set[Seq] = set()
    for s in all_visitable_paths(expr):
        views |= prefix_views(s)
    trie = ViewTrie(views)
    counts: dict[tuple, int] = {}

    def count_pos(prefix: Seq) -> int:
        key = ("+", prefix)
        if key not in counts:
            total = 0
            for a in trie.next(prefix):
                if a.is_daimon:
                    total += 1
                elif a.is_positive:
                    total += prod(count_neg(prefix + (a,), z) for z in a.bound)
            counts[key] = total
        return counts[key]

    def count_neg(prefix: Seq, address: str) -> int:
        key = ("-", prefix, address)
        if key not in counts:
            counts[key] = prod(
                count_pos(prefix + (a,)) for a in trie.next(prefix) if not a.is_positive and a.address == address
            )
        return counts[key]

    positive = polarity_of_expr(expr).value == "+"
    _check_limit(count_pos(()) if positive else count_neg((), X0), limit, expr)

    def pos_at(prefix: Seq) -> list[Design]:
        options: list[Design] = []
        for a in trie.next(prefix):
            if a.is_daimon:
                options.append(DAIMON)
            elif a.is_positive:
                here = prefix + (a,)
                for args in product(*(neg_at(here, z) for z in a.bound)):
                    options.append(PosApp(a.address, a.name, tuple(args)))
        return options

    def neg_at(prefix: Seq, address: str) -> list[Neg]:
        acts = [a for a in trie.next(prefix) if not a.is_positive and a.address == address]
        choices = [pos_at(prefix + (a,)) for a in acts]
        return [
            Neg(tuple(Branch(a.name, a.bound, body) for a, body in zip(acts, bodies)))
            for bodies in product(*choices)
        ]

    return tuple(pos_at(())) if positive else tuple(neg_at((), X0))


@lru_cache(maxsize=1024)
def _incarnation(expr: BehaviourExpr, limit: int) -> tuple[Design, ...]:
    match expr:
        case Const(name, arity):
            return (DAIMON, PosApp(X0, name, (Neg(()),) * arity))
        case DaimonBeh():
            return (DAIMON,)
        case Up(body):
            return (DAIMON,) + tuple(PosApp(X0, "val", (n,)) for n in _incarnation(body, limit))
        case Down(body):
            return tuple(down_design(p) for p in _incarnation(body, limit))
        case Inj(index, body):
            return (DAIMON,) + tuple(PosApp(X0, f"p{index}", (n,)) for n in _incarnation(body, limit))
        case Plus(left, right):
            return _incarnation(Inj(1, left), limit) + _incarnation(Inj(2, right), limit)[1:]
        case Tensor(left, right):
            lefts, rights = _incarnation(left, limit), _incarnation(right, limit)
            _check_limit(len(lefts) * len(rights) + 1, limit, expr)
            return (DAIMON,) + tuple(PosApp(X0, "pr", (m, n)) for m, n in product(lefts, rights))
        case Limp() | Orth():
            return _strategies(expr, limit)
        case Deloc(body, address):
            return tuple(rename_free(d, {X0: address}) for d in _incarnation(body, limit))
        case MuLevel():
            return _incarnation(unfold(expr), limit)
        case RecVar(name):
            raise BehaviourError(f"μ 바깥에 재귀 변수 '{name}' 가 있습니다.")
    raise BehaviourError(f"알 수 없는 행동 식입니다: {expr!r}")


def incarnation(B: BehaviourExpr, level: int | None = None, limit: int | None = None) -> IncarnationSet:
    """
    |B| 를 계산합니다.

    Args:
        B: 행동 식
        level: 주면 모든 μ 의 단계를 이 값으로 바꿈
        limit: 나열할 디자인 수 상한 (None 이면 Config.MAX_DESIGNS)

    Raises:
        BehaviourError: 디자인 수가 상한을 넘을 때
    """
    limit = Config.MAX_DESIGNS if limit is None else limit
    designs = _incarnation(with_level(B, level), limit)
    logger.debug("|%s| = %d", render_behaviour(B), len(designs))
    return IncarnationSet(designs, B, level)


def _check_design(d: Design, B: BehaviourExpr) -> None:
    if not is_cut_free(d):
        raise CutPresentError("멤버십 검사에는 컷 없는 디자인이 필요합니다.")
    if polarity_of(d) is not polarity_of_expr(B):
        raise PolarityError("디자인과 행동의 극성이 다릅니다.")


def member(d: Design, B: BehaviourExpr, level: int | None = None) -> bool:
    """d ∈ B : |B| 의 어떤 디자인 d' 가 d' ⪯ d 이면 참"""
    _check_design(d, B)
    return any(obs_leq(e, d) for e in incarnation(B, level))


def ortho_member(e: Design, B: BehaviourExpr, level: int | None = None) -> bool:
    """e ∈ B⊥ : |B| 의 모든 디자인과 직교이면 참"""
    if not is_cut_free(e):
        raise CutPresentError("멤버십 검사에는 컷 없는 디자인이 필요합니다.")
    if polarity_of(e) is polarity_of_expr(B):
        raise PolarityError("B⊥ 멤버십에는 B 와 극성이 반대인 디자인이 필요합니다.")
    for d in incarnation(B, level):
        p, n = (e, d) if isinstance(d, Neg) else (d, e)
        if not is_orthogonal(p, n):
            return False
    return True


def incarnate_design(d: Design, B: BehaviourExpr, level: int | None = None) -> Design:
    """
    |d|_B : d 에서 B 의 테스트들이 실제로 방문하는 부분만 남긴 디자인.

    Raises:
        NotAMemberError: d ∉ B
    """
    _check_design(d, B)
    found = explore(d, B, level)
    if not found.ok:
        raise NotAMemberError(f"디자인이 {render_behaviour(B)} 에 속하지 않습니다.")
    return design_from_views(found.views, polarity_of_expr(B).value == "+")


def oracle_visitable_paths(B: BehaviourExpr, level: int | None = None, max_len: int | None = None) -> set[Seq]:
    """
    정의대로 V_B 를 계산합니다: |B| 의 디자인의 경로 s 가운데
    ⌈dual s⌉ ∈ B⊥ 인 것. 닫힌 형태(visitable_paths)의 교차 검증용.
    """
    sig = signature_of(B)
    out: set[Seq] = set()
    for d in incarnation(B, level):
        for s in paths_of(d, max_len):
            if ortho_member(completion(dual(s), sig), B, level):
                out.add(s)
    return out
