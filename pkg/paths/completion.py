"""
completion.py - 뷰 집합에서 디자인 만들기, 완성 디자인 ⌈s⌉
==========================================================
경로 s 의 모든 접두사의 뷰를 모으면 나무(trie)가 됩니다. 이 나무를 그대로
디자인으로 읽으면 s 를 경로로 갖는 가장 작은 디자인(skeleton)이 되고,
비어 있는 자리를 데몬으로 채우면 ⪯ 에 대해 가장 큰 디자인 ⌈s⌉ 가 됩니다.

[초보자 안내]
- completion(s, sig) : 방문하지 않은 이름의 분기는 f(..).# 로,
                       다음 행동이 없는 양수 자리는 # 로 채웁니다.
- skeleton(s)        : 채우지 않고 오메가로 둡니다.
- design_from_views  : 여러 경로의 뷰를 한꺼번에 디자인으로 읽습니다.
                       (행동 incarnation 계산에서도 사용)
"""

from __future__ import annotations

from typing import Iterable

from core.errors import NotAPathError
from core.syntax import (
    DAIMON,
    OMEGA,
    X0,
    Branch,
    Design,
    FreshNames,
    Neg,
    PosApp,
    Signature,
)
from paths.actions import LocatedAction, Seq, canonical, polarity_of_seq
from paths.views import is_path, view_of


class ViewTrie:
    """canonical 뷰 집합을 "접두사 → 다음 행동들" 표로 만든 것"""

    def __init__(self, views: Iterable[Seq]):
        self.children: dict[Seq, list[LocatedAction]] = {}
        for v in views:
            for k in range(len(v)):
                nxt = self.children.setdefault(v[:k], [])
                if v[k] not in nxt:
                    nxt.append(v[k])

    def next(self, prefix: Seq) -> list[LocatedAction]:
        return self.children.get(prefix, [])


def prefix_views(s: Seq) -> set[Seq]:
    """s 의 모든 접두사의 뷰 (canonical)"""
    return {canonical(view_of(s[:k])) for k in range(len(s) + 1)}


def design_from_views(
    views: Iterable[Seq],
    positive: bool,
    signature: Signature | None = None,
) -> Design:
    """
    canonical 뷰 집합(접두사에 닫혀 있음)을 디자인으로 읽습니다.

    Args:
        views: 뷰들
        positive: 만들 디자인의 극성
        signature: 주면 빈 자리를 데몬으로 채운 완성 디자인, 없으면 오메가
    """
    trie = ViewTrie(views)
    names: list[str] = []
    avoid: set[str] = {X0}
    for acts in trie.children.values():
        for a in acts:
            if a.is_proper:
                avoid.add(a.address)
                avoid.update(a.bound)
    fresh = FreshNames(avoid, prefix="f")
    if signature is not None:
        names = signature.names()

    def pos_at(prefix: Seq) -> Design:
        nxt = [a for a in trie.next(prefix) if a.is_positive]
        if not nxt:
            return DAIMON if signature is not None else OMEGA
        a = nxt[0]
        if a.is_daimon:
            return DAIMON
        here = prefix + (a,)
        return PosApp(a.address, a.name, tuple(neg_at(here, z) for z in a.bound))

    def neg_at(prefix: Seq, address: str) -> Neg:
        branches = []
        seen: set[str] = set()
        for a in trie.next(prefix):
            if a.is_positive or a.address != address:
                continue
            seen.add(a.name)
            branches.append(Branch(a.name, a.bound, pos_at(prefix + (a,))))
        if signature is not None:
            for f in names:
                if f not in seen:
                    params = tuple(fresh() for _ in range(signature.arity(f)))
                    branches.append(Branch(f, params, DAIMON))
        return Neg(tuple(branches))

    if positive:
        return pos_at(())
    return neg_at((), X0)


def completion(s: Seq, signature: Signature) -> Design:
    """
    ⌈s⌉: s 를 경로로 갖는 ⪯-최대 디자인.

    Raises:
        NotAPathError: s 가 경로가 아닐 때
    """
    if not is_path(s):
        raise NotAPathError(f"경로가 아닙니다: {' '.join(map(str, s))}")
    positive = polarity_of_seq(s).value == "+"
    return design_from_views(prefix_views(s), positive, signature)


def skeleton(s: Seq) -> Design:
    """s 를 경로로 갖는 가장 작은 디자인 (빈 자리는 오메가)"""
    if not is_path(s):
        raise NotAPathError(f"경로가 아닙니다: {' '.join(map(str, s))}")
    positive = polarity_of_seq(s).value == "+"
    return design_from_views(prefix_views(s), positive, None)
