"""
multi.py - 멀티 디자인, Cut, 상호작용 열, 제한(restriction)
============================================================
멀티 디자인은 "변수 자리에 놓인 음수 디자인들" 과 최대 하나의 양수 디자인을
묶은 것입니다. 두 멀티 디자인을 서로 꽂으면(Cut) 하나의 디자인이 됩니다.

[초보자 안내]
- np(D) : 음수 디자인이 놓인 자리(변수)들
- fv(D) : 모든 구성 디자인의 자유 변수
- compatible(D, E) : 서로 꽂을 수 있는지 (Incompatible / Compatible / ClosedCompatible)
- cut(D, E)        : E 의 디자인을 하나씩 D 쪽으로 옮기며 치환하는 귀납적 정의
- interaction_sequence(D, E) : 상호작용 동안 D 쪽에서 본 행동 열
- restrict(s, D, E) : D 의 경로 s 에서 부분 멀티 디자인 E 가 둔 행동만 남김
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from config import Config
from core.errors import ArityError, CutPresentError, IncompatibleError, MultiDesignError
from core.syntax import (
    OMEGA,
    X0,
    Cut,
    Daimon,
    Design,
    FreshNames,
    Neg,
    Omega,
    _subst,
    all_vars,
    barendregt,
    free_vars,
)
from paths.actions import DAIMON_ACTION, LocatedAction, Seq, canonical, justifiers, neg, pos
from reduction.normalizer import normalize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultiDesign:
    """
    {n1/x1, ..., nk/xk} (+ 선택적 양수 디자인 p)

    negatives 는 변수 이름순으로 정렬된 (변수, 음수 디자인) 쌍입니다.
    """

    negatives: tuple[tuple[str, Neg], ...] = ()
    positive: Design | None = None

    def __post_init__(self):
        if isinstance(self.positive, Neg):
            raise MultiDesignError("positive 자리에 음수 디자인이 올 수 없습니다.")
        places = [x for x, _ in self.negatives]
        if len(set(places)) != len(places):
            raise MultiDesignError(f"같은 자리에 음수 디자인이 두 개 있습니다: {places}")
        object.__setattr__(self, "negatives", tuple(sorted(self.negatives, key=lambda kv: kv[0])))
        seen: set[str] = set()
        for d in self.designs():
            fv = free_vars(d)
            if seen & fv:
                raise MultiDesignError(f"구성 디자인들의 자유 변수가 겹칩니다: {sorted(seen & fv)}")
            seen |= fv
        if seen & set(places):
            raise MultiDesignError(f"자유 변수와 자리가 겹칩니다: {sorted(seen & set(places))}")

    @classmethod
    def of(cls, negatives: Mapping[str, Neg] | None = None, positive: Design | None = None) -> "MultiDesign":
        return cls(tuple((negatives or {}).items()), positive)

    @classmethod
    def from_design(cls, d: Design) -> "MultiDesign":
        """양수 p → {p}, 음수 n → {n/x0}"""
        if isinstance(d, Neg):
            return cls(((X0, d),), None)
        return cls((), d)

    def designs(self) -> list[Design]:
        out: list[Design] = [n for _, n in self.negatives]
        if self.positive is not None:
            out.append(self.positive)
        return out

    def as_dict(self) -> dict[str, Neg]:
        return dict(self.negatives)

    @property
    def is_positive(self) -> bool:
        return self.positive is not None

    def fv(self) -> frozenset[str]:
        out: set[str] = set()
        for d in self.designs():
            out |= free_vars(d)
        return frozenset(out)

    def np(self) -> frozenset[str]:
        return frozenset(x for x, _ in self.negatives)

    def __len__(self) -> int:
        return len(self.negatives) + (self.positive is not None)

    def union(self, other: "MultiDesign") -> "MultiDesign":
        """D ∪ E. 결과가 멀티 디자인이 아니면 MultiDesignError"""
        if self.positive is not None and other.positive is not None:
            raise MultiDesignError("양수 디자인이 둘인 합집합은 멀티 디자인이 아닙니다.")
        positive = self.positive if self.positive is not None else other.positive
        return MultiDesign(self.negatives + other.negatives, positive)


EMPTY_MULTI = MultiDesign()


class Compatibility(Enum):
    INCOMPATIBLE = "Incompatible"
    COMPATIBLE = "Compatible"
    CLOSED_COMPATIBLE = "ClosedCompatible"


def compatible(D: MultiDesign, E: MultiDesign) -> Compatibility:
    if D.fv() & E.fv() or D.np() & E.np():
        return Compatibility.INCOMPATIBLE
    if D.is_positive and E.is_positive:
        return Compatibility.INCOMPATIBLE
    if not D.is_positive and not E.is_positive:
        spare = (D.np() | E.np()) - (D.fv() | E.fv())
        return Compatibility.COMPATIBLE if spare else Compatibility.INCOMPATIBLE
    if D.fv() == E.np() and E.fv() == D.np():
        return Compatibility.CLOSED_COMPATIBLE
    return Compatibility.COMPATIBLE


def cut(D: MultiDesign, E: MultiDesign) -> MultiDesign:
    """
    Cut_{D|E}: E 의 디자인(양수 먼저, 그다음 변수 순서)을 하나씩 D 쪽으로 옮깁니다.

    S = { m/y ∈ D : y ∈ fv(e) } 라고 할 때
      - 양수 p           : D := (D \\ S) ∪ {p[S]}
      - n/x, x ∉ fv(D)   : D := (D \\ S) ∪ {n[S]/x}
      - n/x, x ∈ fv(D)   : D := (D \\ S)[n[S]/x]

    Raises:
        IncompatibleError: 두 멀티 디자인이 호환되지 않을 때
    """
    if compatible(D, E) is Compatibility.INCOMPATIBLE:
        raise IncompatibleError("호환되지 않는 멀티 디자인은 꽂을 수 없습니다.")

    avoid: set[str] = set()
    for d in D.designs() + E.designs():
        avoid |= all_vars(d)
    avoid |= D.np() | E.np()
    fresh = FreshNames(avoid, prefix="c")

    negatives = dict(D.negatives)
    positive = D.positive
    items: list[tuple[str | None, Design]] = []
    if E.positive is not None:
        items.append((None, E.positive))
    items.extend(E.negatives)

    for place, e in items:
        fv_e = free_vars(e)
        S = {y: m for y, m in negatives.items() if y in fv_e}
        for y in S:
            del negatives[y]
        e_s = _subst(e, S, fresh)
        if place is None:
            positive = e_s
            continue
        holders = [y for y, m in negatives.items() if place in free_vars(m)]
        if positive is not None and place in free_vars(positive):
            positive = _subst(positive, {place: e_s}, fresh)
        elif holders:
            y = holders[0]
            negatives[y] = _subst(negatives[y], {place: e_s}, fresh)
        else:
            negatives[place] = e_s
    return MultiDesign(tuple(negatives.items()), positive)


def normalize_multi(D: MultiDesign, fuel: int | None = None) -> MultiDesign:
    """구성 디자인을 각각 정규화합니다."""
    negatives = tuple((x, normalize(n, fuel).result) for x, n in D.negatives)
    positive = normalize(D.positive, fuel).result if D.positive is not None else None
    return MultiDesign(negatives, positive)


# ---------------------------------------------------------------
# 상호작용 열
# ---------------------------------------------------------------

def _check_interaction_pre(D: MultiDesign, E: MultiDesign) -> None:
    if D.is_positive == E.is_positive:
        raise IncompatibleError("상호작용 열은 극성이 반대인 멀티 디자인 사이에서만 정의됩니다.")
    if compatible(D, E) is Compatibility.INCOMPATIBLE:
        raise IncompatibleError("호환되지 않는 멀티 디자인입니다.")
    if not (D.fv() <= E.np() and E.fv() <= D.np()):
        raise IncompatibleError("fv(D) ⊆ np(E), fv(E) ⊆ np(D) 조건을 만족하지 않습니다.")


def interaction_sequence(D: MultiDesign, E: MultiDesign, fuel: int | None = None) -> Seq:
    """
    ⟨D ← E⟩: 상호작용을 D 쪽에서 본 행동 열 (canonical 이름).

    - 양수 디자인이 #: D 쪽이면 (#), E 쪽이면 ε 으로 끝
    - 양수 디자인이 _: 끝
    - x|a<m1..mk>: 반대편의 n/x 의 a 분기로 진행
    """
    _check_interaction_pre(D, E)
    fuel = Config.FUEL if fuel is None else fuel
    avoid: set[str] = set(D.np() | E.np())
    for d in D.designs() + E.designs():
        avoid |= all_vars(d)
    fresh = FreshNames(avoid, prefix="v")

    sides: list[dict[str, Design]] = [
        {x: barendregt(n, fresh) for x, n in D.negatives},
        {x: barendregt(n, fresh) for x, n in E.negatives},
    ]
    p = barendregt(D.positive if D.is_positive else E.positive, fresh)
    active = 0 if D.is_positive else 1
    seq: list[LocatedAction] = []

    for _ in range(fuel):
        if isinstance(p, Daimon):
            if active == 0:
                seq.append(DAIMON_ACTION)
            break
        if isinstance(p, Omega):
            break
        if isinstance(p, Cut):
            raise CutPresentError("상호작용 열은 컷 없는 멀티 디자인에서만 계산합니다.")
        other = 1 - active
        n = sides[other].pop(p.head, None)
        if n is None:
            raise IncompatibleError(f"주소 '{p.head}' 에 놓인 음수 디자인이 반대편에 없습니다.")
        branch = n.get(p.name)
        if branch is not None and len(branch.params) != len(p.args):
            raise ArityError(f"이름 '{p.name}' 의 인자 개수가 맞지 않습니다.")
        params = branch.params if branch is not None else tuple(fresh() for _ in p.args)
        seq.append(pos(p.head, p.name, *params) if active == 0 else neg(p.head, p.name, *params))
        sides[active].update(zip(params, p.args))
        p = branch.body if branch is not None else OMEGA
        active = other
    else:
        logger.warning("상호작용 열 계산 중 연료 소진 (%d 단계)", fuel)
    return canonical(seq)


# ---------------------------------------------------------------
# 제한
# ---------------------------------------------------------------

def restrict(s: Seq, D: MultiDesign, E: MultiDesign) -> Seq:
    """
    s|E: D 의 경로 s 에서 부분 멀티 디자인 E 에 속한 행동만 남긴 부분열.

    초기 행동의 주인은 그 주소를 자리로 갖거나(음수) 자유 변수로 갖는(양수)
    구성 디자인이고, 나머지 행동은 유전적 초기 조상의 주인을 따릅니다.
    데몬은 바로 앞 행동의 주인을 따릅니다.
    """
    mine = dict(D.negatives)
    theirs = dict(E.negatives)
    if any(x not in mine or mine[x] != n for x, n in theirs.items()) or (
        E.positive is not None and E.positive != D.positive
    ):
        raise MultiDesignError("E 는 D 의 부분 멀티 디자인이어야 합니다.")

    places: dict[str, str] = {}  # 주소 → 구성 디자인 키
    for x, n in D.negatives:
        places[x] = f"neg:{x}"
        for v in free_vars(n):
            places[v] = f"neg:{x}"
    if D.positive is not None:
        for v in free_vars(D.positive):
            places[v] = "pos"
    kept_keys = {f"neg:{x}" for x in theirs} | ({"pos"} if E.positive is not None else set())

    just = justifiers(s)
    owners: list[str | None] = []
    for i, a in enumerate(s):
        if a.is_daimon:
            owners.append(owners[i - 1] if i > 0 else "pos")
        elif just[i] is None:
            owners.append(places.get(a.address))
        else:
            owners.append(owners[just[i]])
    out = [a for a, o in zip(s, owners) if o in kept_keys]
    while out and not out[-1].is_positive:
        out.pop()
    return tuple(out)
