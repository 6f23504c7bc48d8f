"""
laws.py - 결합 법칙 검사
========================
정규화와 Cut 이 서로 어떻게 맞물리는지 작은 예제에서 직접 계산해 봅니다.

[초보자 안내]
- substitution_associates(d, bindings)
      ⟦d[n/y]⟧ 와 ⟦⟦d⟧[⟦n⟧/y]⟧ 가 속박 이름만 빼고 같은지
- cut_associates(D, E)
      ⟦Cut(D, E)⟧ 와 ⟦Cut(⟦D⟧, ⟦E⟧)⟧ 가 같은지
- paths_associate(D, E, F)
      ⟨E ← ⟦Cut(F, D)⟧⟩ 와 ⟨E∪F ← D⟩|E 가 같은지
      (D 와 E∪F 의 상호작용이 데몬으로 끝날 때만 뜻이 있습니다)
- with_redexes(d) : 모든 분기 본문 앞에 한 단계짜리 컷을 끼워 넣습니다.
                    정규형은 그대로이므로 "컷이 있는 입력" 을 만들 때 씁니다.
- orthogonal_triples(positives, negatives)
      x|b<a().Q> 모양의 D 와 E={m/x}, F={n/z} 중 직교하는 것들을 모읍니다.
"""

from __future__ import annotations

import logging
from itertools import product
from typing import Iterable, Mapping

from core.errors import IncompatibleError
from core.syntax import DAIMON, X0, Branch, Cut, Design, Neg, PosApp, alpha_eq, rename_free, substitute
from multidesign.multi import (
    Compatibility,
    MultiDesign,
    compatible,
    cut,
    interaction_sequence,
    normalize_multi,
    restrict,
)
from paths.actions import Seq, canonical
from reduction.normalizer import normalize

logger = logging.getLogger(__name__)

Triple = tuple[MultiDesign, MultiDesign, MultiDesign]


def with_redexes(d: Design, name: str = "a") -> Design:
    """분기 본문 B 를 [name().B]|name<> 으로 바꿉니다. ⟦with_redexes(d)⟧ = ⟦d⟧"""
    if isinstance(d, Neg):
        return Neg(tuple(
            Branch(b.name, b.params, Cut(Neg((Branch(name, (), with_redexes(b.body, name)),)), name, ()))
            for b in d.branches
        ))
    if isinstance(d, PosApp):
        return PosApp(d.head, d.name, tuple(with_redexes(a, name) for a in d.args))
    if isinstance(d, Cut):
        return Cut(with_redexes(d.head, name), d.name, tuple(with_redexes(a, name) for a in d.args))
    return d


def same_multi(A: MultiDesign, B: MultiDesign) -> bool:
    """자리가 같고 각 구성 디자인이 α-동치인지"""
    if A.np() != B.np() or A.is_positive != B.is_positive:
        return False
    if A.is_positive and not alpha_eq(A.positive, B.positive):
        return False
    theirs = B.as_dict()
    return all(alpha_eq(n, theirs[x]) for x, n in A.negatives)


def substitution_associates(d: Design, bindings: Mapping[str, Neg], fuel: int | None = None) -> bool:
    direct = normalize(substitute(d, bindings), fuel).result
    inner = {y: normalize(n, fuel).result for y, n in bindings.items()}
    staged = normalize(substitute(normalize(d, fuel).result, inner), fuel).result
    return alpha_eq(direct, staged)


def cut_associates(D: MultiDesign, E: MultiDesign, fuel: int | None = None) -> bool:
    direct = normalize_multi(cut(D, E), fuel)
    staged = normalize_multi(cut(normalize_multi(D, fuel), normalize_multi(E, fuel)), fuel)
    return same_multi(direct, staged)


def reaches_daimon(D: MultiDesign, E: MultiDesign, fuel: int | None = None) -> bool:
    """⟦Cut(D, E)⟧ 의 양수 디자인이 데몬인지"""
    if compatible(D, E) is Compatibility.INCOMPATIBLE:
        return False
    return normalize_multi(cut(D, E), fuel).positive == DAIMON


def path_sides(D: MultiDesign, E: MultiDesign, F: MultiDesign, fuel: int | None = None) -> tuple[Seq, Seq]:
    """
    (⟨E ← ⟦Cut(F, D)⟧⟩, ⟨E∪F ← D⟩|E) 를 계산합니다.

    Raises:
        IncompatibleError: D 와 E∪F 의 상호작용이 데몬에 닿지 않을 때
    """
    EF = E.union(F)
    if not reaches_daimon(EF, D, fuel):
        raise IncompatibleError("D 와 E∪F 의 상호작용이 데몬으로 끝나지 않습니다.")
    left = interaction_sequence(E, normalize_multi(cut(F, D), fuel), fuel)
    right = canonical(restrict(interaction_sequence(EF, D, fuel), EF, E))
    return left, right


def paths_associate(D: MultiDesign, E: MultiDesign, F: MultiDesign, fuel: int | None = None) -> bool:
    left, right = path_sides(D, E, F, fuel)
    return left == right


def orthogonal_triples(positives: Iterable[Design], negatives: Iterable[Design]) -> list[Triple]:
    """
    D = {x|b<a().Q>} (Q 는 양수 디자인의 x0 을 z 로 바꾼 것), E = {m/x}, F = {n/z}
    가운데 D 와 E∪F 가 데몬으로 끝나는 세 쌍을 나열 순서대로 모읍니다.
    """
    negs = [n for n in negatives if isinstance(n, Neg)]
    out: list[Triple] = []
    for q, m, n in product([p for p in positives if not isinstance(p, Neg)], negs, negs):
        body = rename_free(q, {X0: "z"})
        D = MultiDesign.of(positive=PosApp("x", "b", (Neg((Branch("a", (), body),)),)))
        E, F = MultiDesign.of({"x": m}), MultiDesign.of({"z": n})
        if reaches_daimon(E.union(F), D):
            out.append((D, E, F))
    logger.debug("직교하는 세 쌍 %d 개", len(out))
    return out
