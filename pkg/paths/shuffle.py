"""
shuffle.py - 경로의 셔플(shuffle)과 반셔플(anti-shuffle)
========================================================
두 경로의 행동을 "순서를 지키면서 극성이 번갈아 나오도록" 섞은 것들 가운데
경로인 것만 모은 집합이 셔플입니다.

[초보자 안내]
- 음수 경로 두 개: 공통 접두사는 한 번만 쓰고, 나머지를 섞습니다.
- 양수 경로 두 개: 첫 행동이 같아야 합니다. 다르면 정의되지 않습니다(오류).
- 둘 다 데몬으로 끝나면 데몬이 두 번 나오므로 결과는 비어 있습니다.
- anti_shuffle(s, t) = { dual(u) : u ∈ shuffle(dual s, dual t) }
"""

from __future__ import annotations

from typing import Iterable

from core.errors import PolarityError
from core.syntax import FreshNames
from paths.actions import Seq, canonical, free_addresses, polarity_of_seq
from paths.views import dual, is_path


def _common_prefix(s: Seq, t: Seq) -> int:
    k = 0
    while k < min(len(s), len(t)) and s[k] == t[k]:
        k += 1
    return k


def _rename_apart(suffix: Seq, avoid: set[str]) -> Seq:
    fresh = FreshNames(avoid, prefix="w")
    mapping: dict[str, str] = {}
    out = []
    for a in suffix:
        for b in a.bound:
            mapping[b] = fresh()
        out.append(a.rename(mapping))
    return tuple(out)


def _names(s: Iterable) -> set[str]:
    out: set[str] = set()
    for a in s:
        if a.is_proper:
            out.add(a.address)
            out.update(a.bound)
    return out


def _merges(prefix: Seq, s: Seq, t: Seq) -> Iterable[Seq]:
    """극성이 번갈아 나오는 모든 병합 (순서 보존)"""
    out: list[Seq] = []

    def go(acc: tuple, i: int, j: int) -> None:
        if i == len(s) and j == len(t):
            out.append(acc)
            return
        last = acc[-1] if acc else None
        for side, k in ((s, i), (t, j)):
            if k == len(side):
                continue
            a = side[k]
            if last is not None and (last.is_daimon or a.polarity is last.polarity):
                continue
            if side is s:
                go(acc + (a,), i + 1, j)
            else:
                go(acc + (a,), i, j + 1)

    go(prefix, 0, 0)
    return out


def shuffle(s: Seq, t: Seq) -> set[Seq]:
    """
    s ⧢ t

    Raises:
        PolarityError: 극성이 다르거나, 양수 경로의 첫 행동이 다를 때
    """
    if polarity_of_seq(s) is not polarity_of_seq(t):
        raise PolarityError("셔플은 같은 극성의 경로끼리만 정의됩니다.")
    if s and s[0].is_positive and s[0] != t[0]:
        raise PolarityError("양수 경로의 셔플은 첫 행동이 같아야 합니다.")
    k = _common_prefix(s, t)
    prefix = s[:k]
    rest_s = s[k:]
    rest_t = _rename_apart(t[k:], _names(s) | _names(t) | free_addresses(s) | free_addresses(t))
    results: set[Seq] = set()
    for u in _merges(prefix, rest_s, rest_t):
        if is_path(u):
            results.add(canonical(u))
    return results


def anti_shuffle(s: Seq, t: Seq) -> set[Seq]:
    """s ⧢̃ t = dual(dual s ⧢ dual t)"""
    return {canonical(dual(u)) for u in shuffle(dual(s), dual(t))}

