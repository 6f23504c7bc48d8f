"""
views.py - 뷰, 반뷰(anti-view), 쌍대(dual), 경로 판정
======================================================
경로(path)는 두 참여자(P: 양수, O: 음수)가 번갈아 둔 행동의 기록입니다.

[초보자 안내]
- view_of(s)      : 마지막 행동에서 출발해 "양수면 한 칸 뒤로, 음수면 정당화
                    행동으로 점프" 하며 모은 부분열. P 가 "볼 수 있는" 부분입니다.
- anti_view_of(s) : 극성을 바꿔서 같은 일을 한 것. O 가 볼 수 있는 부분입니다.
- is_path(s)      : 양수 행동의 정당화 행동은 뷰 안에, 음수 행동의 정당화
                    행동은 반뷰 안에 있어야 합니다 (P/O 가시성).
- dual(s)         : 모든 행동의 극성을 뒤집고, 끝에 데몬을 붙이거나 뗍니다.
"""

from __future__ import annotations

from typing import Sequence

from paths.actions import DAIMON_ACTION, LocatedAction, Seq, justifiers


def dual(s: Sequence[LocatedAction]) -> Seq:
    """s̃: 극성을 뒤집고 끝의 데몬을 떼거나 붙입니다. dual(dual(s)) == s"""
    if s and s[-1].is_daimon:
        return tuple(a.overline() for a in s[:-1])
    return tuple(a.overline() for a in s) + (DAIMON_ACTION,)


def _view_indices(s: Sequence[LocatedAction], just: list[int | None], end: int) -> list[int]:
    """s[:end] 의 뷰에 들어가는 위치들 (오름차순)"""
    out = []
    i = end - 1
    while i >= 0:
        out.append(i)
        if s[i].is_positive:
            i -= 1
        else:
            j = just[i]
            if j is None:
                break
            i = j
    out.reverse()
    return out


def _anti_view_indices(s: Sequence[LocatedAction], just: list[int | None], end: int) -> list[int]:
    """s[:end] 의 반뷰 위치들. s[:end] 는 데몬으로 끝나지 않는다고 가정합니다."""
    out = []
    i = end - 1
    while i >= 0:
        out.append(i)
        if not s[i].is_positive:
            i -= 1
        else:
            j = just[i]
            if j is None:
                break
            i = j
    out.reverse()
    return out


def view_of(s: Sequence[LocatedAction]) -> Seq:
    just = justifiers(s)
    return tuple(s[i] for i in _view_indices(s, just, len(s)))


def anti_view_of(s: Sequence[LocatedAction]) -> Seq:
    return dual(view_of(dual(s)))


def is_aj_seq(s: Sequence[LocatedAction]) -> bool:
    """
    정당화된 교대열(aj-sequence) 인지 검사합니다.

    - 극성이 번갈아 나타남
    - 데몬은 마지막에만
    - 각 주소는 한 번만 사용되고, 새로 만든 주소는 모두 서로 다름
    - 정당화 행동은 반대 극성
    """
    used: set[str] = set()
    made: set[str] = set()
    just = justifiers(s)
    for i, a in enumerate(s):
        if i > 0 and a.polarity is s[i - 1].polarity:
            return False
        if a.is_daimon:
            if i != len(s) - 1:
                return False
            continue
        if a.address in used or a.address in a.bound:
            return False
        used.add(a.address)
        if len(set(a.bound)) != len(a.bound) or made & set(a.bound) or used & set(a.bound):
            return False
        made.update(a.bound)
        j = just[i]
        if j is not None and s[j].polarity is a.polarity:
            return False
    # 나중에 만들어진 주소를 앞에서 쓰면 안 됨
    for i, a in enumerate(s):
        if a.is_proper and a.address in made and just[i] is None:
            return False
    return True


def is_path(s: Sequence[LocatedAction]) -> bool:
    """양수로 끝나는 aj-sequence 이면서 P/O 가시성을 만족하는지"""
    if not is_aj_seq(s):
        return False
    if s and not s[-1].is_positive:
        return False
    just = justifiers(s)
    for i, a in enumerate(s):
        j = just[i]
        if j is None:
            continue
        if a.is_positive:
            if j not in _view_indices(s, just, i):
                return False
        elif j not in _anti_view_indices(s, just, i):
            return False
    return True


def trivial_view_of(s: Sequence[LocatedAction]) -> Seq:
    """⌊s⌋: 마지막 (데몬 아닌) 행동에서 정당화 사슬만 따라간 부분열"""
    if not s:
        return ()
    if s[-1].is_daimon:
        return trivial_view_of(s[:-1]) + (DAIMON_ACTION,)
    just = justifiers(s)
    out = []
    i: int | None = len(s) - 1
    while i is not None:
        out.append(s[i])
        i = just[i]
    return tuple(reversed(out))


def is_trivial_view(s: Sequence[LocatedAction]) -> bool:
    just = justifiers(s)
    proper = [i for i, a in enumerate(s) if a.is_proper]
    return is_aj_seq(s) and all(just[i] == i - 1 for i in proper[1:])


def hereditarily_justified_by(s: Sequence[LocatedAction], i: int, root: int, just: list[int | None] | None = None) -> bool:
    just = just if just is not None else justifiers(s)
    k: int | None = i
    while k is not None:
        if k == root:
            return True
        k = just[k]
    return False


def is_well_bracketed(s: Sequence[LocatedAction]) -> bool:
    """
    모든 정당화된 행동 κ (정당화 행동 κ') 에 대해, 둘 사이의 행동이
    전부 κ' 에 의해 유전적으로 정당화되는지 검사합니다.
    """
    just = justifiers(s)
    for i, j in enumerate(just):
        if j is None:
            continue
        for k in range(j + 1, i):
            if s[k].is_daimon:
                continue
            if not hereditarily_justified_by(s, k, j, just):
                return False
    return True
