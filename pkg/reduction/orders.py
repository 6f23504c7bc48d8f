"""
orders.py - 디자인의 두 가지 순서
==================================
- stable_leq(d1, d2)  (⊑) : d1 의 오메가 자리 몇 곳을 양수 디자인으로 채우면 d2
- obs_leq(d1, d2)     (⪯) : 위에 더해, 양수 부분 디자인을 데몬(#)으로 바꿔도 됨

[초보자 안내]
관찰 순서 ⪯ 는 "더 잘 수렴한다" 는 뜻입니다. d1 ⪯ d2 이면 d1 과 직교하는
모든 시험(test)은 d2 와도 직교합니다. 행동 소속 검사(member)가 이 성질을
이용합니다.
"""

from __future__ import annotations

from core.syntax import Cut, Daimon, Design, Neg, Omega, PosApp


def _leq(d1: Design, d2: Design, observational: bool, env1: dict, env2: dict, level: int) -> bool:
    if isinstance(d1, Neg) != isinstance(d2, Neg):
        return False
    if isinstance(d1, Neg):
        # d1 의 분기(오메가 아닌 것)는 모두 d2 에도 있어야 합니다.
        for b1 in d1.branches:
            b2 = d2.get(b1.name)
            if b2 is None or len(b1.params) != len(b2.params):
                return False
            e1 = {**env1, **{p: level + i for i, p in enumerate(b1.params)}}
            e2 = {**env2, **{p: level + i for i, p in enumerate(b2.params)}}
            if not _leq(b1.body, b2.body, observational, e1, e2, level + len(b1.params)):
                return False
        return True
    if isinstance(d1, Omega):
        return True
    if observational and isinstance(d2, Daimon):
        return True
    if type(d1) is not type(d2):
        return False
    if isinstance(d1, Daimon):
        return True
    if d1.name != d2.name or len(d1.args) != len(d2.args):
        return False
    if isinstance(d1, PosApp):
        if env1.get(d1.head, d1.head) != env2.get(d2.head, d2.head):
            return False
    elif isinstance(d1, Cut):
        if not _leq(d1.head, d2.head, observational, env1, env2, level):
            return False
    return all(_leq(a, b, observational, env1, env2, level) for a, b in zip(d1.args, d2.args))


def stable_leq(d1: Design, d2: Design) -> bool:
    """d1 ⊑ d2 : 오메가를 양수 디자인으로 바꾸는 것만 허용"""
    return _leq(d1, d2, False, {}, {}, 0)


def obs_leq(d1: Design, d2: Design) -> bool:
    """d1 ⪯ d2 : 오메가 → 양수, 양수 부분 디자인 → 데몬 을 허용"""
    return _leq(d1, d2, True, {}, {}, 0)
