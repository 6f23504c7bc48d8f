"""
encoders.py - Bool / Nat / List / Tree 값의 표준 디자인
======================================================
    true      = x0|p1< val(x).(x|b<>) >      false = x0|p2< ... >
    zero      = x0|p1< val(x).(x|n<>) >
    succ(d)   = x0|p2< val(x).d[x/x0] >
    nil       = x0|p1< val(x).(x|l<>) >
    cons(e,r) = x0|p2< val(x).(x|pr< val(y).e[y/x0], val(z).r[z/x0] >) >
    leaf      = x0|p1< val(x).(x|b<>) >
    node(l,r) = x0|p2< val(x).(x|pr< val(y).l[y/x0], val(z).r[z/x0] >) >

[초보자 안내]
- 모두 Bool / Nat / List / Tree 패턴(STANDARD_PATTERNS)의 멤버입니다.
- 트리 값은 None(잎) 과 (왼쪽, 오른쪽) 튜플로 적습니다.
- decode_nat / decode_bool 은 위 모양이 아니면 PatternError 를 냅니다.
"""

from __future__ import annotations

from typing import Iterable

from core.errors import PatternError
from core.syntax import X0, Design, Neg, PosApp, rename_free
from behaviours.incarnation import down_design

Tree = tuple["Tree", "Tree"] | None


def _constant(name: str) -> Design:
    return PosApp(X0, name, ())


def _inject(index: int, payload: Design) -> Design:
    """x0|p_i< val(x).payload[x/x0] >"""
    return PosApp(X0, f"p{index}", (down_design(payload),))


def _pair(left: Design, right: Design) -> Design:
    return PosApp(X0, "pr", (down_design(left), down_design(right)))


def encode_bool(value: bool, name: str = "b") -> Design:
    return _inject(1 if value else 2, _constant(name))


def encode_nat(k: int, name: str = "n") -> Design:
    if k < 0:
        raise PatternError(f"자연수는 0 이상이어야 합니다: {k}")
    d = _inject(1, _constant(name))
    for _ in range(k):
        d = _inject(2, d)
    return d


def encode_list(elems: Iterable[Design], nil: str = "l") -> Design:
    """원소 디자인(양수, 원자적)의 목록"""
    d = _inject(1, _constant(nil))
    for e in reversed(list(elems)):
        if isinstance(e, Neg):
            raise PatternError("목록 원소는 양수 디자인이어야 합니다.")
        d = _inject(2, _pair(e, d))
    return d


def encode_tree(tree: Tree, leaf: str = "b") -> Design:
    if tree is None:
        return _inject(1, _constant(leaf))
    left, right = tree
    return _inject(2, _pair(encode_tree(left, leaf), encode_tree(right, leaf)))


def _unwrap(d: Design) -> tuple[int, Design]:
    """x0|p_i< val(x).body > 에서 (i, body[x0/x]) 를 꺼냅니다."""
    if not (isinstance(d, PosApp) and d.head == X0 and d.name in ("p1", "p2") and len(d.args) == 1):
        raise PatternError("표준 모양(x0|p1<..> 또는 x0|p2<..>)이 아닙니다.")
    arg = d.args[0]
    if arg.names != ("val",) or len(arg.branches[0].params) != 1:
        raise PatternError("val(x). 하나로 된 분기가 필요합니다.")
    branch = arg.branches[0]
    return int(d.name[1]), rename_free(branch.body, {branch.params[0]: X0})


def _expect_constant(d: Design, name: str) -> None:
    if not (isinstance(d, PosApp) and d.head == X0 and d.name == name and d.args == ()):
        raise PatternError(f"상수 x|{name}<> 가 필요합니다.")


def decode_nat(d: Design, name: str = "n") -> int:
    k = 0
    while True:
        index, body = _unwrap(d)
        if index == 1:
            _expect_constant(body, name)
            return k
        k += 1
        d = body


def decode_bool(d: Design, name: str = "b") -> bool:
    index, body = _unwrap(d)
    _expect_constant(body, name)
    return index == 1

