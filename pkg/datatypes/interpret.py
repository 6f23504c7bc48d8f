"""
interpret.py - 데이터 패턴의 해석, basis, Kleene 단계 검사
==========================================================
패턴 A 를 행동 식으로 바꿉니다.

    ⟦a⟧        = C_a
    ⟦A ⊕⁺ B⟧   = ↓⟦A⟧ ⊕ ↓⟦B⟧
    ⟦A ⊗⁺ B⟧   = ↓⟦A⟧ ⊗ ↓⟦B⟧
    ⟦X⟧        = env[X]
    ⟦μX.A⟧     = φⁿ(#)  (φ(Y) = ⟦A⟧ with X ↦ Y, n = level)

[초보자 안내]
- 최소 고정점은 Kleene 반복의 n 단계 근사 MuLevel 로 표현합니다.
  중첩된 μ 도 모두 같은 level 을 씁니다.
- steady 한 μ 에는 basis 를 같이 넣어 둡니다. 순수성 검사는 # 대신
  basis 에서부터 펼칩니다.
- steadiness() 는 문법 검사가 실패했을 때 "모름(UNKNOWN)" 을 돌려주고,
  semantic=True 이면 주어진 단계에서 데몬 없는 멤버가 있는지 찾아봅니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from config import Config
from core.errors import NotSteadyError, PatternError
from core.parser import render_design
from core.syntax import Daimon, Design, Neg, PosApp
from behaviours.expr import (
    BehaviourExpr,
    Const,
    Down,
    Inj,
    MuLevel,
    RecVar,
    plus_pos,
    polarity_of_expr,
    tensor_pos,
)
from behaviours.incarnation import incarnation
from behaviours.visitable import visitable_paths
from datatypes.patterns import DataPattern, Mu, Name, PlusP, TensorP, Var, is_steady, render_pattern
from paths.actions import render_seq

logger = logging.getLogger(__name__)

Env = Mapping[str, BehaviourExpr]


def interpret(A: DataPattern, env: Env | None = None, level: int | None = None) -> BehaviourExpr:
    """
    ⟦A⟧^env 의 level 단계 근사.

    Raises:
        PatternError: 환경에 없는 자유 변수, 또는 양수가 아닌 환경 값
    """
    env = dict(env or {})
    for key, value in env.items():
        if polarity_of_expr(value).value != "+":
            raise PatternError(f"환경 값 {key} 는 양수 행동이어야 합니다.")
    level = Config.LEVEL if level is None else level
    return _interpret(A, env, frozenset(), level)


def _interpret(A: DataPattern, env: dict, bound: frozenset[str], level: int) -> BehaviourExpr:
    if isinstance(A, Name):
        return Const(A.name)
    if isinstance(A, Var):
        if A.name in bound:
            return RecVar(A.name)
        if A.name in env:
            return env[A.name]
        raise PatternError(f"묶이지 않은 패턴 변수: {A.name}")
    if isinstance(A, PlusP):
        return plus_pos(_interpret(A.left, env, bound, level), _interpret(A.right, env, bound, level))
    if isinstance(A, TensorP):
        return tensor_pos(_interpret(A.left, env, bound, level), _interpret(A.right, env, bound, level))
    inner = {k: v for k, v in env.items() if k != A.var}
    body = _interpret(A.body, inner, bound | {A.var}, level)
    return MuLevel(A.var, body, level, basis(A) if is_steady(A) else None)


def basis(A: DataPattern) -> BehaviourExpr:
    """
    steady 패턴의 basis.

    Raises:
        NotSteadyError: A 가 (문법적으로) steady 가 아닐 때
    """
    if isinstance(A, Name):
        return Const(A.name)
    if isinstance(A, PlusP):
        if is_steady(A.left):
            return Inj(1, Down(basis(A.left)))
        if is_steady(A.right):
            return Inj(2, Down(basis(A.right)))
    elif isinstance(A, TensorP):
        if is_steady(A.left) and is_steady(A.right):
            return tensor_pos(basis(A.left), basis(A.right))
    elif isinstance(A, Mu):
        return basis(A.body)
    raise NotSteadyError(f"steady 패턴이 아니므로 basis 가 없습니다: {render_pattern(A)}")


class Steadiness(Enum):
    STEADY = "steady"
    UNKNOWN = "unknown"
    NOT_STEADY = "not-steady"


def _daimon_free(d: Design) -> bool:
    if isinstance(d, Daimon):
        return False
    if isinstance(d, PosApp):
        return all(_daimon_free(a) for a in d.args)
    if isinstance(d, Neg):
        return all(_daimon_free(b.body) for b in d.branches)
    return True


def steadiness(A: DataPattern, env: Env | None = None, semantic: bool = False, level: int | None = None) -> Steadiness:
    """
    문법 검사로 steady 이면 STEADY, 아니면 UNKNOWN.

    semantic=True 이면 level 단계 근사에 데몬 없는 디자인이 있는지 보고
    STEADY / NOT_STEADY 로 답합니다.
    """
    if is_steady(A):
        return Steadiness.STEADY
    if not semantic:
        return Steadiness.UNKNOWN
    B = interpret(A, env, level)
    found = any(_daimon_free(d) for d in incarnation(B))
    logger.debug("steadiness search(%s): %s", render_pattern(A), found)
    return Steadiness.STEADY if found else Steadiness.NOT_STEADY


# ---------------------------------------------------------------
# Kleene 단계 단조성
# ---------------------------------------------------------------

@dataclass
class MonotoneReport:
    pattern: str
    levels: int
    incarnation_sizes: list[int] = field(default_factory=list)
    visitable_sizes: list[int] = field(default_factory=list)
    violation: str | None = None

    @property
    def holds(self) -> bool:
        return self.violation is None


def kleene_monotone_report(
    A: DataPattern,
    env: Env | None = None,
    levels: int = 3,
    max_len: int | None = None,
) -> MonotoneReport:
    """
    단계 0..levels 에서 |φⁿ(#)| ⊆ |φⁿ⁺¹(#)| 와 V_n ⊆ V_{n+1} 를 확인합니다.

    Raises:
        PatternError: levels < 1
    """
    if levels < 1:
        raise PatternError("levels 는 1 이상이어야 합니다.")
    report = MonotoneReport(render_pattern(A), levels)
    previous = None
    for k in range(levels + 1):
        B = interpret(A, env, k)
        designs = incarnation(B)
        paths = visitable_paths(B, max_len=max_len)
        report.incarnation_sizes.append(len(designs))
        report.visitable_sizes.append(len(paths))
        if previous is not None and report.violation is None:
            old_designs, old_paths = previous
            for d in old_designs:
                if d not in designs:
                    report.violation = f"단계 {k - 1} 의 디자인 {render_design(d)} 이(가) 단계 {k} 에 없습니다."
                    break
            else:
                missing = sorted(old_paths - paths, key=render_seq)
                if missing:
                    report.violation = f"단계 {k - 1} 의 경로 {render_seq(missing[0])} 이(가) 단계 {k} 에 없습니다."
        previous = (designs, paths)
    logger.info("kleene(%s): 크기 %s, 위반 %s", report.pattern, report.incarnation_sizes, report.violation)
    return report
