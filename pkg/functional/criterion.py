"""
criterion.py - 함수형 타입의 순수성 판정 기준
=============================================
타입 P 가 다음 모양으로 쪼개지면 순수하지 않습니다.

    P = C1[ C2[Q1 ⊸⁺ Q2] ⊸⁺ R ]      (R 은 상수 C_a 가 아님)

C1, C2 는 ⊕⁺ / ⊗⁺ 양쪽과 ⊸⁺ 오른쪽으로만 내려가는 문맥입니다.
이런 분해가 없으면 P 는 순수합니다.

[초보자 안내]
- impurity_criterion(P) 는 찾은 첫 분해(바깥 먼저, 왼쪽 먼저)를
  Decomposition 으로, 없으면 PURE 를 돌려줍니다.
- 경로를 하나도 계산하지 않는 순수한 문법 검사입니다.
"""

from __future__ import annotations

from dataclasses import dataclass

from functional.types import (
    Context,
    Data,
    FuncType,
    LimpF,
    plug,
    render_context,
    render_type,
    subterms,
)


@dataclass(frozen=True)
class Pure:
    def __str__(self) -> str:
        return "Pure"


PURE = Pure()


@dataclass(frozen=True)
class Decomposition:
    c1: Context
    c2: Context
    q1: FuncType
    q2: FuncType
    r: FuncType

    def rebuild(self) -> FuncType:
        """C1[C2[Q1 ⊸⁺ Q2] ⊸⁺ R]"""
        return plug(self.c1, LimpF(plug(self.c2, LimpF(self.q1, self.q2)), self.r))

    def to_dict(self) -> dict:
        return {
            "C1": render_context(self.c1),
            "C2": render_context(self.c2),
            "Q1": render_type(self.q1),
            "Q2": render_type(self.q2),
            "R": render_type(self.r),
        }

    def __str__(self) -> str:
        return ", ".join(f"{k} = {v}" for k, v in self.to_dict().items())


def _is_constant(T: FuncType) -> bool:
    return isinstance(T, Data) and T.is_constant


def impurity_criterion(P: FuncType) -> Decomposition | Pure:
    for c1, outer in subterms(P):
        if not isinstance(outer, LimpF) or _is_constant(outer.right):
            continue
        for c2, inner in subterms(outer.left):
            if isinstance(inner, LimpF):
                return Decomposition(c1, c2, inner.left, inner.right, outer.right)
    return PURE
