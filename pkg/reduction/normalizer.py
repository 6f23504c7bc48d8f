"""
normalizer.py - 컷 제거(상호작용)와 정규형 계산
================================================
컷 [N]|a<M1..Mk> 은 N 의 a 분기를 골라 매개변수에 M1..Mk 를 넣는 방식으로
한 단계씩 줄어듭니다. a 분기가 없으면 결과는 오메가(발산)입니다.

[초보자 안내]
- step()      : 머리 컷 하나를 한 단계 줄입니다.
- normalize() : 머리 컷을 더 이상 없을 때까지 줄인 뒤, 인자와 분기 본문
                안으로 들어가 같은 일을 반복합니다.
- is_orthogonal(p, n) : p 의 x0 자리에 n 을 넣고 정규화했을 때 데몬(#)이
                나오면 "직교" 입니다. 루딕스에서 가장 중요한 관계입니다.
- 선형 디자인은 각 단계마다 컷이 하나씩 사라지므로 반드시 끝납니다.
  fuel 은 혹시 모를 무한 루프를 막는 안전장치입니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from config import Config
from core.errors import ArityError, NotAtomicError, PolarityError
from core.syntax import (
    DAIMON,
    OMEGA,
    X0,
    Branch,
    Cut,
    Daimon,
    Design,
    FreshNames,
    Neg,
    Omega,
    PosApp,
    _subst,
    all_vars,
    is_atomic,
)

logger = logging.getLogger(__name__)


class NoHeadCut:
    """step() 이 줄일 머리 컷이 없을 때 돌려주는 표시값"""

    def __repr__(self) -> str:
        return "NO_HEAD_CUT"


NO_HEAD_CUT = NoHeadCut()


class Status(Enum):
    CONVERGED = "Converged"
    DIVERGED_OMEGA = "DivergedOmega"
    FUEL_EXHAUSTED = "FuelExhausted"


@dataclass(frozen=True)
class NormalizeOutcome:
    result: Design
    status: Status
    steps: int

    def __repr__(self) -> str:
        return f"NormalizeOutcome(status={self.status.value}, steps={self.steps})"


class _FuelExhausted(Exception):
    pass


def _fire(cut: Cut, fresh: FreshNames) -> Design:
    branch: Branch | None = cut.head.get(cut.name)
    if branch is None:
        return OMEGA
    if len(branch.params) != len(cut.args):
        raise ArityError(f"컷 '{cut.name}': 매개변수 {len(branch.params)}개, 인자 {len(cut.args)}개")
    return _subst(branch.body, dict(zip(branch.params, cut.args)), fresh)


def step(p: Design) -> Design | NoHeadCut:
    """
    머리 컷을 한 단계 줄입니다.

    Returns:
        줄어든 양수 디자인, 또는 머리가 컷이 아니면 NO_HEAD_CUT
    """
    if not isinstance(p, Cut):
        return NO_HEAD_CUT
    fresh = FreshNames(all_vars(p), prefix="r")
    return _fire(p, fresh)


class _Normalizer:
    def __init__(self, fuel: int, on_step: Callable[[int, Design], None] | None):
        self.fuel = fuel
        self.steps = 0
        self.on_step = on_step
        self.fresh: FreshNames | None = None

    def run(self, d: Design) -> Design:
        self.fresh = FreshNames(all_vars(d), prefix="r")
        return self.norm(d)

    def norm(self, d: Design) -> Design:
        if isinstance(d, Neg):
            return Neg(tuple(Branch(b.name, b.params, self.norm(b.body)) for b in d.branches))
        # 머리 정규형(weak head form)까지 줄이기
        while isinstance(d, Cut):
            if self.steps >= self.fuel:
                raise _FuelExhausted
            if self.on_step is not None:
                self.on_step(self.steps, d)
            d = _fire(d, self.fresh)
            self.steps += 1
        if isinstance(d, PosApp):
            return PosApp(d.head, d.name, tuple(self.norm(a) for a in d.args))
        return d


def normalize(
    d: Design,
    fuel: int | None = None,
    on_step: Callable[[int, Design], None] | None = None,
) -> NormalizeOutcome:
    """
    디자인의 정규형을 계산합니다.

    Args:
        d: 정규화할 디자인
        fuel: 최대 컷 제거 단계 수 (기본값: Config.FUEL)
        on_step: 각 단계 직전에 (단계 번호, 줄일 컷) 으로 호출되는 콜백 (--trace 용)

    Returns:
        NormalizeOutcome(result, status, steps)
    """
    fuel = Config.FUEL if fuel is None else fuel
    if fuel <= 0:
        raise ValueError("fuel 은 1 이상이어야 합니다.")
    worker = _Normalizer(fuel, on_step)
    try:
        result = worker.run(d)
    except _FuelExhausted:
        logger.warning("정규화 연료 소진: %d 단계", worker.steps)
        return NormalizeOutcome(OMEGA, Status.FUEL_EXHAUSTED, worker.steps)
    status = Status.DIVERGED_OMEGA if isinstance(result, Omega) else Status.CONVERGED
    logger.debug("정규화 완료: %s, %d 단계", status.value, worker.steps)
    return NormalizeOutcome(result, status, worker.steps)


def is_orthogonal(p: Design, n: Design, fuel: int | None = None) -> bool:
    """
    p ⊥ n 인지 검사합니다.

    Raises:
        PolarityError: p 가 양수가 아니거나 n 이 음수가 아닐 때
        NotAtomicError: 둘 중 하나가 원자적이 아닐 때
    """
    if isinstance(p, Neg) or not isinstance(n, Neg):
        raise PolarityError("직교 검사는 (양수, 음수) 디자인 쌍에만 정의됩니다.")
    if not (is_atomic(p) and is_atomic(n)):
        raise NotAtomicError("직교 검사에는 원자적 디자인이 필요합니다.")
    if isinstance(p, Daimon):
        return True
    fresh = FreshNames(all_vars(p) | all_vars(n), prefix="r")
    closed = _subst(p, {X0: n}, fresh)
    return normalize(closed, fuel).result == DAIMON
