"""
interaction.py - 상호작용 경로 ⟨d ← e⟩
=====================================
두 원자적 디자인이 직교(d ⊥ e)이면, d 의 경로이면서 그 쌍대가 e 의 경로인
경로가 정확히 하나 있습니다. 멀티 디자인의 상호작용 열 계산을 그대로 돌려서
이 경로를 얻습니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from core.errors import PolarityError
from core.syntax import Design, Neg, is_atomic
from paths.actions import Seq
from reduction.normalizer import is_orthogonal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NotOrthogonal:
    """두 디자인이 직교가 아니어서 상호작용 경로가 없음"""

    def __repr__(self) -> str:
        return "NotOrthogonal()"


NOT_ORTHOGONAL = NotOrthogonal()


def interaction_path(d: Design, e: Design, fuel: int | None = None) -> Seq | NotOrthogonal:
    """
    ⟨d ← e⟩ 를 계산합니다.

    Args:
        d, e: 극성이 반대인 컷 없는 원자적 디자인
        fuel: 정규화 단계 상한 (None 이면 Config.FUEL)

    Returns:
        d 쪽에서 본 상호작용 경로, 직교가 아니면 NOT_ORTHOGONAL

    Raises:
        PolarityError: 극성이 같거나 원자적이지 않을 때
    """
    from multidesign.multi import MultiDesign, interaction_sequence

    if isinstance(d, Neg) == isinstance(e, Neg):
        raise PolarityError("상호작용 경로는 극성이 반대인 두 디자인 사이에서만 정의됩니다.")
    p, n = (e, d) if isinstance(d, Neg) else (d, e)
    if not (is_atomic(p) and is_atomic(n)):
        raise PolarityError("상호작용 경로는 원자적 디자인에서만 정의됩니다.")
    if not is_orthogonal(p, n, fuel):
        logger.debug("직교가 아니므로 상호작용 경로가 없습니다.")
        return NOT_ORTHOGONAL
    return interaction_sequence(MultiDesign.from_design(d), MultiDesign.from_design(e), fuel)
