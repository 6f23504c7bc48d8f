"""
checks.py - 정규성(regularity)과 순수성(purity) 검사
=====================================================
둘 다 유한한 근사(μ 단계 level, 경로 길이 max_len) 안에서만 판정합니다.
결과는 CheckReport 하나로 돌려줍니다. 실패하면 반례 경로(witness)가 붙습니다.

[초보자 안내]
- check_regular : 양수로 끝나는 자명한 뷰가 모두 방문 가능하고,
                  V_B 와 V_B⊥ 가 셔플에 대해 닫혀 있는지 봅니다.
                  incarnation 을 나열할 수 있으면 "|B| 의 경로는 모두
                  방문 가능" 이라는 정의 쪽 검사도 함께 합니다.
- check_pure    : 데몬으로 끝나는 방문 가능 경로 s# 마다, s 뒤에
                  진짜 양수 행동을 이어 붙인 방문 가능 경로가 있는지 봅니다.
                  μ 는 basis 가 있으면 basis 에서부터 펼칩니다.
- check_quasi_pure : 위 검사를 괄호가 맞는(well-bracketed) 경로로 제한합니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable

from config import Config
from core.errors import BehaviourError
from core.syntax import Design
from behaviours.expr import BehaviourExpr, Orth, render_behaviour, with_basis_seeds, with_level
from behaviours.incarnation import incarnation
from behaviours.visitable import next_moves, visitable_paths
from paths.actions import DAIMON_ACTION, Seq, canonical, polarity_of_seq, render_seq
from paths.forest import paths_of
from paths.shuffle import shuffle
from paths.views import is_well_bracketed, trivial_view_of

logger = logging.getLogger(__name__)

# 정의 쪽 검사는 incarnation 이 이 정도로 작을 때만 합니다
_DEFINITION_LIMIT = 500


class Verdict(Enum):
    HOLDS = "Holds"
    FAILS_WITH_WITNESS = "FailsWithWitness"


@dataclass(frozen=True)
class CheckReport:
    property: str
    verdict: Verdict
    behaviour: str
    level: int | None
    max_len: int
    witness: Seq | None = None
    details: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "verdict": self.verdict.value,
            "behaviour": self.behaviour,
            "level": self.level,
            "max_len": self.max_len,
            "witness": render_seq(self.witness) if self.witness is not None else None,
            "details": list(self.details),
        }


def _bound(max_len: int | None) -> int:
    return Config.MAX_LEN if max_len is None else max_len


def _report(prop: str, B: BehaviourExpr, level, bound: int, witness: Seq | None, details: list[str]) -> CheckReport:
    verdict = Verdict.HOLDS if witness is None else Verdict.FAILS_WITH_WITNESS
    logger.info("%s(%s): %s", prop, render_behaviour(B), verdict.value)
    return CheckReport(prop, verdict, render_behaviour(B), level, bound, witness, details)


# ---------------------------------------------------------------
# 정규성
# ---------------------------------------------------------------

def _trivial_view_failure(paths: frozenset[Seq]) -> Seq | None:
    for s in sorted(paths, key=lambda t: (len(t), render_seq(t))):
        for k in range(1, len(s) + 1):
            u = s[:k]
            if u[-1].is_daimon:
                continue
            target = trivial_view_of(u) if u[-1].is_positive else trivial_view_of(u + (DAIMON_ACTION,))
            if canonical(target) not in paths:
                return u
    return None


def _shuffle_failure(paths: frozenset[Seq], bound: int) -> Seq | None:
    ordered = sorted(paths, key=lambda t: (len(t), render_seq(t)))
    for s, t in combinations(ordered, 2):
        if t[: len(s)] == s:
            continue
        if polarity_of_seq(s) is not polarity_of_seq(t):
            continue
        if s and s[0].is_positive and s[0] != t[0]:
            continue
        for u in shuffle(s, t):
            if len(u) <= bound and u not in paths:
                return u
    return None


def _definition_failure(designs: Iterable[Design], paths: frozenset[Seq], bound: int) -> Seq | None:
    for d in designs:
        for s in sorted(paths_of(d, bound), key=render_seq):
            if s not in paths:
                return s
    return None


@dataclass(frozen=True)
class RegularityForms:
    """
    한 쪽(B 또는 B⊥)의 정규성 두 판정.

    - 자명한 뷰 판정 : 자명한 뷰 조건 + 셔플
    - 정의 판정     : incarnation 경로 조건 + 셔플 (designs 를 주지 않으면 None)
    """

    trivial_views: Seq | None
    shuffle: Seq | None
    definition: Seq | None
    definition_checked: bool

    @property
    def by_trivial_views(self) -> bool:
        return self.trivial_views is None and self.shuffle is None

    @property
    def by_definition(self) -> bool | None:
        if not self.definition_checked:
            return None
        return self.definition is None and self.shuffle is None

    @property
    def agree(self) -> bool:
        return self.by_definition is None or self.by_definition == self.by_trivial_views

    @property
    def witness(self) -> Seq | None:
        for bad in (self.trivial_views, self.shuffle, self.definition):
            if bad is not None:
                return bad
        return None


def regularity_forms(paths: frozenset[Seq], designs: Iterable[Design] | None, bound: int) -> RegularityForms:
    """방문 가능 경로 집합 paths 와 incarnation designs 로 두 판정을 모두 계산합니다."""
    definition = None if designs is None else _definition_failure(designs, paths, bound)
    return RegularityForms(
        _trivial_view_failure(paths),
        _shuffle_failure(paths, bound),
        definition,
        designs is not None,
    )


def check_regular(B: BehaviourExpr, level: int | None = None, max_len: int | None = None) -> CheckReport:
    """
    B 가 (한계 안에서) 정규인지 검사합니다.

    Returns:
        CheckReport. 실패하면 witness 는 방문 가능해야 하는데 아닌 경로
        (또는 그 자명한 뷰를 만든 접두사). 두 판정이 다르면 details 에 남깁니다.
    """
    bound = _bound(max_len)
    expr = with_level(B, level)
    details: list[str] = []
    witness: Seq | None = None
    for side, label in ((expr, "B"), (Orth(expr), "B⊥")):
        paths = visitable_paths(side, max_len=bound)
        details.append(f"|V_{label}| = {len(paths)}")
        try:
            designs = incarnation(side, limit=_DEFINITION_LIMIT)
        except BehaviourError as e:
            details.append(f"{label}: incarnation 을 나열하지 못해 정의 검사를 건너뜀 ({e})")
            designs = None
        forms = regularity_forms(paths, designs, bound)
        if forms.trivial_views is not None:
            details.append(f"{label}: 자명한 뷰가 방문 가능하지 않은 접두사")
        if forms.shuffle is not None:
            details.append(f"{label}: 셔플에 닫혀 있지 않음")
        if forms.definition is not None:
            details.append(f"{label}: incarnation 의 경로가 방문 가능하지 않음")
        if not forms.agree:
            details.append(
                f"{label}: 두 판정이 다름 (자명한 뷰: {forms.by_trivial_views}, 정의: {forms.by_definition})"
            )
            logger.warning("정규성 두 판정 불일치: %s", label)
        if witness is None:
            witness = forms.witness
    return _report("regular", B, level, bound, witness, details)


# ---------------------------------------------------------------
# 순수성
# ---------------------------------------------------------------

def _stuck_daimons(paths: frozenset[Seq], only_well_bracketed: bool) -> list[Seq]:
    moves = next_moves(paths)
    stuck = []
    for s in paths:
        if not s or not s[-1].is_daimon:
            continue
        if only_well_bracketed and not is_well_bracketed(s):
            continue
        base = s[:-1]
        if not any(a.is_proper and a.is_positive for a in moves.get(base, ())):
            stuck.append(s)
    return stuck


def _purity(prop: str, B: BehaviourExpr, level, max_len, only_well_bracketed: bool) -> CheckReport:
    bound = _bound(max_len)
    expr = with_basis_seeds(with_level(B, level))
    paths = visitable_paths(expr, max_len=bound)
    stuck = _stuck_daimons(paths, only_well_bracketed)
    details = [f"|V_B| = {len(paths)}", f"막힌 데몬 경로 {len(stuck)} 개"]
    witness = None
    if stuck:
        witness = min(stuck, key=lambda s: (-len(s), render_seq(s)))
    return _report(prop, B, level, bound, witness, details)


def check_pure(B: BehaviourExpr, level: int | None = None, max_len: int | None = None) -> CheckReport:
    """데몬으로 끝나는 방문 가능 경로는 모두 진짜 양수 행동으로 늘릴 수 있는가"""
    return _purity("pure", B, level, max_len, only_well_bracketed=False)


def check_quasi_pure(B: BehaviourExpr, level: int | None = None, max_len: int | None = None) -> CheckReport:
    """check_pure 를 괄호가 맞는 경로로 제한한 것"""
    return _purity("quasi_pure", B, level, max_len, only_well_bracketed=True)
