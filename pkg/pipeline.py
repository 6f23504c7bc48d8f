"""
pipeline.py - 자체 검사(selftest) 파이프라인
============================================
엔진 전체가 기대한 성질을 지키는지 단계별로 확인합니다.
CLI(main.py) 와 테스트에서 모두 쓸 수 있도록 콜백 방식으로 진행률을 알립니다.

[검사 흐름]
  dual 대합 → 직교성 ⇔ 상호작용 경로 → 멀티 디자인 Cut 교환 → 결합 법칙
  → 내부 완전성 → Nat 크기 → 데이터 정규성/순수성 → List′ 비순수
  → 함수형 타입 기준 코퍼스 → 11 행동 예제

[초보자 안내]
- 모든 무작위 표본은 seed(기본 Config.SEED)로 정해지므로
  같은 seed 로 다시 실행하면 같은 결과가 나옵니다.
- quick=True(기본)는 표본 수와 길이 한계를 줄여 몇 분 안에 끝나게 합니다.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import islice
from typing import Callable

from config import Config
from core.errors import LudicsError
from core.syntax import X0, count_actions
from behaviours import (
    Const,
    Down,
    Up,
    bool_behaviour,
    check_pure,
    check_regular,
    closure_report,
    enumerate_designs,
    incarnation,
    tensor_pos,
)
from datatypes import interpret, parse_pattern, standard_pattern
from functional import (
    Pure,
    check_functional,
    impurity_criterion,
    impurity_witness,
    parse_functype,
    render_type,
    sample_corpus,
)
from multidesign.laws import cut_associates, orthogonal_triples, paths_associate, substitution_associates, with_redexes
from multidesign.multi import MultiDesign, cut
from paths import NOT_ORTHOGONAL, dual, interaction_path, is_path, paths_of
from reduction.normalizer import is_orthogonal

logger = logging.getLogger(__name__)

ProgressFn = Callable[[int, str], None]


@dataclass
class CaseResult:
    name: str
    holds: bool
    detail: str = ""
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {"name": self.name, "holds": self.holds, "detail": self.detail, "seconds": round(self.seconds, 3)}


@dataclass
class SelftestReport:
    seed: int
    level: int
    max_len: int
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.cases)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "level": self.level,
            "max_len": self.max_len,
            "holds": self.holds,
            "cases": [c.to_dict() for c in self.cases],
        }


_SIGNATURE = {"a": 0, "b": 1}


def _sample_designs(rng: random.Random, positive: bool, size: int) -> list:
    designs = enumerate_designs(_SIGNATURE, 4, positive)
    return rng.sample(designs, min(size, len(designs)))


def _dual_involution(rng: random.Random, size: int) -> str | None:
    paths = sorted(
        {s for d in _sample_designs(rng, True, 60) for s in paths_of(d)},
        key=lambda s: tuple(map(str, s)),
    )
    for s in islice(rng.sample(paths, min(size, len(paths))), size):
        if dual(dual(s)) != s:
            return f"dual(dual(s)) != s: {' '.join(map(str, s))}"
        if not is_path(dual(s)):
            return f"dual(s) 가 경로가 아님: {' '.join(map(str, s))}"
    return None


def _pairs(rng: random.Random, size: int) -> list[tuple]:
    ps = _sample_designs(rng, True, size)
    ns = _sample_designs(rng, False, size)
    return [(rng.choice(ps), rng.choice(ns)) for _ in range(size)]


def _ortho_vs_path(pairs: list[tuple]) -> str | None:
    for p, n in pairs:
        converged = is_orthogonal(p, n)
        found = interaction_path(p, n) is not NOT_ORTHOGONAL
        if converged != found:
            return f"직교성({converged})과 상호작용 경로 존재({found})가 다름"
    return None


def _cut_commutes(pairs: list[tuple]) -> str | None:
    for p, n in pairs:
        D, E = MultiDesign.from_design(p), MultiDesign.from_design(n)
        if cut(D, E) != cut(E, D):
            return "Cut(D, E) != Cut(E, D)"
    return None


@lru_cache(maxsize=None)
def _triples() -> list:
    return orthogonal_triples(enumerate_designs(_SIGNATURE, 4, True), enumerate_designs(_SIGNATURE, 4, False))


def _normalization_associates(rng: random.Random, pairs: list[tuple], size: int) -> str | None:
    for p, n in pairs:
        if not substitution_associates(with_redexes(p), {X0: with_redexes(n)}):
            return "⟦d[n/x0]⟧ != ⟦⟦d⟧[⟦n⟧/x0]⟧"
    triples = _triples()
    for _ in range(size):
        D, E, F = rng.choice(triples)
        D = MultiDesign.of(positive=with_redexes(D.positive))
        EF = MultiDesign.of({x: with_redexes(n) for x, n in E.union(F).negatives})
        if not (cut_associates(D, EF) and cut_associates(EF, D)):
            return "⟦Cut(D, E)⟧ != ⟦Cut(⟦D⟧, ⟦E⟧)⟧"
    return None


def _paths_associate(rng: random.Random, size: int) -> str | None:
    triples = _triples()
    for _ in range(size):
        D, E, F = rng.choice(triples)
        if not (paths_associate(D, E, F) and paths_associate(D, F, E)):
            return "⟨E ← ⟦Cut(F, D)⟧⟩ != ⟨E∪F ← D⟩|E"
    return None


def _closure(max_actions: int) -> str | None:
    for B in (Up(Down(Const("b"))), Down(Const("b")), bool_behaviour(), tensor_pos(Const("b"), Const("b"))):
        report = closure_report(B, max_actions=max_actions)
        if not report.holds:
            return f"{report.behaviour}: 명시적 형태 밖의 멤버 {len(report.violations)} 개"
    return None


def _nat_sizes() -> str | None:
    sizes = [len(incarnation(interpret(standard_pattern("Nat"), level=k))) for k in range(4)]
    return None if sizes == [1, 4, 7, 10] else f"Nat 크기 {sizes}"


def _data_checks(max_len: int) -> str | None:
    for key, level in (("Bool", 0), ("Nat", 3), ("List", 2), ("Tree", 2)):
        B = interpret(standard_pattern(key), level=level)
        for report in (check_regular(B, max_len=max_len), check_pure(B, max_len=max_len)):
            if not report.holds:
                return f"{key}: {report.property} 실패"
    return None


def _list_prime(max_len: int) -> str | None:
    pattern = parse_pattern("mu X. (b (*) X)")
    for level in (1, 2):
        if check_pure(interpret(pattern, level=level), max_len=max_len).holds:
            return f"List′ 단계 {level} 이(가) 순수하게 나옴"
    return None


def _criterion_corpus(rng_seed: int, size: int, level: int, max_len: int) -> str | None:
    for T in sample_corpus(size, seed=rng_seed):
        bound = max_len
        if not isinstance(impurity_criterion(T), Pure):
            w = impurity_witness(T, level)
            bound = max(bound, len(w.path))
        report = check_functional(T, level, bound)
        if not report.quasi_pure.holds:
            return f"{render_type(T)}: 준순수가 아님"
        if not report.agrees:
            return f"{render_type(T)}: 기준과 check_pure 가 다름"
    return None


def _example_eleven() -> str | None:
    w = impurity_witness(parse_functype("(C_u -o C_u) -o Bool"))
    if isinstance(w, Pure):
        return "기준이 순수하다고 답함"
    if count_actions(w.p) != 11 or len(w.path) != 11:
        return f"행동 수 {count_actions(w.p)}, 경로 길이 {len(w.path)}"
    return None


def run_selftest(
    seed: int | None = None,
    level: int | None = None,
    max_len: int | None = None,
    quick: bool = True,
    on_progress: ProgressFn | None = None,
) -> SelftestReport:
    """
    자체 검사를 실행합니다.

    Args:
        seed: 표본 시드 (None 이면 Config.SEED)
        level: 함수형 타입 검사의 μ 단계 (None 이면 Config.LEVEL)
        max_len: 데이터 / 함수형 검사의 경로 길이 한계 (None 이면 quick 에 따라 10 또는 Config.MAX_LEN)
        quick: 표본 수를 줄일지
        on_progress: 진행률 콜백 (percent: 0~100, message)

    Returns:
        SelftestReport (모든 단계가 성립하면 holds 가 True)
    """
    seed = Config.SEED if seed is None else seed
    level = Config.LEVEL if level is None else level
    max_len = (10 if quick else Config.MAX_LEN) if max_len is None else max_len
    rng = random.Random(seed)
    report = SelftestReport(seed, level, max_len)
    paths_n, pairs_n, corpus_n = (100, 50, 12) if quick else (500, 200, 60)
    pairs = _pairs(rng, pairs_n)

    steps: list[tuple[str, Callable[[], str | None]]] = [
        ("dual 대합", lambda: _dual_involution(rng, paths_n)),
        ("직교성 ⇔ 상호작용 경로", lambda: _ortho_vs_path(pairs)),
        ("Cut 교환 법칙", lambda: _cut_commutes(pairs)),
        ("정규화 결합 법칙", lambda: _normalization_associates(rng, pairs, 100)),
        ("경로 결합 법칙", lambda: _paths_associate(rng, 100)),
        ("내부 완전성", lambda: _closure(3 if quick else 4)),
        ("Nat 크기 1, 4, 7, 10", _nat_sizes),
        ("데이터 정규성 / 순수성", lambda: _data_checks(max_len)),
        ("List′ 비순수", lambda: _list_prime(max_len)),
        ("함수형 타입 기준 코퍼스", lambda: _criterion_corpus(seed, corpus_n, level, max_len)),
        ("11 행동 예제", _example_eleven),
    ]

    def progress(percent: int, message: str):
        if on_progress:
            on_progress(percent, message)

    for k, (name, run) in enumerate(steps):
        progress(k * 100 // len(steps), f"🔎 {name} 검사 중...")
        started = time.perf_counter()
        try:
            problem = run()
        except LudicsError as e:
            problem = f"{type(e).__name__}: {e}"
        case = CaseResult(name, problem is None, problem or "", time.perf_counter() - started)
        report.cases.append(case)
        logger.info("selftest %s: %s", name, "성립" if case.holds else case.detail)
    progress(100, "✅ 자체 검사 완료" if report.holds else "❌ 일부 검사 실패")
    return report
