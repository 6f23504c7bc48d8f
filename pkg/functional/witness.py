"""
witness.py - 순수하지 않은 함수형 타입의 증거 만들기
====================================================
impurity_criterion 이 찾은 분해 P = C1[C2[Q1 ⊸⁺ Q2] ⊸⁺ R] 로부터
더 늘릴 수 없는 데몬 종료 방문 가능 경로 s 와, 그 경로로 상호작용하는
두 디자인 p ∈ P, n ∈ P⊥ 를 만듭니다.

[초보자 안내]
- 가장 안쪽 경로 (C1, C2 가 구멍일 때):
      x0|val<a> · pr_a(b,c) · b|val<q> · val_q(r) · r|pr<d,e> · val_d(f)
      · (R 의 κ⁺ κ⁻) · (Q1 의 첫 양수 행동 @f) · overline(Q2 의 최대 경로 @e) · #
  C2 의 단계마다 인자 쪽에 행동을 끼워 넣고, C1 의 단계마다 바깥을 감쌉니다.
- p 와 n 은 s (또는 dual s) 의 뷰에, s 에서 벗어나는 상대 행동마다
  "그 행동 + #" 뷰를 더해 읽은 디자인입니다.
- validate=True 이면 s 가 경로인지, 괄호가 맞지 않는지, 진짜 양수 행동으로
  늘릴 수 없는지, ⟨p ← n⟩ = s 인지 확인하고 어긋나면
  WitnessValidationError 를 냅니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from config import Config
from core.errors import PatternError, WitnessValidationError
from core.syntax import X0, Design, FreshNames
from behaviours.checks import CheckReport, check_pure, check_quasi_pure, check_regular
from behaviours.expr import BehaviourExpr, Orth, signature_of
from behaviours.visitable import is_visitable, member_by_paths, next_moves, visitable_paths
from datatypes.interpret import basis
from functional.criterion import PURE, Decomposition, Pure, impurity_criterion
from functional.types import Data, FuncType, PlusF, Step, TensorF, compile_type, render_type
from paths.actions import DAIMON_ACTION, LocatedAction, Seq, canonical, neg, overline_seq, pos, render_seq
from paths.completion import design_from_views, prefix_views
from paths.interaction import interaction_path
from paths.views import dual, is_path, is_well_bracketed, view_of

logger = logging.getLogger(__name__)

_DATA_BOUND = 8


@dataclass
class ImpurityWitness:
    type: FuncType
    decomposition: Decomposition
    path: Seq
    p: Design
    n: Design
    validated: bool = False

    def to_dict(self) -> dict:
        from core.parser import render_design

        return {
            "type": render_type(self.type),
            "decomposition": self.decomposition.to_dict(),
            "path": render_seq(self.path),
            "length": len(self.path),
            "p": render_design(self.p),
            "n": render_design(self.n),
            "validated": self.validated,
        }


# ---------------------------------------------------------------
# 데이터 잎의 basis 경로
# ---------------------------------------------------------------

@lru_cache(maxsize=256)
def _basis_paths(leaf: Data) -> tuple[Seq, ...]:
    paths = visitable_paths(basis(leaf.pattern), max_len=_DATA_BOUND)
    return tuple(sorted(paths, key=lambda s: (len(s), render_seq(s))))


def _least(leaf: Data, keep: Callable[[Seq], bool], what: str) -> Seq:
    for s in _basis_paths(leaf):
        if keep(s):
            return s
    raise PatternError(f"{render_type(leaf)} 의 basis 에 {what} 경로가 없습니다.")


def _daimon_free(s: Seq) -> bool:
    return bool(s) and not any(a.is_daimon for a in s)


def _maximal_daimon_free(leaf: Data) -> Seq:
    free = [s for s in _basis_paths(leaf) if _daimon_free(s)]
    return _least(leaf, lambda s: s in free and not any(len(t) > len(s) and t[: len(s)] == s for t in free), "최대")


class _PathBuilder:
    """새 주소 이름을 나눠 주며 증거 경로 조각을 만드는 도우미"""

    def __init__(self):
        self.fresh = FreshNames({X0}, prefix="w")

    def names(self, k: int) -> list[str]:
        return [self.fresh() for _ in range(k)]

    def place(self, s: Seq, address: str) -> list[LocatedAction]:
        """canonical 경로를 주소 address 로 옮기고 묶인 이름을 새로 붙입니다."""
        mapping = {X0: address}
        out = []
        for a in s:
            for b in a.bound:
                mapping[b] = self.fresh()
            out.append(a.rename(mapping))
        return out

    # --- 타입별 조각 ---

    def first_positive(self, T: FuncType, x: str) -> LocatedAction:
        if isinstance(T, Data):
            return self.place(_least(T, lambda s: len(s) == 1 and s[0].is_proper, "길이 1"), x)[0]
        if isinstance(T, PlusF):
            return pos(x, "p1", *self.names(1))
        if isinstance(T, TensorF):
            return pos(x, "pr", *self.names(2))
        return pos(x, "val", *self.names(1))

    def kplus_kminus(self, T: FuncType, x: str) -> list[LocatedAction]:
        if isinstance(T, Data):
            s = _least(T, lambda s: len(s) == 3 and s[-1].is_daimon, "길이 3 데몬 종료")
            return self.place(s[:2], x)
        if isinstance(T, PlusF):
            y, z = self.names(2)
            return [pos(x, "p1", y), neg(y, "val", z)]
        if isinstance(T, TensorF):
            y1, y2, z = self.names(3)
            return [pos(x, "pr", y1, y2), neg(y1, "val", z)]
        a, b, c = self.names(3)
        return [pos(x, "val", a), neg(a, "pr", b, c)]

    def maximal_free(self, T: FuncType, x: str) -> list[LocatedAction]:
        """T 의 주인 쪽에서 본, 데몬 없는 최대 경로"""
        if isinstance(T, Data):
            return self.place(_maximal_daimon_free(T), x)
        if isinstance(T, PlusF):
            y, z = self.names(2)
            return [pos(x, "p1", y), neg(y, "val", z)] + self.maximal_free(T.left, z)
        if isinstance(T, TensorF):
            l, r, l2, r2 = self.names(4)
            return (
                [pos(x, "pr", l, r), neg(l, "val", l2)]
                + self.maximal_free(T.left, l2)
                + [neg(r, "val", r2)]
                + self.maximal_free(T.right, r2)
            )
        a, b, c, f = self.names(4)
        return (
            [pos(x, "val", a), neg(a, "pr", b, c), pos(b, "val", f), self.first_positive(T.left, f).overline()]
            + self.maximal_free(T.right, c)
        )

    # --- 경로 조립 ---

    def argument(self, c2: tuple[Step, ...], at: str) -> tuple[list[LocatedAction], str]:
        """인자 C2[...] 를 상대가 펼치는 부분. 구멍에 닿은 주소를 함께 돌려줍니다."""
        acts: list[LocatedAction] = []
        for step in c2:
            if step.kind == "plus":
                g, k = self.names(2)
                acts += [neg(at, f"p{step.side}", g), pos(g, "val", k)]
                at = k
            elif step.kind == "tensor":
                g, h, k0, k1 = self.names(4)
                hole, other = (g, h) if step.side == 1 else (h, g)
                acts += [neg(at, "pr", g, h), pos(other, "val", k0)]
                acts += overline_seq(self.maximal_free(step.other, k0))
                acts.append(pos(hole, "val", k1))
                at = k1
            else:
                r, d, e = self.names(3)
                acts += [neg(at, "val", r), pos(r, "pr", d, e)]
                at = e
        return acts, at

    def inner(self, dec: Decomposition, x: str) -> list[LocatedAction]:
        a, b, c, q = self.names(4)
        acts = [pos(x, "val", a), neg(a, "pr", b, c), pos(b, "val", q)]
        prefix, at = self.argument(dec.c2, q)
        acts += prefix
        r, d, e, f = self.names(4)
        acts += [neg(at, "val", r), pos(r, "pr", d, e), neg(d, "val", f)]
        acts += self.kplus_kminus(dec.r, c)
        acts.append(self.first_positive(dec.q1, f))
        acts += overline_seq(self.maximal_free(dec.q2, e))
        acts.append(DAIMON_ACTION)
        return acts

    def lift(self, c1: tuple[Step, ...], x: str, dec: Decomposition) -> list[LocatedAction]:
        if not c1:
            return self.inner(dec, x)
        step, rest = c1[0], c1[1:]
        if step.kind == "plus":
            y0, y = self.names(2)
            return [pos(x, f"p{step.side}", y0), neg(y0, "val", y)] + self.lift(rest, y, dec)
        if step.kind == "tensor":
            x1, x2, k, k2 = self.names(4)
            hole, other = (x1, x2) if step.side == 1 else (x2, x1)
            return (
                [pos(x, "pr", x1, x2), neg(other, "val", k)]
                + self.maximal_free(step.other, k)
                + [neg(hole, "val", k2)]
                + self.lift(rest, k2, dec)
            )
        a, b, c, f = self.names(4)
        return (
            [pos(x, "val", a), neg(a, "pr", b, c), pos(b, "val", f)]
            + list(overline_seq(self.maximal_free(step.other, f)))
            + self.lift(rest, c, dec)
        )


def witness_path(dec: Decomposition) -> Seq:
    """분해에서 데몬으로 끝나는 증거 경로 s (canonical)"""
    return canonical(_PathBuilder().lift(dec.c1, X0, dec))


# ---------------------------------------------------------------
# p, n 디자인
# ---------------------------------------------------------------

def _design_along(t: Seq, paths: frozenset[Seq], positive: bool) -> Design:
    """t 의 뷰에 더해, t 에서 벗어나는 상대 행동마다 그 뒤에 # 를 둔 디자인"""
    views = prefix_views(t)
    moves = next_moves(paths)
    for k in range(len(t) + 1):
        u = t[:k]
        if u and (not u[-1].is_positive or u[-1].is_daimon):
            continue
        if not u and positive:
            continue
        for a in sorted(moves.get(u, ()), key=str):
            if a.is_positive:
                continue
            v = canonical(view_of(u + (a,)))
            if v not in views:
                views |= prefix_views(canonical(u + (a, DAIMON_ACTION)))
    return design_from_views(views, positive)


# ---------------------------------------------------------------
# 확인
# ---------------------------------------------------------------

def _available(s: Seq) -> set[str]:
    """s 의 P-뷰 안에서 음수 행동이 만들었지만 아직 쓰이지 않은 주소"""
    view = view_of(s)
    created = {b for a in view if not a.is_positive for b in a.bound}
    used = {a.address for a in s if a.is_proper}
    return created - used


def _extensions(base: Seq, expr: BehaviourExpr) -> list[Seq]:
    sig = signature_of(expr)
    out = []
    fresh = FreshNames({b for a in base for b in a.bound} | {X0}, prefix="v")
    for z in sorted(_available(base)):
        for name in sig.names():
            out.append(base + (pos(z, name, *(fresh() for _ in range(sig.arity(name)))),))
    return out


def validate_witness(w: ImpurityWitness, level: int | None = None, check_members: bool = True) -> None:
    """
    Raises:
        WitnessValidationError: 증거가 조건 하나라도 어길 때
    """
    s = w.path
    expr = compile_type(w.type, level)
    if not s or not s[-1].is_daimon:
        raise WitnessValidationError("증거 경로가 데몬으로 끝나지 않습니다.")
    if not is_path(s):
        raise WitnessValidationError(f"증거가 경로가 아닙니다: {render_seq(s)}")
    if is_well_bracketed(s):
        raise WitnessValidationError("증거 경로의 괄호가 맞습니다 (순수하지 않은 증거가 될 수 없음).")
    for t in _extensions(s[:-1], expr):
        if is_visitable(t, expr):
            raise WitnessValidationError(f"증거 경로를 늘릴 수 있습니다: {render_seq(t)}")
    played = interaction_path(w.p, w.n)
    if not isinstance(played, tuple) or canonical(played) != s:
        raise WitnessValidationError("⟨p ← n⟩ 이(가) 증거 경로와 다릅니다.")
    if check_members:
        if not member_by_paths(w.p, expr):
            raise WitnessValidationError("p 가 P 에 속하지 않습니다.")
        if not member_by_paths(w.n, Orth(expr)):
            raise WitnessValidationError("n 이 P⊥ 에 속하지 않습니다.")


def impurity_witness(
    P: FuncType,
    level: int | None = None,
    validate: bool = True,
    check_members: bool = True,
) -> ImpurityWitness | Pure:
    """
    P 가 기준에 따라 순수하지 않으면 증거를 만들고, 순수하면 PURE 를 돌려줍니다.

    Args:
        P: 함수형 타입
        level: μ 단계 (None 이면 Config.LEVEL)
        validate: 만든 증거를 확인할지
        check_members: p ∈ P, n ∈ P⊥ 도 게임 탐색으로 확인할지 (기본값 True)

    Raises:
        WitnessValidationError: validate=True 이고 확인에 실패할 때
    """
    dec = impurity_criterion(P)
    if isinstance(dec, Pure):
        return PURE
    level = Config.LEVEL if level is None else level
    s = witness_path(dec)
    expr = compile_type(P, level)
    t = canonical(dual(s))
    p = _design_along(s, visitable_paths(expr, max_len=len(s)), positive=True)
    n = _design_along(t, visitable_paths(Orth(expr), max_len=len(s)), positive=False)
    w = ImpurityWitness(P, dec, s, p, n)
    if validate:
        validate_witness(w, level, check_members)
        w.validated = True
    logger.info("impurity witness(%s): 길이 %d", render_type(P), len(s))
    return w


# ---------------------------------------------------------------
# 종합 검사
# ---------------------------------------------------------------

@dataclass
class FunctionalReport:
    type: str
    regular: CheckReport
    quasi_pure: CheckReport
    pure: CheckReport
    criterion: Decomposition | Pure
    details: list[str] = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        """기준의 답과 경로 검사(check_pure)의 답이 같은가"""
        return isinstance(self.criterion, Pure) == self.pure.holds

    @property
    def holds(self) -> bool:
        return self.regular.holds and self.quasi_pure.holds and self.agrees

    def to_dict(self) -> dict:
        return {
            "type": self.type,
            "regular": self.regular.to_dict(),
            "quasi_pure": self.quasi_pure.to_dict(),
            "pure": self.pure.to_dict(),
            "criterion": str(self.criterion),
            "agrees": self.agrees,
            "details": list(self.details),
        }


def check_functional(P: FuncType, level: int | None = None, max_len: int | None = None) -> FunctionalReport:
    """정규성, 준순수성, 순수성을 확인하고 순수성은 문법 기준과 맞대어 봅니다."""
    expr = compile_type(P, level)
    report = FunctionalReport(
        render_type(P),
        check_regular(expr, level, max_len),
        check_quasi_pure(expr, level, max_len),
        check_pure(expr, level, max_len),
        impurity_criterion(P),
    )
    if not report.agrees:
        report.details.append("기준과 경로 검사의 답이 다릅니다 (max_len 이 증거 경로보다 짧을 수 있음).")
        logger.warning("criterion/check_pure 불일치: %s", report.type)
    return report
