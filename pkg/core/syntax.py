"""
syntax.py - 디자인 항(term)의 표현과 구조 연산
==============================================
디자인(design)은 양(+)과 음(-) 두 종류의 항으로 이루어진 나무입니다.

  양수 디자인   #                  (데몬, daimon: 상호작용 성공 종료)
                _                  (오메가, Omega: 발산)
                x|a<N1, ..., Nk>   (변수 x 에 이름 a 를 인자와 함께 보냄)
                [N]|a<N1, ..., Nk> (컷: 머리가 음수 디자인)
  음수 디자인   a(x1,..,xk).P + b(y).Q + ...   (이름별 분기의 합)

[초보자 안내]
- 모든 값은 불변(frozen) dataclass 이므로 해시가 가능하고, 집합/딕셔너리
  키로 쓸 수 있습니다.
- Neg 는 생성될 때 분기를 이름순으로 정렬하고, 본문이 오메가인 분기는
  버립니다. 그래서 "a(x)._ + b().#" 와 "b().#" 는 같은 값이 됩니다.
- 변수 이름 x0 은 "관찰 위치" 로 예약되어 있습니다. 원자적 음수 디자인은
  x0 을 자유 변수로 갖지 않는 닫힌 음수 디자인입니다.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Mapping, Union

from core.errors import (
    ArityError,
    DuplicateBranchError,
    SubstitutionError,
    UndeclaredNameError,
)

X0 = "x0"

# 행동(behaviour) 연결사가 사용하는 예약 이름과 인자 개수
RESERVED_ARITIES: dict[str, int] = {"val": 1, "p1": 1, "p2": 1, "pr": 2}


class Polarity(Enum):
    POSITIVE = "+"
    NEGATIVE = "-"

    def flip(self) -> "Polarity":
        return Polarity.NEGATIVE if self is Polarity.POSITIVE else Polarity.POSITIVE


# ---------------------------------------------------------------
# 항(term) 정의
# ---------------------------------------------------------------

@dataclass(frozen=True)
class Daimon:
    def __repr__(self) -> str:
        return "Daimon()"


@dataclass(frozen=True)
class Omega:
    def __repr__(self) -> str:
        return "Omega()"


@dataclass(frozen=True)
class PosApp:
    """x|a<N1,...,Nk> 형태의 양수 디자인"""

    head: str
    name: str
    args: tuple["Neg", ...] = ()


@dataclass(frozen=True)
class Cut:
    """[N]|a<N1,...,Nk> 형태의 양수 디자인 (머리가 음수 디자인)"""

    head: "Neg"
    name: str
    args: tuple["Neg", ...] = ()


@dataclass(frozen=True)
class Branch:
    name: str
    params: tuple[str, ...]
    body: "Positive"


@dataclass(frozen=True)
class Neg:
    """
    이름별 분기의 합.

    분기는 이름순으로 정렬되며, 본문이 오메가인 분기는 저장하지 않습니다.
    (부분 함수로 보면 "정의되지 않은 이름" 과 같기 때문입니다.)
    """

    branches: tuple[Branch, ...] = ()

    def __post_init__(self):
        kept = [b for b in self.branches if not isinstance(b.body, Omega)]
        seen: set[str] = set()
        for b in kept:
            if b.name in seen:
                raise DuplicateBranchError(f"분기 이름 '{b.name}' 이(가) 중복되었습니다.")
            seen.add(b.name)
        object.__setattr__(self, "branches", tuple(sorted(kept, key=lambda b: b.name)))

    def get(self, name: str) -> Branch | None:
        for b in self.branches:
            if b.name == name:
                return b
        return None

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(b.name for b in self.branches)

    def __repr__(self) -> str:
        return f"Neg({', '.join(b.name for b in self.branches)})"


Positive = Union[Daimon, Omega, PosApp, Cut]
Design = Union[Positive, Neg]

DAIMON = Daimon()
OMEGA = Omega()
EMPTY = Neg(())


def polarity_of(d: Design) -> Polarity:
    return Polarity.NEGATIVE if isinstance(d, Neg) else Polarity.POSITIVE


# ---------------------------------------------------------------
# 시그니처
# ---------------------------------------------------------------

@dataclass
class Signature:
    """
    이름 → 인자 개수(arity) 표.

    예약 이름(val, p1, p2, pr)은 항상 포함됩니다.
    """

    arities: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        for name, arity in self.arities.items():
            if arity < 0:
                raise ArityError(f"이름 '{name}' 의 인자 개수가 음수입니다: {arity}")
            reserved = RESERVED_ARITIES.get(name)
            if reserved is not None and reserved != arity:
                raise ArityError(f"예약 이름 '{name}' 의 인자 개수는 {reserved} 입니다.")
        self.arities = {**self.arities, **RESERVED_ARITIES}

    def arity(self, name: str) -> int:
        if name not in self.arities:
            raise UndeclaredNameError(f"선언되지 않은 이름입니다: '{name}'")
        return self.arities[name]

    def declare(self, name: str, arity: int) -> None:
        known = self.arities.get(name)
        if known is not None and known != arity:
            raise ArityError(f"이름 '{name}' 의 인자 개수가 {known} 와(과) {arity} 로 다릅니다.")
        if arity < 0:
            raise ArityError(f"이름 '{name}' 의 인자 개수가 음수입니다: {arity}")
        self.arities[name] = arity

    def names(self) -> list[str]:
        return sorted(self.arities)

    def user_names(self) -> list[str]:
        return sorted(n for n in self.arities if n not in RESERVED_ARITIES)

    def merged(self, other: "Signature") -> "Signature":
        merged = Signature(dict(self.arities))
        for name, arity in other.arities.items():
            merged.declare(name, arity)
        return merged


# ---------------------------------------------------------------
# 변수
# ---------------------------------------------------------------

class FreshNames:
    """
    결정적인 새 변수 이름 생성기.

    사용 예시:
        fresh = FreshNames(avoid={"x", "z1"}, prefix="z")
        fresh()  # "z2"
    """

    def __init__(self, avoid: Iterable[str] = (), prefix: str = "z"):
        self.avoid = set(avoid)
        self.prefix = prefix
        self.counter = 0

    def __call__(self) -> str:
        while True:
            self.counter += 1
            name = f"{self.prefix}{self.counter}"
            if name not in self.avoid:
                self.avoid.add(name)
                return name


@lru_cache(maxsize=None)
def free_vars(d: Design) -> frozenset[str]:
    if isinstance(d, PosApp):
        out = {d.head}
        for a in d.args:
            out |= free_vars(a)
        return frozenset(out)
    if isinstance(d, Cut):
        out = set(free_vars(d.head))
        for a in d.args:
            out |= free_vars(a)
        return frozenset(out)
    if isinstance(d, Neg):
        out: set[str] = set()
        for b in d.branches:
            out |= free_vars(b.body) - set(b.params)
        return frozenset(out)
    return frozenset()


@lru_cache(maxsize=None)
def bound_vars(d: Design) -> frozenset[str]:
    if isinstance(d, (PosApp, Cut)):
        out: set[str] = set(bound_vars(d.head)) if isinstance(d, Cut) else set()
        for a in d.args:
            out |= bound_vars(a)
        return frozenset(out)
    if isinstance(d, Neg):
        out = set()
        for b in d.branches:
            out |= set(b.params) | bound_vars(b.body)
        return frozenset(out)
    return frozenset()


def all_vars(d: Design) -> frozenset[str]:
    return free_vars(d) | bound_vars(d)


# ---------------------------------------------------------------
# 이름 바꾸기 / 치환 (속박 변수 포획 방지)
# ---------------------------------------------------------------

def _rename(d: Design, mapping: Mapping[str, str], fresh: FreshNames) -> Design:
    """자유 변수 → 변수 이름 바꾸기."""
    if not mapping:
        return d
    if isinstance(d, PosApp):
        return PosApp(mapping.get(d.head, d.head), d.name, tuple(_rename(a, mapping, fresh) for a in d.args))
    if isinstance(d, Cut):
        return Cut(_rename(d.head, mapping, fresh), d.name, tuple(_rename(a, mapping, fresh) for a in d.args))
    if isinstance(d, Neg):
        return Neg(tuple(_rename_branch(b, mapping, fresh) for b in d.branches))
    return d


def _rename_branch(b: Branch, mapping: Mapping[str, str], fresh: FreshNames) -> Branch:
    inner = {k: v for k, v in mapping.items() if k not in b.params and k in free_vars(b.body)}
    if not inner:
        return b
    targets = set(inner.values())
    params = list(b.params)
    for i, p in enumerate(params):
        if p in targets:
            params[i] = fresh()
            inner[p] = params[i]
    return Branch(b.name, tuple(params), _rename(b.body, inner, fresh))


def _subst(d: Design, mapping: Mapping[str, Neg], fresh: FreshNames) -> Design:
    """자유 변수 → 음수 디자인 치환. 치환된 머리는 컷이 됩니다."""
    if not mapping:
        return d
    if isinstance(d, PosApp):
        args = tuple(_subst(a, mapping, fresh) for a in d.args)
        if d.head in mapping:
            return Cut(mapping[d.head], d.name, args)
        return PosApp(d.head, d.name, args)
    if isinstance(d, Cut):
        return Cut(_subst(d.head, mapping, fresh), d.name, tuple(_subst(a, mapping, fresh) for a in d.args))
    if isinstance(d, Neg):
        return Neg(tuple(_subst_branch(b, mapping, fresh) for b in d.branches))
    return d


def _subst_branch(b: Branch, mapping: Mapping[str, Neg], fresh: FreshNames) -> Branch:
    inner = {k: v for k, v in mapping.items() if k not in b.params and k in free_vars(b.body)}
    if not inner:
        return b
    captured: set[str] = set()
    for v in inner.values():
        captured |= free_vars(v)
    renaming: dict[str, str] = {}
    params = list(b.params)
    for i, p in enumerate(params):
        if p in captured:
            params[i] = fresh()
            renaming[p] = params[i]
    body = _rename(b.body, renaming, fresh)
    return Branch(b.name, tuple(params), _subst(body, inner, fresh))


def _fresh_for(*designs: Design, extra: Iterable[str] = ()) -> FreshNames:
    avoid: set[str] = set(extra)
    for d in designs:
        avoid |= all_vars(d)
    return FreshNames(avoid)


def substitute(d: Design, bindings: Mapping[str, Neg]) -> Design:
    """
    자유 변수를 음수 디자인으로 동시에 치환합니다.

    Args:
        d: 대상 디자인
        bindings: 변수 → 음수 디자인

    Returns:
        치환된 디자인 (머리 변수가 치환되면 컷이 생깁니다)

    Raises:
        SubstitutionError: 속박 변수를 치환하려 할 때
    """
    clash = sorted(set(bindings) & bound_vars(d))
    if clash:
        raise SubstitutionError(f"속박 변수는 치환할 수 없습니다: {', '.join(clash)}")
    relevant = {k: v for k, v in bindings.items() if k in free_vars(d)}
    fresh = _fresh_for(d, *relevant.values(), extra=bindings)
    return _subst(d, relevant, fresh)


def rename_free(d: Design, mapping: Mapping[str, str]) -> Design:
    """자유 변수 이름 바꾸기 (포획 방지)."""
    fresh = _fresh_for(d, extra=set(mapping) | set(mapping.values()))
    return _rename(d, mapping, fresh)


def barendregt(d: Design, fresh: FreshNames | None = None) -> Design:
    """모든 속박 변수를 서로 다르고 자유 변수와도 겹치지 않는 이름으로 바꿉니다."""
    fresh = fresh or FreshNames(all_vars(d), prefix="v")

    def walk(t: Design, env: dict[str, str]) -> Design:
        if isinstance(t, PosApp):
            return PosApp(env.get(t.head, t.head), t.name, tuple(walk(a, env) for a in t.args))
        if isinstance(t, Cut):
            return Cut(walk(t.head, env), t.name, tuple(walk(a, env) for a in t.args))
        if isinstance(t, Neg):
            branches = []
            for b in t.branches:
                params = tuple(fresh() for _ in b.params)
                branches.append(Branch(b.name, params, walk(b.body, {**env, **dict(zip(b.params, params))})))
            return Neg(tuple(branches))
        return t

    return walk(d, {})


# ---------------------------------------------------------------
# 분류 / 비교
# ---------------------------------------------------------------

def is_linear(d: Design) -> bool:
    """
    선형성 검사.

    x|a<N1..Nk> 에서 {x}, fv(N1), ..., fv(Nk) 가 서로 겹치지 않아야 하고,
    분기의 매개변수는 서로 달라야 합니다. (재귀적으로 모든 부분항에 대해)
    """
    if isinstance(d, Neg):
        return all(len(set(b.params)) == len(b.params) and is_linear(b.body) for b in d.branches)
    if isinstance(d, (PosApp, Cut)):
        groups = [free_vars(d.head) if isinstance(d, Cut) else frozenset({d.head})]
        groups += [free_vars(a) for a in d.args]
        seen: set[str] = set()
        for g in groups:
            if seen & g:
                return False
            seen |= g
        if isinstance(d, Cut) and not is_linear(d.head):
            return False
        return all(is_linear(a) for a in d.args)
    return True


def alpha_eq(d1: Design, d2: Design) -> bool:
    """속박 변수 이름만 다른 두 디자인을 같다고 봅니다."""

    def eq(a: Design, b: Design, env1: dict[str, int], env2: dict[str, int], level: int = 0) -> bool:
        if type(a) is not type(b):
            return False
        if isinstance(a, (Daimon, Omega)):
            return True
        if isinstance(a, PosApp):
            if a.name != b.name or len(a.args) != len(b.args):
                return False
            if env1.get(a.head, a.head) != env2.get(b.head, b.head):
                return False
            return all(eq(x, y, env1, env2, level) for x, y in zip(a.args, b.args))
        if isinstance(a, Cut):
            if a.name != b.name or len(a.args) != len(b.args):
                return False
            return eq(a.head, b.head, env1, env2, level) and all(eq(x, y, env1, env2, level) for x, y in zip(a.args, b.args))
        if a.names != b.names:
            return False
        for ba, bb in zip(a.branches, b.branches):
            if len(ba.params) != len(bb.params):
                return False
            e1 = {**env1, **{p: level + i for i, p in enumerate(ba.params)}}
            e2 = {**env2, **{p: level + i for i, p in enumerate(bb.params)}}
            if not eq(ba.body, bb.body, e1, e2, level + len(ba.params)):
                return False
        return True

    return eq(d1, d2, {}, {})


def is_cut_free(d: Design) -> bool:
    if isinstance(d, Cut):
        return False
    if isinstance(d, PosApp):
        return all(is_cut_free(a) for a in d.args)
    if isinstance(d, Neg):
        return all(is_cut_free(b.body) for b in d.branches)
    return True


def is_atomic(d: Design) -> bool:
    """원자적: 양수면 자유 변수가 x0 하나 이하, 음수면 닫혀 있음."""
    if isinstance(d, Neg):
        return not free_vars(d)
    return free_vars(d) <= {X0}


@dataclass(frozen=True)
class DesignInfo:
    polarity: Polarity
    atomic: bool
    cut_free: bool


def classify(d: Design) -> DesignInfo:
    return DesignInfo(polarity_of(d), is_atomic(d), is_cut_free(d))


def count_actions(d: Design) -> int:
    """디자인 나무의 행동(action) 수: 양수 노드와 분기 하나하나가 행동 하나."""
    if isinstance(d, Daimon):
        return 1
    if isinstance(d, PosApp):
        return 1 + sum(count_actions(a) for a in d.args)
    if isinstance(d, Cut):
        return 1 + count_actions(d.head) + sum(count_actions(a) for a in d.args)
    if isinstance(d, Neg):
        return sum(1 + count_actions(b.body) for b in d.branches)
    return 0
