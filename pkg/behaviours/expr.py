"""
expr.py - 행동(behaviour) 식
============================
행동은 무한 집합이므로 직접 만들지 않고, 어떤 연결사로 만들어졌는지를
나타내는 식(나무)으로만 들고 다닙니다. 필요한 유한 정보(incarnation,
방문 가능 경로)는 이 식을 따라 재귀적으로 계산합니다.

  Const(a)        C_a            양수   x0|a<..> 하나로 만든 행동
  DaimonBeh()     {#}            양수
  Up(N)           ↑N             양수   x0|val<n>
  Down(P)         ↓P             음수   val(x).p
  Plus(M, N)      M ⊕ N          양수   x0|p1<m> / x0|p2<n>
  Inj(i, N)       ι_i⟨N⟩         양수   한쪽만 있는 ⊕ (basis 에서 사용)
  Tensor(M, N)    M ⊗ N          양수   x0|pr<m, n>
  Limp(N, P)      N ⊸ P          음수   (N ⊗ P⊥)⊥
  Orth(B)         B⊥             극성 반대
  MuLevel(X, A, n)               양수   A 를 n 번 펼친 근사
  RecVar(X)                      양수   MuLevel 본문 안의 재귀 변수
  Deloc(B, x)     B^x            x0 을 x 로 옮긴 행동

[초보자 안내]
- 모든 식은 frozen dataclass 라서 캐시의 키로 쓸 수 있습니다.
- 만들 때 극성을 검사합니다. 예를 들어 Plus 의 양쪽은 음수 행동이어야
  합니다. 어기면 PolarityError.
- ⊕⁺, ⊗⁺, ⊸⁺ 는 plus_pos / tensor_pos / limp_pos 로 만듭니다.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Union

from core.errors import BehaviourError, PolarityError
from core.syntax import RESERVED_ARITIES, Polarity, Signature


def _expect(expr: "BehaviourExpr", polarity: Polarity, where: str) -> None:
    if polarity_of_expr(expr) is not polarity:
        raise PolarityError(f"{where}: {polarity.value} 극성 행동이 필요합니다 ({render_behaviour(expr)})")


@dataclass(frozen=True)
class Const:
    name: str
    arity: int = 0

    def __post_init__(self):
        if self.name in RESERVED_ARITIES:
            raise BehaviourError(f"예약 이름 '{self.name}' 으로는 상수 행동을 만들 수 없습니다.")
        if self.arity < 0:
            raise BehaviourError(f"인자 개수가 음수입니다: {self.arity}")


@dataclass(frozen=True)
class DaimonBeh:
    pass


@dataclass(frozen=True)
class Up:
    body: "BehaviourExpr"

    def __post_init__(self):
        _expect(self.body, Polarity.NEGATIVE, "up")


@dataclass(frozen=True)
class Down:
    body: "BehaviourExpr"

    def __post_init__(self):
        _expect(self.body, Polarity.POSITIVE, "down")


@dataclass(frozen=True)
class Plus:
    left: "BehaviourExpr"
    right: "BehaviourExpr"

    def __post_init__(self):
        _expect(self.left, Polarity.NEGATIVE, "(+)")
        _expect(self.right, Polarity.NEGATIVE, "(+)")


@dataclass(frozen=True)
class Inj:
    index: int
    body: "BehaviourExpr"

    def __post_init__(self):
        if self.index not in (1, 2):
            raise BehaviourError(f"주입 번호는 1 또는 2 입니다: {self.index}")
        _expect(self.body, Polarity.NEGATIVE, f"inj{self.index}")


@dataclass(frozen=True)
class Tensor:
    left: "BehaviourExpr"
    right: "BehaviourExpr"

    def __post_init__(self):
        _expect(self.left, Polarity.NEGATIVE, "(x)")
        _expect(self.right, Polarity.NEGATIVE, "(x)")


@dataclass(frozen=True)
class Limp:
    left: "BehaviourExpr"
    right: "BehaviourExpr"

    def __post_init__(self):
        _expect(self.left, Polarity.NEGATIVE, "-o 왼쪽")
        _expect(self.right, Polarity.POSITIVE, "-o 오른쪽")


@dataclass(frozen=True)
class Orth:
    body: "BehaviourExpr"


@dataclass(frozen=True)
class RecVar:
    name: str


@dataclass(frozen=True)
class MuLevel:
    """
    μX.A 의 n 단계 근사 φⁿ(seed).

    seed 는 보통 {#} 이고, seeded=True 이면서 basis 가 있으면 basis 를
    씨앗으로 씁니다 (순수성 검사용).
    """

    var: str
    body: "BehaviourExpr"
    level: int
    basis: "BehaviourExpr | None" = None
    seeded: bool = False

    def __post_init__(self):
        if self.level < 0:
            raise BehaviourError(f"단계(level)는 0 이상이어야 합니다: {self.level}")
        _expect(self.body, Polarity.POSITIVE, "mu")


@dataclass(frozen=True)
class Deloc:
    body: "BehaviourExpr"
    address: str


BehaviourExpr = Union[Const, DaimonBeh, Up, Down, Plus, Inj, Tensor, Limp, Orth, RecVar, MuLevel, Deloc]

DAIMON_BEH = DaimonBeh()


def polarity_of_expr(expr: BehaviourExpr) -> Polarity:
    if isinstance(expr, (Down, Limp)):
        return Polarity.NEGATIVE
    if isinstance(expr, Orth):
        return polarity_of_expr(expr.body).flip()
    if isinstance(expr, Deloc):
        return polarity_of_expr(expr.body)
    return Polarity.POSITIVE


# ---------------------------------------------------------------
# 생성 도우미
# ---------------------------------------------------------------

def const_behaviour(name: str, arity: int = 0) -> Const:
    return Const(name, arity)


def plus_pos(left: BehaviourExpr, right: BehaviourExpr) -> Plus:
    """A ⊕⁺ B = ↓A ⊕ ↓B"""
    return Plus(Down(left), Down(right))


def tensor_pos(left: BehaviourExpr, right: BehaviourExpr) -> Tensor:
    """A ⊗⁺ B = ↓A ⊗ ↓B"""
    return Tensor(Down(left), Down(right))


def limp_pos(left: BehaviourExpr, right: BehaviourExpr) -> Up:
    """P ⊸⁺ Q = ↑(↓P ⊸ Q)"""
    return Up(Limp(Down(left), right))


def bool_behaviour(name: str = "b") -> Plus:
    c = Const(name)
    return plus_pos(c, c)


# ---------------------------------------------------------------
# 구조 연산
# ---------------------------------------------------------------

def subst_var(expr: BehaviourExpr, var: str, value: BehaviourExpr) -> BehaviourExpr:
    """재귀 변수 var 자리에 value 를 넣습니다. 같은 이름의 MuLevel 안쪽은 건드리지 않습니다."""
    match expr:
        case RecVar(name):
            return value if name == var else expr
        case Up(body):
            return Up(subst_var(body, var, value))
        case Down(body):
            return Down(subst_var(body, var, value))
        case Plus(left, right):
            return Plus(subst_var(left, var, value), subst_var(right, var, value))
        case Inj(index, body):
            return Inj(index, subst_var(body, var, value))
        case Tensor(left, right):
            return Tensor(subst_var(left, var, value), subst_var(right, var, value))
        case Limp(left, right):
            return Limp(subst_var(left, var, value), subst_var(right, var, value))
        case Orth(body):
            return Orth(subst_var(body, var, value))
        case Deloc(body, address):
            return Deloc(subst_var(body, var, value), address)
        case MuLevel():
            if expr.var == var:
                return expr
            return replace(expr, body=subst_var(expr.body, var, value))
    return expr


def unfold(m: MuLevel) -> BehaviourExpr:
    """φⁿ(seed): 본문을 level 번 펼칩니다."""
    current: BehaviourExpr = m.basis if (m.seeded and m.basis is not None) else DAIMON_BEH
    for _ in range(m.level):
        current = subst_var(m.body, m.var, current)
    return current


def _map_mu(expr: BehaviourExpr, fn) -> BehaviourExpr:
    match expr:
        case Up(body):
            return Up(_map_mu(body, fn))
        case Down(body):
            return Down(_map_mu(body, fn))
        case Plus(left, right):
            return Plus(_map_mu(left, fn), _map_mu(right, fn))
        case Inj(index, body):
            return Inj(index, _map_mu(body, fn))
        case Tensor(left, right):
            return Tensor(_map_mu(left, fn), _map_mu(right, fn))
        case Limp(left, right):
            return Limp(_map_mu(left, fn), _map_mu(right, fn))
        case Orth(body):
            return Orth(_map_mu(body, fn))
        case Deloc(body, address):
            return Deloc(_map_mu(body, fn), address)
        case MuLevel():
            return fn(replace(expr, body=_map_mu(expr.body, fn)))
    return expr


def with_level(expr: BehaviourExpr, level: int | None) -> BehaviourExpr:
    """모든 MuLevel 의 단계를 level 로 바꿉니다. None 이면 그대로."""
    if level is None:
        return expr
    if level < 0:
        raise BehaviourError(f"단계(level)는 0 이상이어야 합니다: {level}")
    return _map_mu(expr, lambda m: replace(m, level=level))


def with_basis_seeds(expr: BehaviourExpr) -> BehaviourExpr:
    """basis 를 아는 MuLevel 은 {#} 대신 basis 에서 펼치도록 바꿉니다."""
    return _map_mu(expr, lambda m: replace(m, seeded=True))


def signature_of(expr: BehaviourExpr) -> Signature:
    """식에 나오는 상수 이름과 예약 이름으로 시그니처를 만듭니다."""
    sig = Signature()

    def walk(e: BehaviourExpr) -> None:
        match e:
            case Const(name, arity):
                sig.declare(name, arity)
            case Up(body) | Down(body) | Inj(_, body) | Orth(body) | Deloc(body, _):
                walk(body)
            case Plus(left, right) | Tensor(left, right) | Limp(left, right):
                walk(left)
                walk(right)
            case MuLevel():
                walk(e.body)
                if e.basis is not None:
                    walk(e.basis)

    walk(expr)
    return sig


def render_behaviour(expr: BehaviourExpr) -> str:
    match expr:
        case Const(name, _):
            return f"C_{name}"
        case DaimonBeh():
            return "#"
        case Up(body):
            return f"up({render_behaviour(body)})"
        case Down(body):
            return f"down({render_behaviour(body)})"
        case Plus(left, right):
            return f"({render_behaviour(left)} (+) {render_behaviour(right)})"
        case Inj(index, body):
            return f"inj{index}({render_behaviour(body)})"
        case Tensor(left, right):
            return f"({render_behaviour(left)} (x) {render_behaviour(right)})"
        case Limp(left, right):
            return f"({render_behaviour(left)} -o {render_behaviour(right)})"
        case Orth(body):
            return f"orth({render_behaviour(body)})"
        case RecVar(name):
            return name
        case MuLevel():
            return f"mu^{expr.level} {expr.var}. {render_behaviour(expr.body)}"
        case Deloc(body, address):
            return f"{render_behaviour(body)}^{address}"
    raise BehaviourError(f"알 수 없는 행동 식입니다: {expr!r}")
