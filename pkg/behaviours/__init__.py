"""
behaviours 패키지 - 행동(behaviour) 식, incarnation, 방문 가능 경로, 성질 검사
==============================================================================
- expr.py        : 행동 식 (C_a, ↑, ↓, ⊕, ⊗, ⊸, ⊥, μ 근사)
- parser.py      : 행동 식 텍스트 문법
- visitable.py   : 방문 가능 경로 V_B, 경로 기반 멤버십
- incarnation.py : |B|, member, ortho_member, |d|_B
- checks.py      : 정규성 / 순수성 검사 (CheckReport)
- candidates.py  : 작은 디자인 나열, 내부 완전성 확인
"""

from behaviours.candidates import ClosureReport, closure_report, enumerate_designs
from behaviours.checks import (
    CheckReport,
    RegularityForms,
    Verdict,
    check_pure,
    check_quasi_pure,
    check_regular,
    regularity_forms,
)
from behaviours.expr import (
    DAIMON_BEH,
    BehaviourExpr,
    Const,
    DaimonBeh,
    Deloc,
    Down,
    Inj,
    Limp,
    MuLevel,
    Orth,
    Plus,
    RecVar,
    Tensor,
    Up,
    bool_behaviour,
    const_behaviour,
    limp_pos,
    plus_pos,
    polarity_of_expr,
    render_behaviour,
    signature_of,
    tensor_pos,
    unfold,
    with_level,
)
from behaviours.incarnation import (
    IncarnationSet,
    incarnate_design,
    incarnation,
    member,
    oracle_visitable_paths,
    ortho_member,
)
from behaviours.parser import parse_behaviour
from behaviours.visitable import explore, is_visitable, member_by_paths, visitable_paths

__all__ = [
    "ClosureReport",
    "closure_report",
    "enumerate_designs",
    "CheckReport",
    "RegularityForms",
    "Verdict",
    "check_pure",
    "check_quasi_pure",
    "check_regular",
    "regularity_forms",
    "DAIMON_BEH",
    "BehaviourExpr",
    "Const",
    "DaimonBeh",
    "Deloc",
    "Down",
    "Inj",
    "Limp",
    "MuLevel",
    "Orth",
    "Plus",
    "RecVar",
    "Tensor",
    "Up",
    "bool_behaviour",
    "const_behaviour",
    "limp_pos",
    "plus_pos",
    "polarity_of_expr",
    "render_behaviour",
    "signature_of",
    "tensor_pos",
    "unfold",
    "with_level",
    "IncarnationSet",
    "incarnate_design",
    "incarnation",
    "member",
    "oracle_visitable_paths",
    "ortho_member",
    "parse_behaviour",
    "explore",
    "is_visitable",
    "member_by_paths",
    "visitable_paths",
]
