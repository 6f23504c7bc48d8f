"""
core 패키지 - 디자인의 문법과 구조 연산
========================================
- syntax.py : 디자인 항, 시그니처, 자유 변수, 치환, 선형성, 알파 동치
- parser.py : 디자인 텍스트 해석/출력
- errors.py : 엔진 전체의 예외 계층
"""

from core.errors import LudicsError
from core.parser import parse_design, parse_source, render_design
from core.syntax import (
    DAIMON,
    EMPTY,
    OMEGA,
    X0,
    Branch,
    Cut,
    Daimon,
    Design,
    Neg,
    Omega,
    PosApp,
    Signature,
    alpha_eq,
    classify,
    free_vars,
    is_linear,
    substitute,
)

__all__ = [
    "LudicsError",
    "parse_design",
    "parse_source",
    "render_design",
    "DAIMON",
    "EMPTY",
    "OMEGA",
    "X0",
    "Branch",
    "Cut",
    "Daimon",
    "Design",
    "Neg",
    "Omega",
    "PosApp",
    "Signature",
    "alpha_eq",
    "classify",
    "free_vars",
    "is_linear",
    "substitute",
]
