"""
multidesign 패키지 - 멀티 디자인과 상호작용 열
===============================================
- multi.py  : MultiDesign, compatible, cut, normalize_multi,
              interaction_sequence, restrict
- laws.py   : 정규화 / 경로 결합 법칙 검사
- parser.py : .mlud 파일 해석
"""

from multidesign.laws import (
    cut_associates,
    orthogonal_triples,
    path_sides,
    paths_associate,
    reaches_daimon,
    same_multi,
    substitution_associates,
    with_redexes,
)
from multidesign.multi import (
    EMPTY_MULTI,
    Compatibility,
    MultiDesign,
    compatible,
    cut,
    interaction_sequence,
    normalize_multi,
    restrict,
)
from multidesign.parser import parse_multi

__all__ = [
    "EMPTY_MULTI",
    "Compatibility",
    "MultiDesign",
    "compatible",
    "cut",
    "interaction_sequence",
    "normalize_multi",
    "restrict",
    "cut_associates",
    "orthogonal_triples",
    "path_sides",
    "paths_associate",
    "reaches_daimon",
    "same_multi",
    "substitution_associates",
    "with_redexes",
    "parse_multi",
]
