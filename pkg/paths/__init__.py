"""
paths 패키지 - 위치가 있는 행동, 뷰, 경로
==========================================
- actions.py     : LocatedAction, 행동 열 텍스트/JSON 형식, canonical 이름
- views.py       : dual, view_of, anti_view_of, is_path, 자명한 뷰, 괄호 맞춤
- forest.py      : locate (행동 숲), paths_of, is_path_of, DOT 출력
- shuffle.py     : 셔플 / 반셔플
- completion.py  : 완성 디자인 ⌈s⌉, 뷰 집합 → 디자인
- interaction.py : 상호작용 경로 ⟨d ← e⟩
"""

from paths.actions import (
    DAIMON_ACTION,
    LocatedAction,
    Seq,
    canonical,
    neg,
    parse_seq,
    pos,
    render_seq,
    seq_from_json,
    seq_to_json,
)
from paths.completion import completion, design_from_views, skeleton
from paths.forest import LocatedForest, is_path_of, locate, paths_of, seq_to_dot, to_dot
from paths.interaction import NOT_ORTHOGONAL, NotOrthogonal, interaction_path
from paths.shuffle import anti_shuffle, shuffle
from paths.views import (
    anti_view_of,
    dual,
    is_aj_seq,
    is_path,
    is_well_bracketed,
    trivial_view_of,
    view_of,
)

__all__ = [
    "DAIMON_ACTION",
    "LocatedAction",
    "Seq",
    "canonical",
    "neg",
    "parse_seq",
    "pos",
    "render_seq",
    "seq_from_json",
    "seq_to_json",
    "completion",
    "design_from_views",
    "skeleton",
    "LocatedForest",
    "is_path_of",
    "locate",
    "paths_of",
    "seq_to_dot",
    "to_dot",
    "NOT_ORTHOGONAL",
    "NotOrthogonal",
    "interaction_path",
    "anti_shuffle",
    "shuffle",
    "anti_view_of",
    "dual",
    "is_aj_seq",
    "is_path",
    "is_well_bracketed",
    "trivial_view_of",
    "view_of",
]
