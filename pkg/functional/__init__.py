"""
functional 패키지 - 함수형 타입 (데이터 ⊕⁺ ⊗⁺ ⊸⁺) 과 순수성
============================================================
- types.py     : FuncType, 타입 문법, compile_type, 문맥, 코퍼스
- criterion.py : 문법적 순수성 기준 (Decomposition / PURE)
- witness.py   : 순수하지 않은 타입의 증거 경로와 디자인, check_functional
"""

from functional.criterion import PURE, Decomposition, Pure, impurity_criterion
from functional.types import (
    BOOL,
    HOLE,
    UNIT,
    Context,
    Data,
    FuncType,
    LimpF,
    PlusF,
    Step,
    TensorF,
    compile_type,
    corpus,
    data,
    parse_functype,
    plug,
    render_context,
    render_type,
    sample_corpus,
    subterms,
)
from functional.witness import (
    FunctionalReport,
    ImpurityWitness,
    check_functional,
    impurity_witness,
    validate_witness,
    witness_path,
)

__all__ = [
    "PURE",
    "Decomposition",
    "Pure",
    "impurity_criterion",
    "BOOL",
    "HOLE",
    "UNIT",
    "Context",
    "Data",
    "FuncType",
    "LimpF",
    "PlusF",
    "Step",
    "TensorF",
    "compile_type",
    "corpus",
    "data",
    "parse_functype",
    "plug",
    "render_context",
    "render_type",
    "sample_corpus",
    "subterms",
    "FunctionalReport",
    "ImpurityWitness",
    "check_functional",
    "impurity_witness",
    "validate_witness",
    "witness_path",
]
