"""
datatypes 패키지 - 데이터 패턴, 해석, 표준 값
=============================================
- patterns.py  : DataPattern, 패턴 문법, is_steady, 표준 패턴(Bool, Nat, List, Tree)
- interpret.py : interpret, basis, steadiness, kleene_monotone_report
- encoders.py  : encode_bool / encode_nat / encode_list / encode_tree, decode_nat
"""

from datatypes.encoders import decode_bool, decode_nat, encode_bool, encode_list, encode_nat, encode_tree
from datatypes.interpret import (
    MonotoneReport,
    Steadiness,
    basis,
    interpret,
    kleene_monotone_report,
    steadiness,
)
from datatypes.patterns import (
    STANDARD_PATTERNS,
    DataPattern,
    Mu,
    Name,
    PlusP,
    TensorP,
    Var,
    is_steady,
    parse_pattern,
    render_pattern,
    standard_pattern,
)

__all__ = [
    "decode_bool",
    "decode_nat",
    "encode_bool",
    "encode_list",
    "encode_nat",
    "encode_tree",
    "MonotoneReport",
    "Steadiness",
    "basis",
    "interpret",
    "kleene_monotone_report",
    "steadiness",
    "STANDARD_PATTERNS",
    "DataPattern",
    "Mu",
    "Name",
    "PlusP",
    "TensorP",
    "Var",
    "is_steady",
    "parse_pattern",
    "render_pattern",
    "standard_pattern",
]
