"""
reduction 패키지 - 상호작용과 순서
===================================
- normalizer.py : step / normalize / is_orthogonal
- orders.py     : 안정 순서(⊑)와 관찰 순서(⪯)
"""

from reduction.normalizer import (
    NO_HEAD_CUT,
    NormalizeOutcome,
    Status,
    is_orthogonal,
    normalize,
    step,
)
from reduction.orders import obs_leq, stable_leq

__all__ = [
    "NO_HEAD_CUT",
    "NormalizeOutcome",
    "Status",
    "is_orthogonal",
    "normalize",
    "step",
    "obs_leq",
    "stable_leq",
]
