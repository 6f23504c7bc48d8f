"""테스트 공용 도우미: 디자인 해석 함수, hypothesis 전략, 설정 고정"""

from __future__ import annotations

import pytest
from hypothesis import strategies as st

from config import Config
from core.parser import parse_design
from behaviours.candidates import enumerate_designs

SMALL_SIGNATURE = {"a": 0, "b": 1}

_BOUNDS = {"LEVEL": 3, "MAX_LEN": 16, "FUEL": 10000, "SEED": 0, "MAX_DESIGNS": 20000, "STRICT_LINEAR": True}
for _key, _value in _BOUNDS.items():
    setattr(Config, _key, _value)

POSITIVE_DESIGNS = enumerate_designs(SMALL_SIGNATURE, 4, positive=True)
NEGATIVE_DESIGNS = enumerate_designs(SMALL_SIGNATURE, 4, positive=False)

positive_designs = st.sampled_from(POSITIVE_DESIGNS)
negative_designs = st.sampled_from(NEGATIVE_DESIGNS)


def d(text: str):
    return parse_design(text)


@pytest.fixture
def restore_config():
    """CLI 가 바꾼 Config 값을 테스트가 끝나면 되돌립니다."""
    yield
    for key, value in _BOUNDS.items():
        setattr(Config, key, value)
