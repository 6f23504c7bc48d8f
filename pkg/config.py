"""
config.py - 프로젝트 설정 관리
================================
설정값은 환경변수 또는 .env 파일에서 읽습니다.
CLI 옵션(--level, --max-len ...)이 주어지면 그 값이 우선합니다.

[초보자 안내]
- .env.example 을 .env 로 복사한 뒤 값을 바꾸면 됩니다.
- 모든 값에는 기본값이 있으므로 .env 없이도 바로 실행됩니다.
- LUDICS_LEVEL / LUDICS_MAX_LEN 은 "얼마나 깊이 탐색할지" 를 정하는 한계값입니다.
  값이 클수록 정확하지만 느려집니다.
"""

import os

from dotenv import load_dotenv

load_dotenv()


def _get(key: str, default: str = "") -> str:
    """환경변수 / .env 파일에서 설정값을 찾습니다."""
    return os.getenv(key, default)


def _flag(key: str, default: str) -> bool:
    return _get(key, default).strip().lower() in ("1", "true", "yes", "on")


class Config:
    """모든 설정값을 한 곳에서 관리하는 클래스"""

    # --- 탐색 한계 ---
    LEVEL: int = int(_get("LUDICS_LEVEL", "3"))          # 재귀 타입 근사 단계
    MAX_LEN: int = int(_get("LUDICS_MAX_LEN", "16"))     # 경로 최대 길이
    FUEL: int = int(_get("LUDICS_FUEL", "10000"))        # 정규화 최대 단계 수
    SEED: int = int(_get("LUDICS_SEED", "0"))            # 코퍼스 생성 시드
    MAX_DESIGNS: int = int(_get("LUDICS_MAX_DESIGNS", "20000"))  # incarnation 나열 상한

    # --- 입력 해석 ---
    STRICT_LINEAR: bool = _flag("LUDICS_STRICT_LINEAR", "true")

    # --- 출력 ---
    COLOR: bool = _flag("LUDICS_COLOR", "true")
    LOG_LEVEL: str = _get("LUDICS_LOG_LEVEL", "WARNING").upper()

    @classmethod
    def reload(cls) -> None:
        """환경변수를 다시 읽어 클래스 속성을 갱신합니다. (테스트에서 사용)"""
        cls.LEVEL = int(_get("LUDICS_LEVEL", "3"))
        cls.MAX_LEN = int(_get("LUDICS_MAX_LEN", "16"))
        cls.FUEL = int(_get("LUDICS_FUEL", "10000"))
        cls.SEED = int(_get("LUDICS_SEED", "0"))
        cls.MAX_DESIGNS = int(_get("LUDICS_MAX_DESIGNS", "20000"))
        cls.STRICT_LINEAR = _flag("LUDICS_STRICT_LINEAR", "true")
        cls.COLOR = _flag("LUDICS_COLOR", "true")
        cls.LOG_LEVEL = _get("LUDICS_LOG_LEVEL", "WARNING").upper()

    @classmethod
    def validate(cls) -> list[str]:
        """설정값이 허용 범위 안에 있는지 검증합니다."""
        errors = []
        if cls.LEVEL < 0:
            errors.append("LUDICS_LEVEL 은 0 이상이어야 합니다.")
        if cls.MAX_LEN < 1:
            errors.append("LUDICS_MAX_LEN 은 1 이상이어야 합니다.")
        if cls.FUEL < 1:
            errors.append("LUDICS_FUEL 은 1 이상이어야 합니다.")
        if cls.MAX_DESIGNS < 1:
            errors.append("LUDICS_MAX_DESIGNS 는 1 이상이어야 합니다.")
        if cls.LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            errors.append(f"LUDICS_LOG_LEVEL 값이 올바르지 않습니다: {cls.LOG_LEVEL}")
        return errors
