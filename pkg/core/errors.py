"""
errors.py - 루딕스 엔진 예외 계층
==================================
엔진 전체에서 발생하는 오류를 한 곳에 모아 둔 모듈입니다.

[초보자 안내]
- 모든 예외는 LudicsError 를 상속합니다.
  CLI(main.py)는 LudicsError 를 잡아서 종료 코드 2 로 바꿉니다.
- LudicsError 는 ValueError 의 하위 클래스이므로
  "잘못된 입력값" 으로 취급하는 기존 코드와도 잘 어울립니다.
"""


class LudicsError(ValueError):
    """엔진에서 발생하는 모든 오류의 부모 클래스"""


class DesignSyntaxError(LudicsError):
    """디자인/경로/패턴 텍스트를 해석하지 못했을 때"""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" (줄 {line}, 열 {column})" if line is not None else ""
        super().__init__(f"{message}{where}")


class ArityError(LudicsError):
    """이름의 인자 개수가 시그니처와 맞지 않을 때"""


class UndeclaredNameError(LudicsError):
    """시그니처에 없는 이름을 사용했을 때"""


class DuplicateBranchError(LudicsError):
    """음수 디자인의 합(sum)에 같은 이름의 분기가 두 번 나올 때"""


class LinearityError(LudicsError):
    """선형성(변수는 한 곳에서만 사용) 조건을 어겼을 때"""


class SubstitutionError(LudicsError):
    """치환 대상이 속박 변수일 때"""


class PolarityError(LudicsError):
    """양/음 극성이 기대와 다를 때"""


class NotAtomicError(PolarityError):
    """원자적(atomic) 디자인이 필요한 곳에 그렇지 않은 디자인이 왔을 때"""


class CutPresentError(LudicsError):
    """컷이 없어야 하는 연산에 컷이 포함된 디자인이 들어왔을 때"""


class NotAPathError(LudicsError):
    """행동 열(sequence)이 경로 조건을 만족하지 않을 때"""


class IncompatibleError(LudicsError):
    """멀티 디자인 두 개가 호환(compatible)되지 않을 때"""


class NotAMemberError(LudicsError):
    """디자인이 주어진 행동(behaviour)에 속하지 않을 때"""


class BehaviourError(LudicsError):
    """행동 식의 극성/구조가 올바르지 않을 때"""


class PatternError(LudicsError):
    """데이터 패턴이 닫혀 있지 않거나 형식이 잘못되었을 때"""


class NotSteadyError(PatternError):
    """steady 패턴이 필요한 곳에 그렇지 않은 패턴이 왔을 때"""


class WitnessValidationError(LudicsError):
    """생성한 불순(impurity) 증거 경로가 검증을 통과하지 못했을 때"""


class MultiDesignError(LudicsError):
    """멀티 디자인 조건(자유 변수와 자리의 분리 등)을 어겼을 때"""
