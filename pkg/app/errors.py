"""
예외 계층 정의 모듈

라이브러리는 예외를 던지기만 하고, CLI 경계(app/cli/commands.py)에서만
예외를 잡아 종료 코드(exit code)와 오류 JSON으로 변환합니다.

종료 코드:
    0: 성공
    1: 입력/설정 오류 (파싱 실패, 링 불일치, 검증 실패)
    2: 전제 조건 위반 (AV 조건 실패, 공통 인수, CRT 충돌 등)
    3: 예산/상한 소진
"""

from typing import Any, Dict, Optional


class SchinzelError(Exception):
    """모든 도메인 예외의 기본 클래스"""

    exit_code: int = 1

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = details

    def to_dict(self) -> Dict[str, Any]:
        """오류 JSON 블록으로 변환합니다."""
        return {
            "error": type(self).__name__,
            "message": self.message,
            "details": {k: str(v) for k, v in self.details.items()},
        }


# ---- 입력/설정 오류 (exit 1) ----


class InputError(SchinzelError):
    exit_code = 1


class PolySyntaxError(InputError):
    """다항식 표현식 문법 오류 (position: 1부터 시작하는 열 번호)"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (위치 {position})", position=position)
        self.position = position


class UnknownVariable(InputError):
    pass


class RingMismatch(InputError):
    pass


class ConfigError(InputError):
    pass


# ---- 내부 불변식 위반 (exit 1) ----


class VerificationFailure(SchinzelError, AssertionError):
    """
    결과가 자체 재검증을 통과하지 못한 경우 (내부 불변식 위반)

    입력 오류가 아니므로 InputError로 잡히지 않습니다.
    """

    exit_code = 1


# ---- 전제 조건 위반 (exit 2) ----


class PreconditionViolation(SchinzelError):
    exit_code = 2


class Incompatible(PreconditionViolation):
    """CRT 합동식이 공유 소수 거듭제곱에서 충돌"""


class CommonFactor(PreconditionViolation):
    """분수체 위에서 공통 인수(차수 ≥ 1)가 존재"""


class ZeroInput(PreconditionViolation):
    pass


class NotDivisible(PreconditionViolation):
    pass


class AssumptionViolation(PreconditionViolation):
    """AV 조건 위반의 공통 부모 (failing_prime 포함)"""

    def __init__(self, message: str, failing_prime: Any = None, **details: Any):
        super().__init__(message, failing_prime=failing_prime, **details)
        self.failing_prime = failing_prime


class AV1Violation(AssumptionViolation):
    pass


class AV2Violation(AssumptionViolation):
    pass


class AV3Violation(AssumptionViolation):
    pass


# ---- 예산 소진 (exit 3) ----


class BudgetError(SchinzelError):
    exit_code = 3


class BudgetExceeded(BudgetError):
    pass


class CapExceeded(BudgetError):
    pass


class ScanExhausted(BudgetError):
    pass


def exit_code_for(error: Optional[BaseException]) -> int:
    """예외에 해당하는 종료 코드를 반환합니다. 알 수 없는 예외는 1입니다."""
    if error is None:
        return 0
    if isinstance(error, SchinzelError):
        return error.exit_code
    return 1
