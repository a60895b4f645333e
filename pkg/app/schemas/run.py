"""
실행 설정과 CLI 출력 봉투(envelope) 모델
"""

from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import Field, ValidationError, field_validator

from app.config import SchinzelSettings, settings
from app.errors import ConfigError
from app.schemas.base import BaseRecord

# 배율이 적용되는 설정 필드
SCALED_CAPS = (
    "FACTOR_BUDGET",
    "PRIME_SEARCH_BUDGET",
    "LATTICE_CAP",
    "KRONECKER_BUDGET",
    "FIELD_FACTOR_BUDGET",
    "RESIDUE_CAP",
    "PROFILE_CAP",
    "LAMBDA_HEIGHT",
    "FALLBACK_DEGREE",
    "FALLBACK_HEIGHT",
    "SCAN_CAP",
)

SCHEMA_VERSION = 1


class RunConfig(BaseRecord):
    """
    한 번의 실행에 적용되는 예산과 시드

    Attributes:
        budget_scale: 모든 상한에 곱해지는 양의 유리수 배율
        seed: 무작위 표본 추출 시드
        caps: 배율이 적용된 상한 (설정 필드 이름 → 값)
    """

    budget_scale: Fraction
    seed: int = 0
    caps: Dict[str, int] = Field(default_factory=dict)

    @field_validator("budget_scale")
    @classmethod
    def check_scale(cls, value: Fraction) -> Fraction:
        if value <= 0:
            raise ValueError(f"배율은 양수여야 합니다: {value}")
        return value

    @field_validator("caps")
    @classmethod
    def check_caps(cls, value: Dict[str, int]) -> Dict[str, int]:
        for name, cap in value.items():
            if cap <= 0:
                raise ValueError(f"{name} 상한은 양수여야 합니다: {cap}")
        return value

    @classmethod
    def from_settings(
        cls,
        source: SchinzelSettings = settings,
        budget_scale: Optional[str] = None,
        seed: Optional[int] = None,
    ) -> "RunConfig":
        """
        설정과 CLI 플래그로부터 실행 설정을 만듭니다.

        Raises:
            ConfigError: 배율이나 상한이 양수가 아닌 경우
        """
        try:
            scale = (
                source.BUDGET_SCALE
                if budget_scale is None
                else Fraction(str(budget_scale).strip())
            )
            caps = {
                name: max(1, int(getattr(source, name) * scale)) for name in SCALED_CAPS
            }
            return cls(
                budget_scale=scale,
                seed=source.SEED if seed is None else seed,
                caps=caps,
            )
        except (ValueError, ZeroDivisionError, ValidationError) as e:
            raise ConfigError(f"잘못된 실행 설정입니다: {str(e)}") from e

    def activate(self, target: SchinzelSettings = settings) -> None:
        """전역 설정에 배율과 시드를 반영합니다."""
        target.BUDGET_SCALE = self.budget_scale
        target.SEED = self.seed


class CommandResult(BaseRecord):
    """
    CLI JSON 출력 봉투

    Attributes:
        schema_version: 출력 스키마 버전 (JSON 키 "schema")
        command: 실행한 명령
        ring: 값 환 이름
        inputs: 입력 다항식 (렌더링 문자열)
        result: 명령 결과 레코드
        verification: 독립 재검증 블록
        budget_report: 적용된 상한
    """

    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    command: str
    ring: Optional[str] = None
    inputs: List[str] = Field(default_factory=list)
    result: Any = None
    verification: Dict[str, Any] = Field(default_factory=dict)
    budget_report: Dict[str, Any] = Field(default_factory=dict)

    def to_json(self, indent: Optional[int] = 2, ascending: bool = False) -> str:
        return self.model_dump_json(
            by_alias=True, indent=indent, context={"ascending": ascending}
        )
