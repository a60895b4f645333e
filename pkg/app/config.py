"""
실행 설정 모듈

이 모듈은 예산(budget), 스캔 상한(cap) 및 로깅 설정을 환경 변수에서 읽어옵니다.
모든 기본 상한은 SCHINZEL_BUDGET_SCALE 배율이 곱해져 RunConfig로 전달됩니다.
"""

from fractions import Fraction
from typing import Any

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class SchinzelSettings(BaseSettings):
    """
    라이브러리/CLI 공통 설정
    """

    model_config = SettingsConfigDict(
        extra="ignore",
        arbitrary_types_allowed=True,
        env_prefix="SCHINZEL_",  # 환경 변수 접두사 설정
        env_file=".env",
    )

    # 공통 설정
    BUDGET_SCALE: Fraction = Field(
        default=Fraction(1), description="모든 기본 상한에 곱해지는 양의 유리수 배율"
    )
    LOG_LEVEL: str = Field(default="INFO", description="로깅 레벨")
    SEED: int = Field(default=0, description="무작위 표본 추출용 시드")

    # 정수 연산 예산
    FACTOR_BUDGET: int = Field(default=200_000, description="Pollard rho 반복 예산")
    TRIAL_DIVISION_BOUND: int = Field(default=1_000_000, description="시행 나눗셈 상한")
    PRIME_SEARCH_BUDGET: int = Field(
        default=100_000, description="등차수열 소수 탐색 후보 수 상한"
    )
    LATTICE_CAP: int = Field(default=10_000, description="HNF 행렬 원소 수 상한")

    # 다항식 연산 예산
    KRONECKER_DEGREE_CAP: int = Field(default=8, description="Kronecker 인수분해 차수 상한")
    KRONECKER_BUDGET: int = Field(default=200_000, description="Kronecker 후보 보간 횟수 상한")
    FIELD_FACTOR_BUDGET: int = Field(
        default=100_000, description="유한체 인수분해 연산 예산"
    )
    RESIDUE_CAP: int = Field(default=100_000, description="잉여류 열거 개수 상한")

    # 탐색 상한
    PROFILE_CAP: int = Field(default=1_000_000, description="정수 gcd 프로파일 |δ| 상한")
    LAMBDA_HEIGHT: int = Field(default=4, description="λ 구조 탐색 높이")
    FALLBACK_DEGREE: int = Field(default=3, description="전수 탐색 m(u) 최대 차수")
    FALLBACK_HEIGHT: int = Field(default=3, description="전수 탐색 m(u) 계수 높이")
    SCAN_CAP: int = Field(default=100, description="특수화 스캔 상한")

    @field_validator("BUDGET_SCALE", mode="before")
    @classmethod
    def parse_scale(cls, value: Any) -> Fraction:
        """'3/2', '0.5', 2 같은 값을 양의 유리수로 변환합니다."""
        scale = Fraction(str(value).strip())
        if scale <= 0:
            raise ValueError(f"BUDGET_SCALE은 양수여야 합니다: {value}")
        return scale

    def scaled(self, name: str) -> int:
        """
        배율이 적용된 상한 값을 반환합니다.

        Args:
            name: 설정 필드 이름 (예: "SCAN_CAP")

        Returns:
            int: 최소 1 이상의 정수 상한
        """
        return max(1, int(getattr(self, name) * self.BUDGET_SCALE))


# 설정 인스턴스 생성
settings = SchinzelSettings()
