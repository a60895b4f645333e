"""
δ 인증서와 AV 판정 레코드
"""

from typing import Any, Dict, List, Optional

from pydantic import Field

from app.polys.poly import Poly
from app.schemas.base import BaseRecord


class BezoutCertificate(BaseRecord):
    """
    Bézout 인증서 ΣV_i·P_i = δ

    Attributes:
        cofactors: Z[y] 위의 여인수 V_1, ..., V_s
        delta: Z의 0이 아닌 원소
        resultant: s = 2일 때의 종결식 Res(P_1, P_2)
        verified: 생성 시점에 항등식을 다시 계산해 확인했는지 여부
    """

    cofactors: List[Poly]
    delta: Any
    resultant: Optional[Any] = None
    verified: bool = False

    @property
    def max_cofactor_degree(self) -> int:
        return max(V.degree for V in self.cofactors)


class DeltaResult(BaseRecord):
    """
    Bézout δ와 차수 제한 격자에서 읽은 최소 δ_D

    Attributes:
        bezout: 분수체 위 확장 유클리드로 얻은 인증서
        minimal_delta: 차수 ≤ D 여인수로 얻을 수 있는 상수들의 생성원 (없으면 None)
        degree_bound_used: 사용한 여인수 차수 상한 D
        divides_bezout: minimal_delta | bezout.delta 확인 결과
    """

    bezout: BezoutCertificate
    minimal_delta: Optional[Any] = None
    degree_bound_used: int
    divides_bezout: Optional[bool] = None


class PrimeEvidence(BaseRecord):
    """
    소수 하나에 대한 잉여류 스캔 기록

    Attributes:
        prime: 검사한 Z의 소원
        residues_scanned: 스캔한 잉여류 수
        good_residue: P_i(m)이 prime으로 나누어지지 않는 첫 잉여류 (없으면 None)
        good_index: 그 잉여류에서 prime으로 나누어지지 않는 다항식의 번호
        all_killed: 모든 잉여류에서 모든 P_i가 prime으로 나누어지는지 여부
    """

    prime: Any
    residues_scanned: int = 0
    good_residue: Optional[Any] = None
    good_index: Optional[int] = None
    all_killed: bool = False


class AvVerdict(BaseRecord):
    """
    값에 대한 가정(AV1/AV2/AV3) 판정 결과

    Attributes:
        assumption: "AV1", "AV2", "AV3" 중 하나
        holds: 가정 성립 여부
        failing_prime: 실패한 경우 그 소원
        method: "residue-scan" 또는 "content"
        evidence: 소원별 스캔 기록
        content: content 검사에 쓴 계수 gcd
    """

    assumption: str
    holds: bool
    failing_prime: Optional[Any] = None
    method: str = "residue-scan"
    evidence: List[PrimeEvidence] = Field(default_factory=list)
    content: Optional[Any] = None
    notes: Dict[str, Any] = Field(default_factory=dict)
