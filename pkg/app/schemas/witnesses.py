"""
증인(witness)과 분석 결과 레코드
"""

from typing import Any, Dict, List, Optional

from pydantic import Field

from app.schemas.base import BaseRecord


class ValueCheck(BaseRecord):
    """
    값 P_1(m), ..., P_s(m)의 gcd 검증 블록

    Attributes:
        gcd: Z에서 정규화된 값들의 gcd
        rational_gcd: ℤ[u]에서 ℚ[u] 위 gcd (모닉)
        content_gcd: ℤ[u]에서 정수 content의 gcd
        coprime: Z의 의미에서 공통 인수가 없는지 여부
    """

    gcd: Any
    rational_gcd: Optional[Any] = None
    content_gcd: Optional[int] = None
    coprime: bool


class MonomialConditions(BaseRecord):
    """
    m(u)의 두 단항식 μ₁·u^a, μ₂·u^b에 대한 조건 보고

    Attributes:
        monomials: 조건을 만족하는 (계수, 차수) 쌍 (없으면 빈 목록)
        congruence: μ₂ ≡ 1 (mod μ₁)
        degrees_above: min(a, b) > max deg_u P_i
        holds: 두 조건을 모두 만족하는 단항식 쌍이 있는지
    """

    monomials: List[List[int]] = Field(default_factory=list)
    congruence: bool = False
    degrees_above: bool = False
    holds: bool = False


class CoprimeWitness(BaseRecord):
    """
    서로소 값 증인

    Attributes:
        m: Z의 원소 (ℤ[u]에서는 m(u))
        values: P_1(m), ..., P_s(m)
        check: 값 gcd 검증 블록
        method: "crt", "scan", "structured", "fallback", "brute-force", "trivial" 중 하나
        congruences: CRT에 쓴 (소원, 잉여, 다항식 번호) 기록
        candidates_tried: 탐색한 후보 수
        monomial_conditions: 구조 탐색 증인의 단항식 조건 보고
    """

    m: Any
    values: List[Any]
    check: ValueCheck
    method: str
    congruences: List[List[Any]] = Field(default_factory=list)
    candidates_tried: int = 0
    monomial_conditions: Optional[MonomialConditions] = None


class GcdProfile(BaseRecord):
    """
    한 주기의 값 gcd 표 m ↦ d_m

    Attributes:
        delta: 주기 δ
        table: 잉여류 대표원 m에서 정규화된 d_m으로의 대응
        periodicity_checks: 주기성 확인 횟수 (ℓ ∈ {-2, -1, 1, 2})
    """

    delta: Any
    table: Dict[Any, Any]
    periodicity_checks: int = 0


class DStar(BaseRecord):
    """
    D* = {d_m}와 d* = gcd(D*)

    Attributes:
        divisors: 정규화된 d_m 값들 (중복 제거, 정렬)
        d_star: 모든 원소의 gcd
        gcd_stable: 임의 두 원소의 gcd가 다시 원소인지
        av2_holds: AV2 판정 결과 (d*가 단원인 것과 동치)
    """

    divisors: List[Any]
    d_star: Any
    gcd_stable: bool
    av2_holds: bool


class ProgressionPrime(BaseRecord):
    """원시성 등차수열의 소수별 기록 (p, m_p, 다항식 번호, 계수 번호)"""

    p: int
    m_p: int
    witnesses: List[List[int]] = Field(default_factory=list)


class ProgressionWitness(BaseRecord):
    """
    원시성 등차수열 (a₀·k + b₀)

    Attributes:
        a0: δ_i들의 서로 다른 소인수의 곱
        b0: CRT로 얻은 시작점
        deltas: 다항식별 δ_i
        primes: 소수별 기록
        dropped: 단원·y 꼴이라 제외된 다항식 번호
        samples: 원시성을 확인한 표본 t*
    """

    a0: int
    b0: int
    deltas: List[int]
    primes: List[ProgressionPrime] = Field(default_factory=list)
    dropped: List[int] = Field(default_factory=list)
    samples: List[int] = Field(default_factory=list)


class SpecializationEntry(BaseRecord):
    """특수화 m 하나의 다항식별 상태 ("irreducible", "reducible", "imprimitive", "constant")"""

    m: Any
    statuses: List[str]
    hit: bool


class SpecializationReport(BaseRecord):
    """
    기약 특수화 스캔 보고

    Attributes:
        entries: 스캔한 특수화
        hits: 모든 P_i(m, y)가 기약인 m 목록
        want: 요청한 적중 수
        scan_cap: 스캔 상한
        exhausted: 적중 수가 부족한 채로 끝났는지 여부 (상한 도달 또는 중단)
        interrupted: Ctrl-C로 중단되어 부분 보고인지 여부
        evidence_only: F_p[u] 결과처럼 탐색 증거로만 해석해야 하는지 여부
        search_bound: 기약성 판정에 쓴 인수 탐색 한계 설명
    """

    entries: List[SpecializationEntry] = Field(default_factory=list)
    hits: List[Any] = Field(default_factory=list)
    want: int
    scan_cap: int
    exhausted: bool = False
    interrupted: bool = False
    evidence_only: bool = False
    search_bound: Dict[str, Any] = Field(default_factory=dict)


class ModNEntry(BaseRecord):
    """P_i(m), 소수 p_i, p_i mod N"""

    value: int
    prime: int
    residue: int


class ModNWitness(BaseRecord):
    """
    mod-N Schinzel 증인: 각 P_i(m)이 N과 서로소인 소수 p_i와 mod N 합동

    Attributes:
        m: 정수
        modulus: N
        entries: 다항식별 (값, 소수, 잉여)
    """

    m: int
    modulus: int
    entries: List[ModNEntry]


class GoldbachWitness(BaseRecord):
    """2n ≡ p + q (mod N) 증인"""

    two_n: int
    modulus: int
    m: int
    p: int
    q: int
