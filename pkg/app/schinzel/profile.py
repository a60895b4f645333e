"""
값 gcd 프로파일과 D* 분석

PID(ℤ, F_p[u])에서 d_m = gcd(P_1(m), ..., P_s(m))는 m mod δ에만 의존합니다.
한 주기 전체를 계산해 D* = {d_m}, d* = gcd(D*), 좋은 m의 밀도를 구합니다.
"""

import random
from fractions import Fraction
from functools import reduce
from typing import Any, Dict, List, Optional, Sequence

from app.arith.integers import euler_phi, primorial
from app.config import settings
from app.errors import (
    CapExceeded,
    PreconditionViolation,
    RingMismatch,
    VerificationFailure,
)
from app.polys.factor import enumerate_residues
from app.polys.poly import Poly
from app.polys.quotient import QuotientRing
from app.polys.rings import ZZ, Ring
from app.schemas.witnesses import DStar, GcdProfile
from app.schinzel.delta import check_family, delta_of, is_pid
from app.schinzel.values import check_av2, check_values, values_at
from common.utils.logger import get_logger

logger = get_logger(__name__)

PERIOD_SHIFTS = (-2, -1, 1, 2)
PERIOD_SAMPLES = 8


def _sort_key(Z: Ring, a: Any):
    if Z == ZZ:
        return (a,)
    return (a.degree, a.coeffs)


def value_gcd(polys: Sequence[Poly], m: Any) -> Any:
    """정규화된 d_m"""
    return check_values(polys[0].ring.base, values_at(polys, m)).gcd


def _period(Z: Ring, delta: Any, cap: int) -> List[Any]:
    """m mod δ의 대표원 전체"""
    if Z == ZZ:
        if delta > cap:
            raise CapExceeded(f"|δ| = {delta}가 프로파일 상한 {cap}을 넘습니다", cap=cap)
        return list(range(delta))
    if delta.degree < 1:
        return [Z.zero]
    return list(enumerate_residues(QuotientRing(Z, delta)))


def gcd_profile(
    polys: Sequence[Poly], cap: Optional[int] = None, seed: Optional[int] = None
) -> GcdProfile:
    """
    한 주기(ℤ: 0..|δ|-1, F_p[u]: δ(u)를 법으로 한 모든 잉여류)의 d_m 표를 만듭니다.

    표본 m에서 ℓ ∈ {-2, -1, 1, 2}에 대해 d_m = d_(m+ℓδ)를 확인합니다.

    Args:
        cap: ℤ에서 |δ| 상한 (기본값: PROFILE_CAP에 배율 적용)
        seed: 주기성 표본 시드 (기본값: SCHINZEL_SEED)

    Raises:
        RingMismatch: Z가 PID가 아닌 경우
        CapExceeded: 주기 길이가 상한을 넘는 경우
        VerificationFailure: d_m ∤ δ 이거나 주기성이 깨진 경우
    """
    R = check_family(polys)
    Z = R.base
    if not is_pid(Z):
        raise RingMismatch(f"gcd 프로파일은 ℤ 또는 F_p[u]에서만 계산합니다: {Z.name}")
    delta = Z.normalize(delta_of(polys))
    cap = settings.scaled("PROFILE_CAP") if cap is None else cap
    seed = settings.SEED if seed is None else seed

    table: Dict[Any, Any] = {}
    for m in _period(Z, delta, cap):
        d = value_gcd(polys, m)
        if not Z.divides(d, delta):
            raise VerificationFailure(f"d_m = {d}가 δ = {delta}를 나누지 않습니다 (m = {m})")
        table[m] = d

    rng = random.Random(seed)
    keys = list(table)
    samples = rng.sample(keys, min(PERIOD_SAMPLES, len(keys)))
    checks = 0
    for m in samples:
        for shift in PERIOD_SHIFTS:
            other = Z.add(m, Z.mul(Z.convert(shift), delta))
            if value_gcd(polys, other) != table[m]:
                raise VerificationFailure(
                    f"주기성 위반: d_{m} ≠ d_({m} + {shift}·δ)", m=m, shift=shift
                )
            checks += 1
    logger.debug(f"gcd 프로파일: δ = {Z.to_str(delta)}, 항목 {len(table)}개")
    return GcdProfile(delta=delta, table=table, periodicity_checks=checks)


def dstar(polys: Sequence[Poly]) -> DStar:
    """
    D* = {d_m}와 d* = gcd(D*)를 계산하고 gcd-안정성과 (AV2 ⟺ d*가 단원)을 확인합니다.

    Raises:
        VerificationFailure: gcd-안정성 또는 AV2 동치가 깨진 경우
    """
    profile = gcd_profile(polys)
    Z = polys[0].ring.base
    divisors = sorted(set(profile.table.values()), key=lambda a: _sort_key(Z, a))
    d_star = Z.normalize(reduce(Z.gcd, divisors, Z.zero))

    members = set(divisors)
    stable = all(
        Z.normalize(Z.gcd(a, b)) in members for a in divisors for b in divisors
    )
    if not stable or d_star not in members:
        raise VerificationFailure(f"D* = {divisors}가 gcd에 대해 닫혀 있지 않습니다")

    holds = check_av2(polys).holds
    if holds != Z.is_unit(d_star):
        raise VerificationFailure(
            f"AV2 판정({holds})과 d* = {d_star}가 일치하지 않습니다"
        )
    if not holds:
        logger.info(f"AV2 실패: d* = {Z.to_str(d_star)}")
    return DStar(divisors=divisors, d_star=d_star, gcd_stable=stable, av2_holds=holds)


def density_good_m(
    polys: Sequence[Poly], lo: int, hi: int, cap: Optional[int] = None
) -> Fraction:
    """
    구간 [lo, hi)에서 값 gcd가 1인 m의 비율 (정확한 유리수)

    Raises:
        PreconditionViolation: 구간 길이가 |δ|의 양의 배수가 아닌 경우
        CapExceeded: 구간 길이가 cap(기본값: PROFILE_CAP에 배율 적용)을 넘는 경우
    """
    R = check_family(polys)
    if R.base != ZZ:
        raise RingMismatch(f"밀도는 ℤ에서만 계산합니다: {R.base.name}")
    delta = abs(delta_of(polys))
    length = hi - lo
    if length <= 0 or length % delta:
        raise PreconditionViolation(
            f"구간 길이 {length}가 |δ| = {delta}의 양의 배수가 아닙니다",
            length=length,
            delta=delta,
        )
    cap = settings.scaled("PROFILE_CAP") if cap is None else cap
    if length > cap:
        raise CapExceeded(f"구간 길이 {length}가 상한 {cap}을 넘습니다", cap=cap)
    good = sum(1 for m in range(lo, hi) if value_gcd(polys, m) == 1)
    return Fraction(good, length)


def primorial_density(h: int) -> Fraction:
    """φ(Π_h)/Π_h, Π_h는 h 이하 소수의 곱"""
    n = primorial(h)
    return Fraction(euler_phi(n), n)
