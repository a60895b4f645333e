"""
서로소 값 증인 탐색 모듈

P_1(m), ..., P_s(m)이 Z에서 공통 인수를 갖지 않는 m을 구성합니다.

- ℤ, F_p[u]: δ의 소인수마다 잉여류를 스캔하고 CRT로 합칩니다.
- ℚ[u]: 상수 m = 0, 1, -1, 2, ... 를 스캔합니다 (ℚ → ℚ[u]/(π) 단사).
- ℤ[u]: m(u) = λ₀ + λ₁·u^a + λ₂·u^b 구조 탐색 후 전수 탐색으로 후퇴합니다.

모든 증인은 반환 전에 값 gcd를 다시 계산해 검증합니다.
"""

from fractions import Fraction
from itertools import count, product
from typing import Any, Iterator, List, Optional, Sequence, Tuple

from app.arith.integers import crt
from app.config import settings
from app.errors import AV2Violation, BudgetExceeded, RingMismatch, VerificationFailure
from app.polys.euclid import poly_crt
from app.polys.poly import Poly, PolyRing, degree_in
from app.polys.rings import QQ, ZZ, PrimeField, Ring
from app.schemas.witnesses import CoprimeWitness, MonomialConditions
from app.schinzel.delta import (
    bezout_delta,
    check_coprime_over_field,
    check_family,
    delta_of,
    is_pid,
)
from app.schinzel.values import (
    check_av2,
    check_values,
    prime_factors,
    scan_prime,
    values_at,
)
from common.utils.logger import get_logger

logger = get_logger(__name__)


def _witness(
    polys: Sequence[Poly], m: Any, method: str, **extra: Any
) -> CoprimeWitness:
    """값을 계산하고 검증한 증인을 만듭니다."""
    Z = polys[0].ring.base
    values = values_at(polys, m)
    check = check_values(Z, values)
    if not check.coprime:
        raise VerificationFailure(
            f"증인 m = {Z.to_str(m)}의 값 gcd {check.gcd}가 단원이 아닙니다",
            method=method,
        )
    return CoprimeWitness(m=m, values=values, check=check, method=method, **extra)


def find_coprime_pid(polys: Sequence[Poly]) -> CoprimeWitness:
    """
    Z ∈ {ℤ, F_p[u]}에서 서로소 값 증인을 CRT로 구성합니다.

    δ의 소인수 π마다 π ∤ P_i(r)인 (r, i)를 잉여류 스캔으로 찾고,
    m ≡ r (mod π)를 모두 만족하는 m을 CRT로 얻습니다.

    Raises:
        AV2Violation: 어떤 소인수에서 모든 잉여류가 모든 P_i를 죽이는 경우
    """
    R = check_family(polys)
    Z = R.base
    if not is_pid(Z):
        raise RingMismatch(f"CRT 증인은 ℤ 또는 F_p[u]에서만 구성합니다: {Z.name}")

    delta = delta_of(polys)
    if Z.is_unit(delta):
        return _witness(polys, Z.zero, "trivial")

    congruences: List[Tuple[Any, Any, int]] = []
    for prime in prime_factors(Z, delta):
        record = scan_prime(polys, prime)
        if record.all_killed:
            raise AV2Violation(
                f"AV2가 성립하지 않습니다: 모든 값이 {Z.to_str(prime)}로 나누어집니다",
                failing_prime=prime,
            )
        congruences.append((prime, record.good_residue, record.good_index))

    if Z == ZZ:
        m, _ = crt([(r, p) for p, r, _ in congruences])
    else:
        m, _ = poly_crt([(r, p) for p, r, _ in congruences])
    logger.debug(f"CRT 증인: m = {Z.to_str(m)} (소인수 {len(congruences)}개)")
    return _witness(
        polys, m, "crt", congruences=[list(entry) for entry in congruences]
    )


def _small_rationals() -> Iterator[Fraction]:
    """0, 1, -1, 2, -2, ..."""
    yield Fraction(0)
    for k in count(1):
        yield Fraction(k)
        yield Fraction(-k)


def find_coprime_infinite_field(polys: Sequence[Poly]) -> CoprimeWitness:
    """
    무한체를 포함하는 Z = ℚ[u]에서 상수 m을 스캔해 증인을 찾습니다.

    δ의 소인수 π마다 π로 줄였을 때 0이 아닌 P_{i_π}를 하나 고르고,
    모든 π에 대해 π ∤ P_{i_π}(m)인 첫 상수 m을 받아들입니다.
    거부 횟수는 Σ deg_y(P_{i_π} mod π)를 넘지 않습니다.

    Raises:
        AV2Violation: 모든 P_i가 어떤 π로 나누어지는 경우
    """
    R = check_family(polys)
    Z = R.base
    if not (isinstance(Z, PolyRing) and Z.base == QQ):
        raise RingMismatch(f"상수 스캔 증인은 ℚ[u]에서만 구성합니다: {Z.name}")

    delta = bezout_delta(polys).delta
    if Z.is_unit(delta):
        return _witness(polys, Z.zero, "trivial")

    chosen: List[Tuple[Poly, int]] = []
    bound = 0
    for prime in prime_factors(Z, delta):
        for i, P in enumerate(polys):
            reduced = Poly(R, [Z.rem(c, prime) for c in P.coeffs])
            if not reduced.is_zero():
                chosen.append((prime, i))
                bound += reduced.degree
                break
        else:
            raise AV2Violation(
                f"AV2가 성립하지 않습니다: 모든 P_i가 {prime}로 나누어집니다",
                failing_prime=prime,
            )

    rejected = 0
    for m in _small_rationals():
        if all(
            not Z.rem(polys[i].eval(m), prime).is_zero() for prime, i in chosen
        ):
            break
        rejected += 1
        if rejected > bound:
            raise VerificationFailure(f"상수 스캔이 거부 상한 {bound}를 넘었습니다")
    return _witness(polys, Z.convert(m), "scan", candidates_tried=rejected + 1)


def monomial_conditions(m: Poly, polys: Sequence[Poly]) -> MonomialConditions:
    """
    m(u)의 두 단항식 μ₁·u^a, μ₂·u^b가 μ₂ ≡ 1 (mod μ₁)과
    min(a, b) > max deg_u P_i를 만족하는지 보고합니다.

    이 두 조건을 만족하면 P(u, m(u))는 P를 나누지 않는 어떤 소수로도 나누어지지 않습니다.
    """
    var = m.ring.var
    bound = max(degree_in(P, var) for P in polys)
    monomials = [(c, k) for k, c in enumerate(m.coeffs) if c != 0]
    congruence = degrees_above = False
    for mu1, a in monomials:
        for mu2, b in monomials:
            if a == b:
                continue
            congruent = (mu2 - 1) % mu1 == 0
            above = min(a, b) > bound
            congruence |= congruent
            degrees_above |= above
            if congruent and above:
                return MonomialConditions(
                    monomials=[[mu1, a], [mu2, b]],
                    congruence=True,
                    degrees_above=True,
                    holds=True,
                )
    return MonomialConditions(congruence=congruence, degrees_above=degrees_above)


def _lambda_triples(height: int) -> Iterator[Tuple[int, int, int]]:
    """
    0이 아닌 (λ₀, λ₁, λ₂)를 최대 절댓값 순으로 생성합니다. λ₂ ≡ 1 (mod λ₁)
    """
    for h in range(1, height + 1):
        values = [v for k in range(1, h + 1) for v in (k, -k)]
        for l1, l2, l0 in product(values, repeat=3):
            if max(abs(l0), abs(l1), abs(l2)) != h:
                continue
            if (l2 - 1) % l1 == 0:
                yield l0, l1, l2


def integer_polys(Z: PolyRing, degree: int, height: int) -> Iterator[Poly]:
    """
    차수 ≤ degree, 계수 절댓값 ≤ height 인 ℤ[u]의 다항식을 (차수, 높이) 순으로 생성합니다.
    """
    for d in range(degree + 1):
        for h in range(height + 1):
            for coeffs in product(range(-h, h + 1), repeat=d + 1):
                if max((abs(c) for c in coeffs), default=0) != h:
                    continue
                if d > 0 and coeffs[-1] == 0:
                    continue
                yield Z.from_coeffs(coeffs)


def find_coprime_polyring(
    polys: Sequence[Poly],
    lambda_height: Optional[int] = None,
    fallback_degree: Optional[int] = None,
    fallback_height: Optional[int] = None,
) -> CoprimeWitness:
    """
    Z = ℤ[u]에서 서로소 값 증인을 찾습니다.

    d = max deg_u P_i일 때 m(u) = λ₀ + λ₁·u^(d+1) + λ₂·u^(d+2)를
    λ₂ ≡ 1 (mod λ₁) 조건 아래 높이 LAMBDA_HEIGHT까지 탐색하고, 찾지 못하면
    차수 FALLBACK_DEGREE, 높이 FALLBACK_HEIGHT까지 전수 탐색합니다.
    후보는 ℚ[u] 위 gcd와 정수 content로 직접 검증합니다.

    Args:
        lambda_height: λ 탐색 높이 (기본값: LAMBDA_HEIGHT에 배율 적용)
        fallback_degree: 전수 탐색 m(u) 최대 차수
        fallback_height: 전수 탐색 계수 높이

    Raises:
        CommonFactor: ℚ[u][y]에서 공통 인수가 있는 경우
        AV2Violation: 모든 계수를 나누는 공통 소원이 있는 경우
        BudgetExceeded: 두 탐색이 모두 실패한 경우
    """
    R = check_family(polys)
    Z = R.base
    if not (isinstance(Z, PolyRing) and Z.base == ZZ):
        raise RingMismatch(f"구조 탐색 증인은 ℤ[u]에서만 구성합니다: {Z.name}")
    check_coprime_over_field(polys)
    verdict = check_av2(polys)
    if not verdict.holds:
        raise AV2Violation(
            f"AV2가 성립하지 않습니다: 공통 소인수 {verdict.failing_prime}",
            failing_prime=verdict.failing_prime,
        )

    if Z.is_unit(bezout_delta(polys).delta):
        return _witness(polys, Z.zero, "trivial")

    if lambda_height is None:
        lambda_height = settings.scaled("LAMBDA_HEIGHT")
    if fallback_degree is None:
        fallback_degree = settings.scaled("FALLBACK_DEGREE")
    if fallback_height is None:
        fallback_height = settings.scaled("FALLBACK_HEIGHT")

    d = max(degree_in(P, Z.var) for P in polys)
    tried = 0
    for l0, l1, l2 in _lambda_triples(lambda_height):
        tried += 1
        m = Z.from_coeffs([l0] + [0] * d + [l1, l2])
        if check_values(Z, values_at(polys, m)).coprime:
            logger.debug(f"구조 탐색 증인: m = {m} ({tried}번째 후보)")
            return _witness(
                polys,
                m,
                "structured",
                candidates_tried=tried,
                monomial_conditions=monomial_conditions(m, polys),
            )

    logger.warning(f"λ 구조 탐색 실패 ({tried}개 후보), 전수 탐색으로 넘어갑니다")
    for m in integer_polys(Z, fallback_degree, fallback_height):
        tried += 1
        if check_values(Z, values_at(polys, m)).coprime:
            return _witness(polys, m, "fallback", candidates_tried=tried)
    raise BudgetExceeded(f"ℤ[u] 증인 탐색 실패: 후보 {tried}개", candidates=tried)


def _prime_field_polys(Z: PolyRing, degree: int) -> Iterator[Poly]:
    p = Z.characteristic
    yield Z.zero
    for d in range(degree + 1):
        for lc in range(1, p):
            for lower in product(range(p), repeat=d):
                yield Poly(Z, list(reversed(lower)) + [lc])


def box_elements(
    Z: Ring, lo: int = -10, hi: int = 10, degree: int = 2, height: int = 2
) -> Iterator[Any]:
    """
    탐색 상자의 원소를 고정된 순서로 생성합니다.

    ℤ: lo..hi, F_p[u]: 차수 ≤ degree 전체, ℤ[u]: 차수 ≤ degree와 높이 ≤ height,
    ℚ[u]: 상수 lo..hi 다음 ℤ[u]와 같은 정수 계수 다항식
    """
    if Z == ZZ:
        yield from range(lo, hi + 1)
    elif isinstance(Z.base, PrimeField):
        yield from _prime_field_polys(Z, degree)
    elif Z.base == ZZ:
        yield from integer_polys(Z, degree, height)
    else:
        for c in range(lo, hi + 1):
            yield Z.constant(c)
        integer_ring = PolyRing(ZZ, Z.var)
        for m in integer_polys(integer_ring, degree, height):
            if m.degree >= 1:
                yield Z.convert(m)


def brute_force_coprime(
    polys: Sequence[Poly], lo: int = -10, hi: int = 10, degree: int = 2, height: int = 2
) -> Optional[CoprimeWitness]:
    """
    탐색 상자를 순서대로 훑어 값 gcd가 단원인 첫 m을 반환합니다. 없으면 None.

    구성적 탐색기들의 독립 오라클로 쓰입니다.
    """
    R = check_family(polys, minimum=1)
    Z = R.base
    for tried, m in enumerate(box_elements(Z, lo, hi, degree, height), start=1):
        if check_values(Z, values_at(polys, m)).coprime:
            return _witness(polys, m, "brute-force", candidates_tried=tried)
    logger.info(f"탐색 상자 안에 서로소 값 증인이 없습니다 ({Z.name})")
    return None


def find_coprime(polys: Sequence[Poly]) -> CoprimeWitness:
    """환에 맞는 구성적 탐색기를 고릅니다."""
    Z = check_family(polys).base
    if is_pid(Z):
        return find_coprime_pid(polys)
    if isinstance(Z, PolyRing) and Z.base == QQ:
        return find_coprime_infinite_field(polys)
    return find_coprime_polyring(polys)
