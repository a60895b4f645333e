"""
값에 대한 가정(AV1/AV2/AV3) 판정 모듈

ℤ와 F_p[u]에서는 δ(또는 곱 다항식)의 소인수마다 잉여류를 전부 스캔하고,
잉여 성질을 가진 ℤ[u], ℚ[u]에서는 계수 content 검사로 판정합니다.
"""

from fractions import Fraction
from functools import reduce
from typing import Any, List, Sequence

from app.arith.integers import factorize, lcm, primes_up_to
from app.errors import RingMismatch
from app.polys.factor import (
    enumerate_residues,
    factor_over_prime_field,
    irreducible_monics,
    kronecker_factor,
)
from app.polys.poly import Poly, PolyRing
from app.polys.quotient import QuotientRing
from app.polys.rings import QQ, ZZ, PrimeField, Ring
from app.schemas.certificates import AvVerdict, PrimeEvidence
from app.schemas.witnesses import ValueCheck
from app.schinzel.delta import check_family, delta_of, is_pid
from common.utils.logger import get_logger

logger = get_logger(__name__)


def has_residue_property(Z: Ring) -> bool:
    """
    모든 소원 π에 대해 Z/(π)가 무한한지 여부

    ℤ[u], ℚ[u]는 참, ℤ와 F_p[u]는 거짓입니다.

    Raises:
        RingMismatch: 지원하지 않는 값 환
    """
    if Z == ZZ:
        return False
    if isinstance(Z, PolyRing) and Z.depth == 1:
        if Z.base in (ZZ, QQ):
            return True
        if isinstance(Z.base, PrimeField):
            return False
    raise RingMismatch(f"지원하지 않는 값 환입니다: {Z.name}")


def values_at(polys: Sequence[Poly], m: Any) -> List[Any]:
    return [P.eval(m) for P in polys]


def residue_ring(Z: Ring, prime: Any) -> Ring:
    """소원 prime에 대한 잉여환 ℤ/(p) 또는 F_p[u]/(π)"""
    if Z == ZZ:
        return PrimeField(prime)
    return QuotientRing(Z, prime)


def _rational_to_integer_poly(a: Poly) -> Poly:
    """ℚ[u]의 원소에 분모의 최소공배수를 곱해 원시 ℤ[u] 다항식으로 만듭니다."""
    R = PolyRing(ZZ, a.ring.var)
    L = lcm(Fraction(c).denominator for c in a.coeffs)
    return R.primitive(R.from_coeffs([Fraction(c) * L for c in a.coeffs]))


def prime_factors(Z: Ring, a: Any) -> List[Any]:
    """
    Z의 0이 아닌 원소 a의 서로 다른 소원 (정규화된 대표원)

    ℤ: 양의 소수, F_p[u]: 모닉 기약 다항식, ℚ[u]: 모닉 기약 다항식,
    ℤ[u]: 정수 소수 다음에 원시 기약 다항식 (Kronecker)
    """
    if Z == ZZ:
        return factorize(a).primes
    if isinstance(Z.base, PrimeField):
        return [f for f, _ in factor_over_prime_field(a).factors]
    if Z.base == QQ:
        if a.degree < 1:
            return []
        F = kronecker_factor(_rational_to_integer_poly(a))
        return [Z.normalize(Z.convert(f)) for f, _ in F.factors]

    content, primitive = Z.content_and_primitive(a)
    primes: List[Any] = [Z.constant(p) for p in factorize(content).primes]
    if primitive.degree >= 1:
        primes.extend(f for f, _ in kronecker_factor(primitive).factors)
    return primes


def check_values(Z: Ring, values: Sequence[Any]) -> ValueCheck:
    """
    값들이 Z에서 공통 인수를 갖지 않는지 검증합니다.

    ℤ, F_p[u], ℚ[u]는 정규화된 gcd가 단원인지 보고, ℤ[u]는 ℚ[u] 위 gcd가 1이고
    정수 content의 gcd가 1인지 봅니다.
    """
    g = Z.zero
    for v in values:
        g = Z.gcd(g, v)
    g = Z.normalize(g)

    if isinstance(Z, PolyRing) and Z.base == ZZ:
        K = PolyRing(QQ, Z.var)
        rational = K.zero
        content = 0
        for v in values:
            rational = K.gcd(rational, K.convert(v))
            content = ZZ.gcd(content, Z.content(v))
        coprime = rational.degree == 0 and content == 1
        return ValueCheck(
            gcd=g, rational_gcd=rational, content_gcd=content, coprime=coprime
        )
    return ValueCheck(gcd=g, coprime=Z.is_unit(g))


def scan_prime(polys: Sequence[Poly], prime: Any) -> PrimeEvidence:
    """
    prime을 법으로 모든 잉여류 r에서 P_i(r)을 계산해, prime으로 나누어지지 않는
    첫 (r, i)를 찾습니다.

    Raises:
        CapExceeded: 잉여류 수가 RESIDUE_CAP을 넘는 경우
    """
    Q = residue_ring(polys[0].ring.base, prime)
    scanned = 0
    for r in enumerate_residues(Q):
        scanned += 1
        for i, P in enumerate(polys):
            if not Q.is_zero(P.eval(r, target=Q)):
                return PrimeEvidence(
                    prime=prime, residues_scanned=scanned, good_residue=r, good_index=i
                )
    return PrimeEvidence(prime=prime, residues_scanned=scanned, all_killed=True)


def _scan_verdict(
    assumption: str, polys: Sequence[Poly], primes: Sequence[Any], **notes: Any
) -> AvVerdict:
    evidence: List[PrimeEvidence] = []
    for prime in primes:
        record = scan_prime(polys, prime)
        evidence.append(record)
        if record.all_killed:
            logger.info(f"{assumption} 실패: 모든 잉여류에서 {prime}로 나누어집니다")
            return AvVerdict(
                assumption=assumption,
                holds=False,
                failing_prime=prime,
                evidence=evidence,
                notes=notes,
            )
    return AvVerdict(assumption=assumption, holds=True, evidence=evidence, notes=notes)


def _content_verdict(assumption: str, Z: Ring, contents: Sequence[Any]) -> AvVerdict:
    """잉여 성질을 가진 환: 각 content가 단원이 아니면 그 소인수에서 실패"""
    for c in contents:
        if not Z.is_unit(c):
            prime = prime_factors(Z, c)[0]
            logger.info(f"{assumption} 실패: 계수 content {c}가 단원이 아닙니다")
            return AvVerdict(
                assumption=assumption,
                holds=False,
                failing_prime=prime,
                method="content",
                content=c,
            )
    content = contents[0] if len(contents) == 1 else None
    return AvVerdict(
        assumption=assumption, holds=True, method="content", content=content
    )


def check_av2(polys: Sequence[Poly]) -> AvVerdict:
    """
    (AV2): P_1(m), ..., P_s(m)이 모두 어떤 소원으로 나누어지는 일이 없는지 판정합니다.

    ℤ와 F_p[u]에서는 δ의 소인수 π마다 Z/(π)의 잉여류를 전부 스캔합니다.
    ℤ[u], ℚ[u]에서는 모든 계수의 gcd가 단원인지 봅니다.

    Raises:
        CommonFactor: 분수체 위 공통 인수 (δ가 정의되지 않음)
        BudgetExceeded: δ 인수분해 예산 초과
        CapExceeded: 잉여류 수 상한 초과
    """
    R = check_family(polys)
    Z = R.base
    if has_residue_property(Z):
        content = reduce(Z.gcd, (R.content(P) for P in polys), Z.zero)
        return _content_verdict("AV2", Z, [Z.normalize(content)])

    delta = delta_of(polys)
    primes = prime_factors(Z, delta)
    logger.debug(f"AV2 스캔: δ = {Z.to_str(delta)}, 소인수 {len(primes)}개")
    return _scan_verdict("AV2", polys, primes, delta=delta)


def _av1_candidates(Z: Ring, product: Poly) -> List[Any]:
    """
    곱 다항식의 모든 값을 나눌 수 있는 소원 후보

    content의 소인수와, 잉여류 수가 차수 이하인 소원(ℤ: p ≤ deg, F_p[u]: p^deg π ≤ deg)
    """
    R = product.ring
    content = R.content(product)
    if Z == ZZ:
        small = set(primes_up_to(product.degree))
        return sorted(set(factorize(content).primes) | small)

    p = Z.characteristic
    max_degree = 0
    while p ** (max_degree + 1) <= product.degree:
        max_degree += 1
    candidates = prime_factors(Z, content) if content.degree >= 1 else []
    for f in irreducible_monics(Z, max_degree):
        if f not in candidates:
            candidates.append(f)
    return sorted(candidates, key=lambda f: (f.degree, f.coeffs))


def check_av1(polys: Sequence[Poly]) -> AvVerdict:
    """
    (AV1): 곱 P = ∏P_i의 값 P(m)이 모두 어떤 소원으로 나누어지는 일이 없는지 판정합니다.

    잉여 성질을 가진 환에서는 각 P_i의 content가 단원인지로 판정합니다.
    """
    R = check_family(polys, minimum=1)
    Z = R.base
    if has_residue_property(Z):
        return _content_verdict("AV1", Z, [R.content(P) for P in polys])
    if not is_pid(Z):
        raise RingMismatch(f"AV1을 판정할 수 없는 환입니다: {Z.name}")

    product = reduce(R.mul, polys)
    candidates = _av1_candidates(Z, product)
    return _scan_verdict("AV1", [product], candidates)


def check_av3(polys: Sequence[Poly]) -> AvVerdict:
    """
    (AV3): P(t, y) = ∏P_i에 대해 모든 m ∈ ℤ에서 P(m, y) ≡ 0 (mod p)인 소수 p가 없는지 판정합니다.

    후보 소수는 정수 계수 content의 소인수와 deg_t 이하의 소수입니다.
    소수마다 t = 0, ..., p-1을 스캔하고, 증거로 각 y-계수를 p와 t^p - t로 줄인
    결과(P ∈ ⟨t^p - t, p⟩ 여부)를 함께 기록합니다.

    Args:
        polys: ℤ[t][y]의 다항식
    """
    R = check_family(polys, minimum=1)
    T = R.base
    if not (isinstance(T, PolyRing) and T.base == ZZ):
        raise RingMismatch(f"AV3는 ℤ[t][y]의 다항식에서만 판정합니다: {R.name}")

    product = reduce(R.mul, polys)
    content = 0
    t_degree = 0
    for c in product.coeffs:
        content = ZZ.gcd(content, T.content(c))
        t_degree = max(t_degree, c.degree)
    candidates = sorted(set(factorize(content).primes) | set(primes_up_to(t_degree)))

    evidence: List[PrimeEvidence] = []
    membership = {}
    for p in candidates:
        F = PrimeField(p)
        Fp_t = PolyRing(F, T.var)
        reduced = [Fp_t.convert(c) for c in product.coeffs]
        period = Fp_t.sub(Fp_t.monomial(1, p), Fp_t.gen)
        membership[p] = all(Fp_t.rem(c, period).is_zero() for c in reduced)

        for m in range(p):
            if any(c.eval(m) != 0 for c in reduced):
                record = PrimeEvidence(prime=p, residues_scanned=m + 1, good_residue=m)
                break
        else:
            record = PrimeEvidence(prime=p, residues_scanned=p, all_killed=True)
        evidence.append(record)

        if record.all_killed:
            logger.info(f"AV3 실패: 모든 t ≡ m (mod {p})에서 P(m, y) ≡ 0 입니다")
            return AvVerdict(
                assumption="AV3",
                holds=False,
                failing_prime=p,
                evidence=evidence,
                content=content,
                notes={"ideal_membership": membership},
            )
    return AvVerdict(
        assumption="AV3",
        holds=True,
        evidence=evidence,
        content=content,
        notes={"ideal_membership": membership},
    )
