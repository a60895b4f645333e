"""
원시성 등차수열 모듈

P_i(t, y) ∈ ℤ[t][y]의 y-계수들로부터 δ_i를 구하고, δ_i의 소인수마다
P_i(m_p, y)가 p로 나누어지지 않는 m_p를 찾아 CRT로 b₀를 만듭니다.
t* ≡ b₀ (mod a₀)이면 모든 P_i(t*, y)가 원시(content 1)입니다.
"""

from typing import Dict, List, Sequence, Tuple

from app.arith.integers import crt, factorize
from app.errors import AV3Violation, CommonFactor, RingMismatch, VerificationFailure
from app.polys.poly import Poly, PolyRing
from app.polys.rings import ZZ
from app.schemas.witnesses import ProgressionPrime, ProgressionWitness
from app.schinzel.delta import check_family, delta_of
from app.schinzel.values import check_av3
from common.utils.logger import get_logger

logger = get_logger(__name__)

SAMPLE_SHIFTS = (0, 1, -1, 2, -2)


def check_bivariate_family(polys: Sequence[Poly]) -> PolyRing:
    """ℤ[t][y]의 다항식 족인지 확인하고 계수 환 ℤ[t]를 반환합니다."""
    R = check_family(polys, minimum=1)
    T = R.base
    if not (isinstance(T, PolyRing) and T.base == ZZ):
        raise RingMismatch(f"ℤ[t][y]의 다항식이 필요합니다: {R.name}")
    return T


def is_unit_times_y(P: Poly) -> bool:
    """P = ±y 인지 여부 (모든 특수화에서 기약이므로 족에서 제외합니다)"""
    T = P.ring.base
    return P.degree == 1 and P.coeffs[0].is_zero() and T.is_unit(P.coeffs[1])


def coefficient_delta(P: Poly) -> int:
    """
    y-계수 P_ij(t)들의 δ (계수 족에 대한 최소 δ)

    Raises:
        CommonFactor: 0이 아닌 계수가 2개 미만이거나 ℚ[t] 위 공통 인수가 있는 경우
    """
    coefficients = P.nonzero_coeffs()
    if len(coefficients) < 2:
        raise CommonFactor(f"{P}의 0이 아닌 y-계수가 2개 미만입니다", poly=P)
    return abs(delta_of(coefficients))


def is_primitive_at(P: Poly, m: int) -> bool:
    F = P.eval_coeffs(m)
    return not F.is_zero() and F.ring.content(F) == 1


def _residue_for_prime(
    polys: Sequence[Poly], indices: Sequence[int], p: int
) -> Tuple[int, List[List[int]]]:
    """
    indices의 모든 P_i에서 어떤 계수 P_ij(m)이 p로 나누어지지 않는 m ∈ [0, p)

    Raises:
        AV3Violation: 그런 m이 없는 경우
    """
    for m in range(p):
        witnesses = []
        for i in indices:
            j = next(
                (j for j, c in enumerate(polys[i].coeffs) if c.eval(m) % p),
                None,
            )
            if j is None:
                break
            witnesses.append([i, j])
        else:
            return m, witnesses
    raise AV3Violation(
        f"모든 m에서 어떤 P_i(m, y)가 {p}로 나누어집니다", failing_prime=p
    )


def primitivity_progression(polys: Sequence[Poly]) -> ProgressionWitness:
    """
    모든 P_i(t*, y)가 원시인 등차수열 t* = a₀·k + b₀를 구성합니다.

    ±y 꼴의 다항식은 먼저 제외하고, 나머지 P_i마다 y-계수의 δ_i를 계산합니다.
    a₀는 δ_1⋯δ_s의 서로 다른 소인수의 곱이고, b₀는 소수별 잉여 m_p의 CRT입니다.
    b₀, b₀ ± a₀, b₀ ± 2a₀에서 원시성을 다시 확인합니다.

    Raises:
        RingMismatch: ℤ[t][y]의 다항식이 아닌 경우
        CommonFactor: 어떤 P_i의 계수 족이 퇴화한 경우
        AV3Violation: 곱에 대해 (AV3)가 성립하지 않는 경우
    """
    check_bivariate_family(polys)
    dropped = [i for i, P in enumerate(polys) if is_unit_times_y(P)]
    kept = [i for i in range(len(polys)) if i not in dropped]

    deltas = [1] * len(polys)
    for i in kept:
        deltas[i] = coefficient_delta(polys[i])

    if kept:
        verdict = check_av3([polys[i] for i in kept])
        if not verdict.holds:
            raise AV3Violation(
                f"(AV3)가 {verdict.failing_prime}에서 성립하지 않습니다",
                failing_prime=verdict.failing_prime,
            )

    by_prime: Dict[int, List[int]] = {}
    for i in kept:
        for p in factorize(deltas[i]).primes:
            by_prime.setdefault(p, []).append(i)

    records: List[ProgressionPrime] = []
    for p in sorted(by_prime):
        m_p, witnesses = _residue_for_prime(polys, by_prime[p], p)
        records.append(ProgressionPrime(p=p, m_p=m_p, witnesses=witnesses))

    if records:
        b0, a0 = crt([(r.m_p, r.p) for r in records])
    else:
        b0, a0 = 0, 1

    samples = [b0 + k * a0 for k in SAMPLE_SHIFTS]
    for t in samples:
        for i in kept:
            if not is_primitive_at(polys[i], t):
                raise VerificationFailure(
                    f"t* = {t}에서 P_{i + 1}(t*, y)가 원시가 아닙니다", t=t, index=i
                )
    logger.info(f"원시성 등차수열: {a0}·k + {b0} (제외 {len(dropped)}개)")
    return ProgressionWitness(
        a0=a0, b0=b0, deltas=deltas, primes=records, dropped=dropped, samples=samples
    )
