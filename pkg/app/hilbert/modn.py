"""
mod-N Schinzel 모듈

두 다항식 (∏P_i, N)에 서로소 값 증인을 적용해 gcd(∏P_i(m), N) = 1인 m의
등차수열을 얻고, 각 P_i(m) mod N 잉여류에서 소수를 찾습니다.
"""

from functools import reduce
from typing import List, Optional, Sequence

from app.arith.integers import is_prime, prime_in_progression
from app.errors import (
    AV1Violation,
    PreconditionViolation,
    RingMismatch,
    VerificationFailure,
)
from app.polys.poly import Poly, PolyRing
from app.polys.rings import ZZ
from app.schemas.witnesses import GoldbachWitness, ModNEntry, ModNWitness
from app.schinzel.delta import check_family, delta_of
from app.schinzel.values import check_av1
from app.schinzel.witness import find_coprime_pid
from common.utils.logger import get_logger

logger = get_logger(__name__)


def _verify(witness: ModNWitness, polys: Sequence[Poly]) -> None:
    N = witness.modulus
    for P, entry in zip(polys, witness.entries):
        if (
            entry.value != P.eval(witness.m)
            or not is_prime(entry.prime)
            or N % entry.prime == 0
            or (entry.prime - entry.value) % N
        ):
            raise VerificationFailure(
                f"mod-{N} 증인 재검증 실패: m = {witness.m}, p = {entry.prime}"
            )


def mod_n_schinzel(
    polys: Sequence[Poly], modulus: int, want: int = 1, budget: Optional[int] = None
) -> List[ModNWitness]:
    """
    P_1(m), ..., P_s(m)이 각각 N과 서로소인 소수와 mod N 합동인 m을 want개 찾습니다.

    Args:
        polys: ℤ[y]의 다항식
        modulus: N ≥ 1
        want: 증인 개수
        budget: 등차수열 소수 탐색 예산

    Raises:
        AV1Violation: 곱 ∏P_i에 대해 (AV1)이 성립하지 않는 경우
        BudgetExceeded: 소수 탐색 예산 초과
    """
    R = check_family(polys, minimum=1)
    if R.base != ZZ:
        raise RingMismatch(f"mod-N 증인은 ℤ[y]에서만 구성합니다: {R.name}")
    if modulus < 1:
        raise PreconditionViolation(f"N은 1 이상이어야 합니다: {modulus}")
    if want < 1:
        raise PreconditionViolation(f"want는 1 이상이어야 합니다: {want}")

    verdict = check_av1(polys)
    if not verdict.holds:
        raise AV1Violation(
            f"(AV1)이 {verdict.failing_prime}에서 성립하지 않습니다",
            failing_prime=verdict.failing_prime,
        )

    pair = [reduce(R.mul, polys), R.constant(modulus)]
    start = find_coprime_pid(pair).m
    period = abs(delta_of(pair))

    witnesses: List[ModNWitness] = []
    for k in range(want):
        m = start + k * period
        entries = []
        for P in polys:
            value = P.eval(m)
            prime = prime_in_progression(value % modulus, modulus, budget=budget)
            entries.append(ModNEntry(value=value, prime=prime, residue=prime % modulus))
        witness = ModNWitness(m=m, modulus=modulus, entries=entries)
        _verify(witness, polys)
        witnesses.append(witness)
    logger.debug(f"mod-{modulus} 증인 {len(witnesses)}개 (시작 m = {start}, 주기 {period})")
    return witnesses


def goldbach_mod_n(
    two_n: int, modulus: int, want: int = 1, budget: Optional[int] = None
) -> List[GoldbachWitness]:
    """
    (y, 2n - y)에 mod-N Schinzel을 적용해 2n ≡ p + q (mod N)인 소수 p, q를 찾습니다.
    """
    if two_n % 2:
        raise PreconditionViolation(f"2n은 짝수여야 합니다: {two_n}")
    R = PolyRing(ZZ, "y")
    polys = [R.gen, R.constant(two_n) - R.gen]
    out = []
    for witness in mod_n_schinzel(polys, modulus, want, budget):
        p, q = (entry.prime for entry in witness.entries)
        if (p + q - two_n) % modulus:
            raise VerificationFailure(f"{p} + {q} ≢ {two_n} (mod {modulus})")
        out.append(GoldbachWitness(two_n=two_n, modulus=modulus, m=witness.m, p=p, q=q))
    return out
