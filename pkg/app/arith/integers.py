"""
정수 산술 모듈

확장 유클리드, 중국인의 나머지 정리(CRT), 소수 판정(Miller–Rabin),
소인수분해(시행 나눗셈 + Pollard rho/Brent), 등차수열 안의 소수 탐색을 제공합니다.
모든 함수는 입력만의 순수 함수이며, 탐색 함수는 명시적 예산을 받습니다.
"""

import math
import random
from functools import lru_cache, reduce
from typing import Iterable, Iterator, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from app.config import settings
from app.errors import BudgetExceeded, Incompatible, PreconditionViolation, ZeroInput

# 3.3·10^24 미만에서 결정적인 Miller–Rabin 증인 집합 (처음 13개 소수)
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_PROBABILISTIC_ROUNDS = 40


class FactoredInteger(BaseModel):
    """
    정수의 소인수분해 결과

    Attributes:
        unit: 부호 (1 또는 -1)
        factors: (소수, 지수) 쌍의 목록, 소수 오름차순
    """

    model_config = ConfigDict(frozen=True)

    unit: int = Field(default=1, description="부호 단원")
    factors: Tuple[Tuple[int, int], ...] = Field(default=(), description="(소수, 지수)")

    @property
    def primes(self) -> List[int]:
        return [p for p, _ in self.factors]

    def value(self) -> int:
        """단원과 소인수 거듭제곱의 곱을 복원합니다."""
        result = self.unit
        for p, e in self.factors:
            result *= p**e
        return result

    def divisors(self) -> List[int]:
        """양의 약수 전체를 오름차순으로 반환합니다."""
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return sorted(divs)

    def __str__(self) -> str:
        if not self.factors:
            return str(self.unit)
        body = "·".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)
        return f"-{body}" if self.unit < 0 else body


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """
    확장 유클리드 알고리즘

    Returns:
        (g, x, y): g = gcd(a, b) ≥ 0, a·x + b·y = g. gcd(0, 0) = 0, 여인수 (0, 0).
    """
    if a == 0 and b == 0:
        return 0, 0, 0
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def crt(congruences: Sequence[Tuple[int, int]]) -> Tuple[int, int]:
    """
    중국인의 나머지 정리 (서로소가 아닌 법도 허용)

    Args:
        congruences: (잉여, 법) 쌍의 목록, 법은 0이 아니어야 합니다.

    Returns:
        (m, lcm): 모든 i에 대해 m ≡ r_i (mod n_i), 0 ≤ m < lcm

    Raises:
        Incompatible: 두 합동식이 공유 소수 거듭제곱에서 충돌하는 경우
    """
    m, modulus = 0, 1
    for residue, n in congruences:
        if n == 0:
            raise ZeroInput("CRT 법은 0이 될 수 없습니다")
        n = abs(n)
        g, x, _ = ext_gcd(modulus, n)
        if (residue - m) % g != 0:
            raise Incompatible(
                f"합동식 충돌: x ≡ {m} (mod {modulus}) 와 x ≡ {residue} (mod {n})",
                modulus=modulus,
                other=n,
            )
        lcm = modulus // g * n
        m = (m + modulus * ((residue - m) // g * x)) % lcm
        modulus = lcm
    return m % modulus, modulus


def _miller_rabin_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """
    |n|이 소수인지 판정합니다.

    3.3·10^24 미만에서는 고정 증인 집합으로 결정적이며,
    그 이상에서는 n으로 시드된 40회 무작위 라운드를 추가로 수행합니다.
    """
    n = abs(n)
    if n < 2:
        return False
    for p in _DETERMINISTIC_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if not all(_miller_rabin_round(n, d, s, a) for a in _DETERMINISTIC_BASES):
        return False
    if n < _DETERMINISTIC_LIMIT:
        return True
    rng = random.Random(n)
    return all(
        _miller_rabin_round(n, d, s, rng.randrange(2, n - 1))
        for _ in range(_PROBABILISTIC_ROUNDS)
    )


@lru_cache(maxsize=4)
def primes_up_to(bound: int) -> Tuple[int, ...]:
    """에라토스테네스의 체로 bound 이하의 소수를 반환합니다."""
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _brent_split(n: int, budget: int) -> int:
    """
    Pollard rho (Brent 순환 탐지)로 합성수 n의 비자명 약수를 찾습니다.

    Raises:
        BudgetExceeded: 반복 횟수가 예산을 넘는 경우
    """
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    spent = 0
    while True:
        y, c, block = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(block, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += block
            spent += 2 * r
            r *= 2
            if spent > budget:
                raise BudgetExceeded(
                    f"Pollard rho 예산 초과: n={n}", budget=budget, cofactor=n
                )
        if g == n:
            while True:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
                if g > 1:
                    break
        if 1 < g < n:
            return g


def factorize(
    n: int,
    budget: int | None = None,
    trial_bound: int | None = None,
) -> FactoredInteger:
    """
    정수를 소인수분해합니다.

    시행 나눗셈(기본 10^6까지) 후 남은 합성 여인수는 Pollard rho/Brent로 분해합니다.

    Args:
        n: 0이 아닌 정수
        budget: Pollard rho 반복 예산 (기본값: 설정의 FACTOR_BUDGET)
        trial_bound: 시행 나눗셈 상한 (기본값: 설정의 TRIAL_DIVISION_BOUND)

    Raises:
        ZeroInput: n = 0
        BudgetExceeded: 예산 안에서 합성 여인수가 분해되지 않는 경우
    """
    if n == 0:
        raise ZeroInput("0은 인수분해할 수 없습니다")
    budget = settings.scaled("FACTOR_BUDGET") if budget is None else budget
    trial_bound = settings.TRIAL_DIVISION_BOUND if trial_bound is None else trial_bound

    unit = -1 if n < 0 else 1
    rest = abs(n)
    counts: dict[int, int] = {}

    for p in _trial_primes(rest, trial_bound):
        if p * p > rest:
            break
        while rest % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rest //= p

    stack = [rest] if rest > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack.extend([root, root])
            continue
        d = _brent_split(m, budget)
        stack.extend([d, m // d])

    return FactoredInteger(unit=unit, factors=tuple(sorted(counts.items())))


def _trial_primes(n: int, bound: int) -> Iterator[int]:
    # 작은 n에서는 체 전체를 만들지 않습니다.
    limit = min(bound, math.isqrt(n) + 1)
    if limit < 2:
        return iter(())
    if limit <= 50_000:
        return iter(primes_up_to(limit))
    return iter(p for p in primes_up_to(bound) if p <= limit)


def prime_divisors(n: int, budget: int | None = None) -> List[int]:
    """|n|의 서로 다른 소인수 목록 (오름차순)"""
    return factorize(n, budget).primes


def prime_in_progression(
    a: int, n: int, start: int = 2, budget: int | None = None
) -> int:
    """
    p ≡ a (mod n)이고 p ≥ start인 가장 작은 소수를 반환합니다.

    Raises:
        PreconditionViolation: gcd(a, n) ≠ 1 또는 n < 1
        BudgetExceeded: 후보 수가 예산을 넘는 경우
    """
    if n < 1:
        raise PreconditionViolation(f"법은 1 이상이어야 합니다: {n}")
    if math.gcd(a, n) != 1:
        raise PreconditionViolation(
            f"gcd({a}, {n}) = {math.gcd(a, n)} 이므로 등차수열에 소수가 거의 없습니다",
            a=a,
            n=n,
        )
    budget = settings.scaled("PRIME_SEARCH_BUDGET") if budget is None else budget
    candidate = start + (a - start) % n
    for _ in range(budget):
        if candidate >= 2 and is_prime(candidate):
            return candidate
        candidate += n
    raise BudgetExceeded(
        f"{start} 이상에서 ≡ {a} (mod {n}) 인 소수를 찾지 못했습니다", budget=budget
    )


def lcm(values: Iterable[int]) -> int:
    """0이 아닌 정수들의 최소공배수 (빈 목록은 1)"""
    return reduce(lambda x, y: abs(x * y) // math.gcd(x, y), values, 1)


def euler_phi(n: int) -> int:
    """오일러 φ 함수"""
    result = n
    for p in prime_divisors(n):
        result -= result // p
    return result


def primorial(h: int) -> int:
    """[1, h] 구간의 소수들의 곱 Π_h"""
    return reduce(lambda x, y: x * y, primes_up_to(h), 1)
