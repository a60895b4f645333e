"""
다항식 인수분해 모듈

- F_p 위: square-free 분해 + Berlekamp (예산 제한)
- ℤ 위: Kronecker 보간법 (차수 상한 + 후보 예산)
- 독립 검증용 오라클: 모닉 다항식 전수 시행 나눗셈
"""

from itertools import product
from typing import Any, Iterator, List, Optional, Sequence, Tuple

from pydantic import Field

from app.arith.integers import factorize
from app.config import settings
from app.errors import (
    BudgetExceeded,
    CapExceeded,
    NotDivisible,
    RingMismatch,
    ZeroInput,
)
from app.polys.galois import berlekamp_cost, gf_berlekamp, gf_sqf_list
from app.polys.poly import Poly, PolyRing
from app.polys.quotient import QuotientRing
from app.polys.rings import ZZ, PrimeField, Ring
from app.schemas.base import BaseRecord
from common.utils.logger import get_logger

logger = get_logger(__name__)


class Factorization(BaseRecord):
    """
    다항식의 기약 인수분해

    Attributes:
        unit: 계수 환의 단원 부분 (ℤ 위에서는 부호가 붙은 content)
        factors: (기약 인수, 지수) 목록. 체 위에서는 모닉, ℤ 위에서는 원시이며 최고차 계수 양수
    """

    unit: Any
    factors: List[Tuple[Poly, int]] = Field(default_factory=list)

    def expand(self, ring: PolyRing) -> Poly:
        """단원과 인수 거듭제곱의 곱을 복원합니다."""
        result = ring.constant(self.unit)
        for f, e in self.factors:
            result = result * ring.pow(f, e)
        return result

    @property
    def is_irreducible(self) -> bool:
        """인수가 정확히 하나이고 지수가 1인지 여부 (단원 부분은 별도로 판단)"""
        return len(self.factors) == 1 and self.factors[0][1] == 1


def _sort_key(factor: Tuple[Poly, int]) -> Tuple[int, Tuple[Any, ...]]:
    f, _ = factor
    return f.degree, tuple(str(c) for c in f.coeffs)


# ---- F_p 위 인수분해 ----


def _require_prime_field(P: Poly) -> int:
    if not isinstance(P.ring.base, PrimeField):
        raise RingMismatch(f"F_p 위의 다항식이 아닙니다: {P.ring.name}")
    return P.ring.base.p


def factor_over_prime_field(P: Poly, budget: Optional[int] = None) -> Factorization:
    """
    F_p 위의 완전 기약 인수분해

    Args:
        P: F_p 계수의 일변수 다항식 (F_p[u]의 원소 포함)
        budget: 연산 예산 (기본값: 설정의 FIELD_FACTOR_BUDGET)

    Raises:
        ZeroInput: P = 0
        BudgetExceeded: 예상 연산량이 예산을 넘는 경우
    """
    p = _require_prime_field(P)
    if P.is_zero():
        raise ZeroInput("영다항식은 인수분해할 수 없습니다")
    budget = settings.scaled("FIELD_FACTOR_BUDGET") if budget is None else budget
    R = P.ring

    lc, sqf = gf_sqf_list(list(P.coeffs), p)
    if P.degree == 0:
        return Factorization(unit=P.lc, factors=[])

    factors: List[Tuple[Poly, int]] = []
    spent = 0
    for g, e in sqf:
        spent += berlekamp_cost(g, p)
        if spent > budget:
            raise BudgetExceeded(
                f"F_{p} 인수분해 예산 초과: 차수 {P.degree}", budget=budget
            )
        factors.extend((Poly(R, h), e) for h in gf_berlekamp(g, p))
    factors.sort(key=_sort_key)
    return Factorization(unit=lc, factors=factors)


def monic_polys(R: PolyRing, degree: int) -> Iterator[Poly]:
    """F_p 위 주어진 차수의 모든 모닉 다항식"""
    p = R.base.characteristic
    for lower in product(range(p), repeat=degree):
        yield Poly(R, list(reversed(lower)) + [1])


def trial_factor(P: Poly, budget: Optional[int] = None) -> Optional[Poly]:
    """
    차수 deg(P)/2 이하의 모든 모닉 다항식으로 나누어 보아 가장 작은 인수를 찾습니다.

    Raises:
        BudgetExceeded: 후보 수가 예산을 넘는 경우
    """
    p = _require_prime_field(P)
    budget = settings.scaled("FIELD_FACTOR_BUDGET") if budget is None else budget
    R = P.ring
    tried = 0
    for d in range(1, P.degree // 2 + 1):
        tried += p**d
        if tried > budget:
            raise BudgetExceeded(f"시행 나눗셈 후보 수가 예산을 넘었습니다: {tried}", budget=budget)
        for candidate in monic_polys(R, d):
            if R.divides(candidate, P):
                return candidate
    return None


def is_irreducible_by_trial(P: Poly, budget: Optional[int] = None) -> bool:
    """전수 시행 나눗셈에 의한 F_p 위 기약성 오라클"""
    if P.degree < 1:
        return False
    return trial_factor(P, budget) is None


def is_irreducible_over_prime_field(P: Poly) -> bool:
    if P.degree < 1:
        return False
    return factor_over_prime_field(P).is_irreducible


def irreducible_monics(R: PolyRing, max_degree: int) -> Iterator[Poly]:
    """F_p 위 차수 max_degree 이하의 모닉 기약 다항식 (차수 오름차순)"""
    for d in range(1, max_degree + 1):
        for candidate in monic_polys(R, d):
            if is_irreducible_over_prime_field(candidate):
                yield candidate


def enumerate_residues(Q: Ring, cap: Optional[int] = None) -> Iterator[Any]:
    """
    ℤ/(p) 또는 F_p[u]/(f)의 모든 잉여류를 정확히 한 번씩 나열합니다.

    Raises:
        CapExceeded: 잉여류 개수가 상한을 넘는 경우
    """
    cap = settings.scaled("RESIDUE_CAP") if cap is None else cap
    if isinstance(Q, PrimeField):
        size = Q.p
    elif isinstance(Q, QuotientRing):
        size = Q.size
    else:
        raise RingMismatch(f"유한 몫환이 아닙니다: {Q.name}")
    if size > cap:
        raise CapExceeded(f"{Q.name}의 잉여류 수 {size}가 상한 {cap}을 넘습니다", cap=cap)
    return Q.elements()


# ---- ℤ 위 Kronecker 인수분해 ----


class _KroneckerSearch:
    """Kronecker 보간 탐색 한 번의 상태 (예산 카운터 포함)"""

    def __init__(self, budget: int):
        self.budget = budget
        self.spent = 0

    def spend(self, n: int = 1):
        self.spent += n
        if self.spent > self.budget:
            raise BudgetExceeded(
                f"Kronecker 후보 예산 초과: {self.spent}", budget=self.budget
            )

    def split(self, F: Poly) -> Optional[Poly]:
        """
        원시 다항식 F의 최소 차수 비자명 인수를 찾습니다. 없으면 None.

        각 차수 d에 대해 약수 개수가 적은 d+1개 정수점을 고르고,
        값의 부호 있는 약수 조합을 Newton 차분으로 보간합니다.
        차분이 정수가 아니면 가지를 자릅니다.
        """
        n = F.degree
        radius = n + 4
        points: List[Tuple[int, int, List[int]]] = []
        for x in sorted(range(-radius, radius + 1), key=lambda v: (abs(v), v)):
            value = F.eval(x)
            if value == 0:
                return F.ring.from_coeffs([-x, 1])
            divisors = factorize(value).divisors()
            points.append((len(divisors), x, divisors))
        points.sort(key=lambda item: (item[0], abs(item[1])))

        for d in range(1, n // 2 + 1):
            chosen = points[: d + 1]
            xs = [x for _, x, _ in chosen]
            choices = [
                divisors if k == 0 else [s * v for v in divisors for s in (1, -1)]
                for k, (_, _, divisors) in enumerate(chosen)
            ]
            factor = self._search(F, xs, choices)
            if factor is not None:
                return factor
        return None

    def _search(
        self, F: Poly, xs: Sequence[int], choices: List[List[int]]
    ) -> Optional[Poly]:
        lc = F.lc

        def descend(k: int, diagonal: List[int], newton: List[int]) -> Optional[Poly]:
            if k == len(xs):
                self.spend()
                top = newton[-1]
                if top == 0 or lc % top:
                    return None
                G = _from_newton(F.ring, xs, newton)
                try:
                    F.ring.exquo(F, G)
                except NotDivisible:
                    return None
                return G if G.lc > 0 else -G
            for c in choices[k]:
                self.spend()
                entries = [c]
                ok = True
                for i in range(1, k + 1):
                    num = entries[i - 1] - diagonal[i - 1]
                    den = xs[k] - xs[k - i]
                    if num % den:
                        ok = False
                        break
                    entries.append(num // den)
                if not ok:
                    continue
                found = descend(k + 1, entries, newton + [entries[-1]])
                if found is not None:
                    return found
            return None

        return descend(0, [], [])


def _from_newton(R: PolyRing, xs: Sequence[int], newton: Sequence[int]) -> Poly:
    """Newton 형식 계수 a_k로부터 Σ a_k ∏_{i<k} (y - x_i)를 전개합니다."""
    G = R.constant(newton[-1])
    for k in range(len(newton) - 2, -1, -1):
        G = G * R.from_coeffs([-xs[k], 1]) + newton[k]
    return G


def kronecker_factor(
    P: Poly, budget: Optional[int] = None, degree_cap: Optional[int] = None
) -> Factorization:
    """
    ℤ[y] 위의 완전 인수분해 (Kronecker 방법)

    Returns:
        Factorization: unit은 부호가 붙은 content, 인수는 원시 기약이며 최고차 계수 양수

    Raises:
        ZeroInput: P = 0
        BudgetExceeded: 차수 상한을 넘거나 후보 예산이 소진된 경우
    """
    R = P.ring
    if R.base != ZZ:
        raise RingMismatch(f"ℤ 위의 다항식이 아닙니다: {R.name}")
    if P.is_zero():
        raise ZeroInput("영다항식은 인수분해할 수 없습니다")
    degree_cap = settings.KRONECKER_DEGREE_CAP if degree_cap is None else degree_cap
    if P.degree > degree_cap:
        raise BudgetExceeded(
            f"Kronecker 차수 상한 초과: {P.degree} > {degree_cap}", degree_cap=degree_cap
        )
    budget = settings.scaled("KRONECKER_BUDGET") if budget is None else budget
    search = _KroneckerSearch(budget)

    content, F = R.content_and_primitive(P)
    if F.lc < 0:
        content, F = -content, -F

    found: List[Poly] = []
    while F.degree > 0 and F.coeffs[0] == 0:
        found.append(R.gen)
        F = R.exquo(F, R.gen)

    stack = [F] if F.degree > 0 else []
    while stack:
        G = stack.pop()
        if G.degree <= 1:
            found.append(G)
            continue
        H = search.split(G)
        if H is None:
            found.append(G)
            continue
        found.append(H)
        stack.append(R.exquo(G, H))

    counts: dict[Poly, int] = {}
    for f in found:
        counts[f] = counts.get(f, 0) + 1
    logger.debug(f"Kronecker 분해 완료: {P} (후보 {search.spent}개)")
    return Factorization(unit=content, factors=sorted(counts.items(), key=_sort_key))


def is_irreducible_over_z(P: Poly, budget: Optional[int] = None) -> bool:
    """
    ℤ[y]에서의 기약성: 차수 ≥ 1, content가 단원, ℚ 위 기약 (Kronecker)
    """
    if P.degree < 1:
        return False
    content, F = P.ring.content_and_primitive(P)
    if content != 1:
        return False
    result = kronecker_factor(F, budget=budget)
    return result.is_irreducible
