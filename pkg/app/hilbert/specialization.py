"""
기약 특수화 스캔 모듈

- ℤ: t = b₀ + a₀·k (k = 0, ±1, ±2, ...)를 대입하고 Kronecker로 ℤ[y] 기약성을 판정합니다.
- ℤ[u]: u ↦ B 평가로 기약성을 인증하거나, 인수 후보를 B진 균형 전개로 되돌려
  ℤ[u][y]에서 정확히 나누어 봅니다 (한계가 있는 탐색).
- F_p[u]: y ↦ u^N 치환 후 Berlekamp 인수의 부분곱을 모두 되돌려 봅니다.
"""

from itertools import count, product
from typing import Any, Iterator, List, Optional, Sequence

from app.arith.integers import factorize
from app.config import settings
from app.errors import (
    BudgetExceeded,
    NotDivisible,
    RingMismatch,
    ScanExhausted,
    VerificationFailure,
)
from app.hilbert.progression import check_bivariate_family
from app.polys.factor import (
    factor_over_prime_field,
    is_irreducible_over_z,
    kronecker_factor,
)
from app.polys.poly import Poly, PolyRing, degree_in
from app.polys.rings import ZZ, PrimeField
from app.schemas.witnesses import (
    ProgressionWitness,
    SpecializationEntry,
    SpecializationReport,
)
from app.schinzel.witness import box_elements
from common.utils.logger import get_logger

logger = get_logger(__name__)

EVALUATION_POINTS = 3


def status_over_z(F: Poly) -> str:
    """ℤ[y]의 다항식 F의 기약성 상태"""
    if F.degree < 1:
        return "constant"
    if F.ring.content(F) != 1:
        return "imprimitive"
    return "irreducible" if kronecker_factor(F).is_irreducible else "reducible"


def _progression(witness: ProgressionWitness) -> Iterator[int]:
    yield witness.b0
    for k in count(1):
        yield witness.b0 + k * witness.a0
        yield witness.b0 - k * witness.a0


def _scan(
    polys: Sequence[Poly],
    candidates: Iterator[Any],
    classify,
    want: int,
    cap: int,
    area: str,
    strict: bool = False,
    **report: Any,
) -> SpecializationReport:
    """
    후보 m을 차례로 분류합니다. Ctrl-C로 중단되면 그때까지의 항목으로
    부분 보고(interrupted, exhausted)를 반환합니다.

    Raises:
        ScanExhausted: strict이고 중단 없이 상한에 도달했지만 적중 수가 부족한 경우
    """
    entries: List[SpecializationEntry] = []
    hits: List[Any] = []
    interrupted = False
    try:
        for m in candidates:
            if len(entries) >= cap or len(hits) >= want:
                break
            statuses = [classify(P.eval_coeffs(m)) for P in polys]
            hit = all(s == "irreducible" for s in statuses)
            entries.append(SpecializationEntry(m=m, statuses=statuses, hit=hit))
            if hit:
                hits.append(m)
    except KeyboardInterrupt:
        interrupted = True
        logger.warning(f"[{area}] 중단 요청: 스캔 {len(entries)}개까지의 부분 보고")

    exhausted = interrupted or len(hits) < want
    if exhausted and strict and not interrupted:
        raise ScanExhausted(
            f"[{area}] 적중 {len(hits)}/{want} (스캔 {len(entries)}개)",
            hits=len(hits),
            want=want,
            scanned=len(entries),
        )
    if exhausted and not interrupted:
        logger.warning(f"[{area}] 스캔 상한 도달: 적중 {len(hits)}/{want}")
    elif not exhausted:
        logger.info(f"[{area}] 적중 {len(hits)}개 (스캔 {len(entries)}개)")
    return SpecializationReport(
        entries=entries,
        hits=hits,
        want=want,
        scan_cap=cap,
        exhausted=exhausted,
        interrupted=interrupted,
        **report,
    )


def irreducible_specializations(
    polys: Sequence[Poly],
    progression: ProgressionWitness,
    want: int,
    cap: Optional[int] = None,
    strict: bool = False,
) -> SpecializationReport:
    """
    원시성 등차수열 위의 m에서 모든 P_i(m, y)가 ℤ[y]에서 기약인 m을 찾습니다.

    적중한 m은 Kronecker로 한 번 더 확인합니다.
    적중 수가 want보다 적으면 exhausted 플래그를 세운 보고를 반환하고,
    strict이면 ScanExhausted를 던집니다.
    """
    check_bivariate_family(polys)
    cap = settings.scaled("SCAN_CAP") if cap is None else cap
    report = _scan(
        polys,
        _progression(progression),
        status_over_z,
        want,
        cap,
        "hilbert-scan",
        strict=strict,
        search_bound={
            "method": "kronecker",
            "degree_cap": settings.KRONECKER_DEGREE_CAP,
        },
    )
    for m in report.hits:
        if not all(is_irreducible_over_z(P.eval_coeffs(m)) for P in polys):
            raise VerificationFailure(f"m = {m}의 기약성 재검증에 실패했습니다", m=m)
    return report


# ---- ℤ[u][y] ----


def _balanced_digits(v: int, B: int) -> List[int]:
    """v = Σ d_k·B^k, |d_k| ≤ B/2"""
    digits = []
    while v:
        r = v % B
        if r > B // 2:
            r -= B
        digits.append(r)
        v = (v - r) // B
    return digits


def _evaluate_u(F: Poly, B: int) -> Poly:
    Zy = PolyRing(ZZ, F.ring.var)
    return Poly(Zy, [c.eval(B) for c in F.coeffs])


def _lift(g: Poly, B: int, R: PolyRing) -> Poly:
    Z = R.base
    return Poly(R, [Z.from_coeffs(_balanced_digits(c, B)) for c in g.coeffs])


def _subset_products(factors: Sequence[Poly], limit: int) -> Iterator[Poly]:
    n = len(factors)
    for mask in range(1, 2**n - 1):
        g = None
        for k in range(n):
            if mask >> k & 1:
                g = factors[k] if g is None else g * factors[k]
        if g is not None and 1 <= g.degree <= limit:
            yield g


def _status_over_integer_polyring(F: Poly) -> str:
    """
    ℤ[u][y]의 F에 대한 한계 있는 기약성 판정

    u ↦ B에서 F(B, y)가 기약이고 deg_y가 보존되면 기약으로 인증합니다.
    그렇지 않으면 F(B, y)의 인수 부분곱을 B진 균형 전개로 ℤ[u][y]에 되돌려
    정확히 나누어지는지 확인합니다.
    """
    R = F.ring
    Z = R.base
    if F.degree < 1:
        return "constant"
    if not Z.is_unit(R.content(F)):
        return "imprimitive"

    height = max(abs(c) for a in F.coeffs for c in a.coeffs)
    start = 2 * height * 2**F.degree + 1
    for B in range(start, start + EVALUATION_POINTS):
        if F.lc.eval(B) == 0:
            continue
        f = _evaluate_u(F, B)
        factorization = kronecker_factor(f)
        if factorization.is_irreducible:
            return "irreducible"
        factors = [g for g, e in factorization.factors for _ in range(e)]
        scales = factorize(abs(factorization.unit)).divisors()
        for g in _subset_products(factors, F.degree // 2):
            for c in scales:
                for sign in (1, -1):
                    G = _lift(g * (sign * c), B, R)
                    if G.degree < 1:
                        continue
                    try:
                        R.exquo(F, G)
                    except NotDivisible:
                        continue
                    return "reducible"
    return "irreducible"


# ---- F_p[u][y] ----


def _status_over_prime_polyring(F: Poly) -> str:
    """
    F_p[u][y]의 F에 대한 기약성 판정

    N > deg_u F로 f(u) = F(u, u^N)을 만들어 인수분해하고, 인수의 모든 부분곱을
    u^k ↦ u^(k mod N)·y^(k div N)로 되돌려 y-차수 1..deg_y/2인 인수가 있는지 봅니다.

    Raises:
        BudgetExceeded: 부분곱 후보 수가 KRONECKER_BUDGET을 넘는 경우
    """
    R = F.ring
    Z = R.base
    if F.degree < 1:
        return "constant"
    if not Z.is_unit(R.content(F)):
        return "imprimitive"

    N = degree_in(F, Z.var) + 1
    flat = [Z.base.zero] * (N * F.degree + N)
    for j, c in enumerate(F.coeffs):
        for k, a in enumerate(c.coeffs):
            flat[j * N + k] = a
    factorization = factor_over_prime_field(Poly(Z, flat))

    candidates = 1
    for _, e in factorization.factors:
        candidates *= e + 1
    budget = settings.scaled("KRONECKER_BUDGET")
    if candidates > budget:
        raise BudgetExceeded(f"부분곱 후보 {candidates}개가 예산을 넘습니다", budget=budget)

    for exponents in product(*(range(e + 1) for _, e in factorization.factors)):
        g = Z.one
        for (f, _), k in zip(factorization.factors, exponents):
            g = g * Z.pow(f, k)
        if g.degree // N < 1 or g.degree // N > F.degree // 2:
            continue
        rows: List[List[Any]] = [[] for _ in range(g.degree // N + 1)]
        for k, a in enumerate(g.coeffs):
            rows[k // N].append(a)
        G = Poly(R, [Poly(Z, row) for row in rows])
        try:
            R.exquo(F, G)
        except NotDivisible:
            continue
        return "reducible"
    return "irreducible"


def specialize_polyring_irreducible(
    polys: Sequence[Poly],
    degree: int = 1,
    height: int = 3,
    want: int = 5,
    cap: Optional[int] = None,
    strict: bool = False,
) -> SpecializationReport:
    """
    Z ∈ {ℤ[u], F_p[u]}에서 P(m, y)가 Z[y]에서 기약인 m을 상자 안에서 찾습니다.

    F_p[u] 결과는 탐색 증거로만 표시합니다(evidence_only).

    Args:
        polys: Z[t][y]의 다항식
        degree: m(u)의 최대 차수
        height: ℤ[u]에서 m(u) 계수의 최대 절댓값
        strict: 적중 수가 부족하면 ScanExhausted를 던질지 여부
    """
    R = polys[0].ring
    for P in polys:
        if P.ring != R or P.is_zero():
            raise RingMismatch(f"같은 환의 0이 아닌 다항식이 필요합니다: {R.name}")
    T = R.base
    if not (isinstance(T, PolyRing) and isinstance(T.base, PolyRing) and T.depth == 2):
        raise RingMismatch(f"Z[t][y] (Z = ℤ[u] 또는 F_p[u]) 다항식이 필요합니다: {R.name}")
    Z = T.base
    if Z.base == ZZ:
        classify, evidence_only = _status_over_integer_polyring, False
        bound = {"method": "evaluation", "points": EVALUATION_POINTS}
    elif isinstance(Z.base, PrimeField):
        classify, evidence_only = _status_over_prime_polyring, True
        budget = settings.scaled("KRONECKER_BUDGET")
        bound = {"method": "substitution", "budget": budget}
    else:
        raise RingMismatch(f"지원하지 않는 계수 환입니다: {Z.name}")
    if any(P.degree < 1 for P in polys):
        raise RingMismatch("y에 대한 차수가 1 이상이어야 합니다")

    cap = settings.scaled("SCAN_CAP") if cap is None else cap
    bound.update({"degree": degree, "height": height})
    return _scan(
        polys,
        box_elements(Z, degree=degree, height=height),
        classify,
        want,
        cap,
        "polyring-scan",
        strict=strict,
        evidence_only=evidence_only,
        search_bound=bound,
    )
