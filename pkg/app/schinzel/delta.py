"""
δ 인증서 모듈

ΣP_i·Z[y] ∩ Z 의 0이 아닌 원소 δ를 분수체 위 확장 유클리드와 분모 소거로 구하고,
PID(ℤ, F_p[u])에서는 차수 제한 격자의 HNF로 생성원 δ_D를 읽어냅니다.
"""

from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

from app.arith.integers import lcm
from app.arith.lattice import IntMatrix, hermite_normal_form, pivot_columns
from app.config import settings
from app.errors import (
    CapExceeded,
    CommonFactor,
    PreconditionViolation,
    RingMismatch,
    VerificationFailure,
    ZeroInput,
)
from app.polys.euclid import iterated_gcd_over_field, over_fraction_field, resultant
from app.polys.poly import Poly, PolyRing
from app.polys.rings import ZZ, PrimeField, Ring
from app.schemas.certificates import BezoutCertificate, DeltaResult
from common.utils.logger import get_logger

logger = get_logger(__name__)


def is_pid(Z: Ring) -> bool:
    """Z가 ℤ 또는 F_p[u]인지 여부"""
    return Z == ZZ or (isinstance(Z, PolyRing) and isinstance(Z.base, PrimeField))


def check_family(polys: Sequence[Poly], minimum: int = 2) -> PolyRing:
    """
    다항식 족의 공통 전제 조건을 검사하고 공통 환을 반환합니다.

    Raises:
        PreconditionViolation: 다항식 수가 minimum 미만인 경우
        RingMismatch: 환이 서로 다른 경우
        ZeroInput: 영다항식이 있는 경우
    """
    if len(polys) < minimum:
        raise PreconditionViolation(
            f"다항식이 {minimum}개 이상 필요합니다: {len(polys)}개", count=len(polys)
        )
    ring = polys[0].ring
    for P in polys:
        if P.ring != ring:
            raise RingMismatch(f"서로 다른 환의 다항식입니다: {ring.name}, {P.ring.name}")
        if P.is_zero():
            raise ZeroInput("영다항식은 허용되지 않습니다")
    return ring


def check_coprime_over_field(polys: Sequence[Poly]) -> None:
    """
    Raises:
        CommonFactor: 분수체 위 gcd의 차수가 1 이상인 경우
    """
    g = iterated_gcd_over_field(polys)
    if g.degree >= 1:
        raise CommonFactor(
            f"분수체 위에서 공통 인수 {g}가 있습니다",
            common_factor=g,
        )


def _clear_denominators(Z: Ring, values: List[Any]) -> Tuple[Any, List[Any]]:
    """
    분수체 원소들에 공통 분모 L을 곱해 Z의 원소로 만듭니다.

    Returns:
        (L, [L·v for v in values]) 단, ℤ[u]에서는 정수 분모까지 소거한 배수
    """
    if Z == ZZ:
        L = lcm(Fraction(v).denominator for v in values)
        return L, [ZZ.convert(Fraction(v) * L) for v in values]

    K = Z.fraction_field().base
    L = K.one
    for v in values:
        L = K.exquo(K.mul(L, v.den), K.gcd(L, v.den))
    cleared = [K.mul(v.num, K.exquo(L, v.den)) for v in values]
    if K == Z:
        return L, cleared

    # Z = ℤ[u]: ℚ[u] 계수의 정수 분모를 한 번 더 소거
    M = lcm(Fraction(c).denominator for q in [L] + cleared for c in q.coeffs)
    return Z.convert(K.scale(L, Fraction(M))), [
        Z.convert(K.scale(q, Fraction(M))) for q in cleared
    ]


def verify_certificate(cert: BezoutCertificate, polys: Sequence[Poly]) -> bool:
    """ΣV_i·P_i = δ 를 정확히 다시 계산합니다."""
    if len(cert.cofactors) != len(polys) or not polys:
        return False
    R = polys[0].ring
    try:
        total = R.zero
        for V, P in zip(cert.cofactors, polys):
            total = R.add(total, R.mul(R.convert(V), R.convert(P)))
        return total == R.constant(cert.delta)
    except (RingMismatch, TypeError):
        return False


def bezout_delta(polys: Sequence[Poly]) -> BezoutCertificate:
    """
    Bézout 인증서 ΣV_i·P_i = δ 를 계산합니다.

    분수체 위에서 두 항 확장 유클리드를 접어(fold) 1의 표현을 얻은 뒤
    모든 여인수 분모의 최소공배수를 곱합니다. s = 2이고 Z가 PID이면
    종결식 ρ도 계산해 δ | ρ를 확인합니다.

    Args:
        polys: Z[y]의 다항식 P_1, ..., P_s (Z ∈ {ℤ, F_p[u], ℚ[u], ℤ[u]})

    Raises:
        CommonFactor: 분수체 위에서 공통 인수가 있는 경우
        VerificationFailure: 인증서 재검증 실패
    """
    R = check_family(polys)
    Z = R.base
    check_coprime_over_field(polys)

    Fs = [over_fraction_field(P) for P in polys]
    F = Fs[0].ring
    g, cofactors = Fs[0], [F.one]
    for P in Fs[1:]:
        g, a, b = F.ext_gcd(g, P)
        cofactors = [F.mul(a, V) for V in cofactors] + [b]
    if g.degree != 0:
        raise CommonFactor(f"분수체 위에서 공통 인수 {g}가 있습니다", common_factor=g)

    flat = [c for V in cofactors for c in V.coeffs]
    delta, cleared = _clear_denominators(Z, flat)
    out: List[Poly] = []
    k = 0
    for V in cofactors:
        out.append(Poly(R, cleared[k : k + len(V.coeffs)]))
        k += len(V.coeffs)

    rho = None
    if len(polys) == 2 and is_pid(Z) and min(P.degree for P in polys) >= 1:
        rho = resultant(polys[0], polys[1])
        if not Z.divides(delta, rho):
            raise VerificationFailure(f"δ = {delta}가 종결식 {rho}를 나누지 않습니다")

    cert = BezoutCertificate(cofactors=out, delta=delta, resultant=rho, verified=False)
    if not verify_certificate(cert, polys):
        raise VerificationFailure("Bézout 인증서 재검증에 실패했습니다")
    logger.debug(f"Bézout δ = {Z.to_str(delta)} ({Z.name})")
    return cert.model_copy(update={"verified": True})


def lattice_rows(polys: Sequence[Poly], degree_bound: int) -> List[List[Any]]:
    """
    y^k·P_i (k ≤ D)의 계수 벡터를 행으로 하는 행렬 (최고차 열이 먼저, 상수 열이 마지막)
    """
    width = max(P.degree for P in polys) + degree_bound + 1
    Z = polys[0].ring.base
    rows = []
    for P in polys:
        for k in range(degree_bound + 1):
            coeffs = [Z.zero] * k + list(P.coeffs)
            coeffs += [Z.zero] * (width - len(coeffs))
            rows.append(list(reversed(coeffs)))
    return rows


def minimal_delta_bounded(polys: Sequence[Poly], degree_bound: int) -> Any:
    """
    차수 ≤ D 여인수로 만들 수 있는 상수들의 생성원 δ_D

    격자 행렬의 HNF에서 상수 열에 피벗이 있는 행의 피벗을 읽습니다.
    그런 행이 없으면(상한 D에서 상수가 나오지 않으면) 0을 반환합니다.

    Raises:
        RingMismatch: Z가 ℤ 또는 F_p[u]가 아닌 경우
        CommonFactor: 분수체 위 공통 인수
        CapExceeded: 행렬 원소 수가 LATTICE_CAP을 넘는 경우
    """
    R = check_family(polys)
    Z = R.base
    if not is_pid(Z):
        raise RingMismatch(f"δ_D는 ℤ 또는 F_p[u]에서만 계산합니다: {Z.name}")
    if degree_bound < 0:
        raise PreconditionViolation(f"차수 상한은 0 이상이어야 합니다: {degree_bound}")
    check_coprime_over_field(polys)

    rows = lattice_rows(polys, degree_bound)
    cap = settings.scaled("LATTICE_CAP")
    size = len(rows) * len(rows[0])
    if size > cap:
        raise CapExceeded(f"격자 행렬 원소 수 {size}가 상한 {cap}을 넘습니다", cap=cap)

    H, _ = hermite_normal_form(IntMatrix.from_rows(rows, Z))
    last = H.ncols - 1
    for i, j in pivot_columns(H):
        if j == last:
            return H.rows[i][j]
    return Z.zero


def default_degree_bound(polys: Sequence[Poly]) -> int:
    return sum(P.degree for P in polys)


def compute_delta(
    polys: Sequence[Poly], degree_bound: Optional[int] = None
) -> DeltaResult:
    """
    Bézout δ와 (PID이면) δ_D를 함께 계산합니다.

    D의 기본값은 Σ deg P_i이며 인증서 여인수 차수보다 작으면 그 차수로 올립니다.
    """
    cert = bezout_delta(polys)
    Z = polys[0].ring.base
    bound = default_degree_bound(polys) if degree_bound is None else degree_bound
    if degree_bound is None:
        bound = max(bound, cert.max_cofactor_degree)
    if not is_pid(Z):
        return DeltaResult(bezout=cert, degree_bound_used=bound)

    minimal = minimal_delta_bounded(polys, bound)
    divides = None
    if not Z.is_zero(minimal):
        divides = Z.divides(minimal, cert.delta)
        if bound >= cert.max_cofactor_degree and not divides:
            raise VerificationFailure(
                f"δ_D = {minimal}가 Bézout δ = {cert.delta}를 나누지 않습니다"
            )
    return DeltaResult(
        bezout=cert,
        minimal_delta=None if Z.is_zero(minimal) else minimal,
        degree_bound_used=bound,
        divides_bezout=divides,
    )


def delta_of(polys: Sequence[Poly]) -> Any:
    """
    가장 작은 알려진 δ (PID에서는 δ_D, 그 외에는 Bézout δ)
    """
    result = compute_delta(polys)
    if result.minimal_delta is not None:
        return result.minimal_delta
    return result.bezout.delta
