"""
유클리드 계열 알고리즘

분수체 위의 gcd/확장 gcd, 부분 종결식(subresultant) 기반 종결식,
content/primitive 분해를 제공합니다.
"""

from typing import Any, List, Sequence, Tuple

from app.errors import Incompatible, RingMismatch, ZeroInput
from app.polys.poly import Poly, PolyRing


def over_fraction_field(P: Poly) -> Poly:
    """P를 계수 환의 분수체 위 다항식으로 봅니다. (ℤ[y] → ℚ[y], F_p[u][y] → F_p(u)[y])"""
    R = P.ring
    if R.base.is_field:
        return P
    return PolyRing(R.base.fraction_field(), R.var).convert(P)


def gcd_over_field(P: Poly, Q: Poly) -> Poly:
    """
    분수체 위의 모닉 gcd

    계수 환이 체가 아니면 Gauss 보조정리로 원시 부분의 PRS gcd를 구한 뒤
    분수체로 옮겨 모닉화합니다. gcd(0, 0) = 0.
    """
    if P.ring != Q.ring:
        raise RingMismatch(f"서로 다른 환의 다항식입니다: {P.ring.name}, {Q.ring.name}")
    g = P.ring.gcd(P, Q)
    if g.is_zero():
        return over_fraction_field(g)
    G = over_fraction_field(g)
    return G.ring.normalize(G)


def ext_gcd_over_field(P: Poly, Q: Poly) -> Tuple[Poly, Poly, Poly]:
    """
    분수체 위의 확장 유클리드

    Returns:
        (g, A, B): A·P + B·Q = g = gcd_over_field(P, Q)
    """
    if P.ring != Q.ring:
        raise RingMismatch(f"서로 다른 환의 다항식입니다: {P.ring.name}, {Q.ring.name}")
    F = over_fraction_field(P)
    return F.ring.ext_gcd(F, over_fraction_field(Q))


def iterated_gcd_over_field(polys: Sequence[Poly]) -> Poly:
    """여러 다항식의 분수체 위 gcd (접기)"""
    g = polys[0].ring.zero
    for P in polys:
        g = P.ring.gcd(g, P)
    return gcd_over_field(g, g.ring.zero)


def content_and_primitive(P: Poly) -> Tuple[Any, Poly]:
    """
    content·primitive = P 인 분해

    content는 ℤ에서 양수, F_p[u]에서 모닉으로 정규화됩니다. 영다항식은 (0, 0).
    """
    return P.ring.content_and_primitive(P)


def prem(P: Poly, Q: Poly) -> Poly:
    return P.ring.prem(P, Q)


def resultant(P: Poly, Q: Poly) -> Any:
    """
    부분 종결식 알고리즘으로 Res(P, Q)를 계산합니다.

    계수 환은 gcd가 있는 정역(ℤ, ℚ, F_p, F_p[u], ℤ[u], ℤ[t] 등)이어야 합니다.
    부호 규약은 Sylvester 행렬식과 같으며 Res(y, y+2) = 2, Res(y-3, y-5) = -2 입니다.
    상수 인수에 대해서는 Res(P, c) = c^deg P 입니다.

    Raises:
        ZeroInput: 인수 중 하나가 영다항식인 경우
    """
    if P.ring != Q.ring:
        raise RingMismatch(f"서로 다른 환의 다항식입니다: {P.ring.name}, {Q.ring.name}")
    if P.is_zero() or Q.is_zero():
        raise ZeroInput("영다항식의 종결식은 정의하지 않습니다")
    R = P.ring
    D = R.base
    if Q.degree == 0:
        return D.pow(Q.lc, P.degree)
    if P.degree == 0:
        return D.pow(P.lc, Q.degree)

    a, A = R.content_and_primitive(P)
    b, B = R.content_and_primitive(Q)
    g = h = D.one
    s = D.one
    t = D.mul(D.pow(a, Q.degree), D.pow(b, P.degree))
    if A.degree < B.degree:
        A, B = B, A
        if A.degree % 2 and B.degree % 2:
            s = D.neg(s)

    while True:
        delta = A.degree - B.degree
        if A.degree % 2 and B.degree % 2:
            s = D.neg(s)
        r = R.prem(A, B)
        A = B
        B = _exquo_scalar(R, r, D.mul(g, D.pow(h, delta)))
        g = A.lc
        if delta:
            h = D.exquo(D.pow(g, delta), D.pow(h, delta - 1))
        if B.degree <= 0:
            break

    if B.is_zero():
        return D.zero
    h = D.exquo(D.pow(B.lc, A.degree), D.pow(h, A.degree - 1))
    return D.mul(s, D.mul(t, h))


def _exquo_scalar(R: PolyRing, P: Poly, c: Any) -> Poly:
    return Poly(R, [R.base.exquo(x, c) for x in P.coeffs])


def poly_crt(congruences: List[Tuple[Poly, Poly]]) -> Tuple[Poly, Poly]:
    """
    체 위 다항식 환에서의 중국인의 나머지 정리

    Args:
        congruences: (잉여, 법) 쌍, 법은 서로소인 0이 아닌 다항식

    Returns:
        (m, M): 모든 i에 대해 m ≡ r_i (mod f_i), deg m < deg M, M = ∏ f_i (모닉)
    """
    if not congruences:
        raise ZeroInput("합동식이 비어 있습니다")
    R = congruences[0][1].ring
    m, M = R.zero, R.one
    for residue, modulus in congruences:
        if modulus.is_zero():
            raise ZeroInput("CRT 법은 0이 될 수 없습니다")
        modulus = R.normalize(modulus)
        g, s, _ = R.ext_gcd(M, modulus)
        if g.degree > 0:
            raise Incompatible(f"법 {M}와 {modulus}가 서로소가 아닙니다")
        # m + M·s·(r - m) 은 mod M 에서 m, mod f 에서 r
        m = R.add(m, R.mul(R.mul(M, s), R.sub(residue, m)))
        M = R.mul(M, modulus)
        m = R.rem(m, M)
    return m, M
