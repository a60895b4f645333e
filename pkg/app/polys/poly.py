"""
조밀(dense) 일변수 다항식 모듈

Poly는 오름차순 계수 튜플과 자신이 속한 PolyRing을 가집니다.
PolyRing은 Ring을 구현하므로 ℤ[u][y], F_p[u][y], ℤ[u][t][y]처럼 중첩할 수 있습니다.
"""

from dataclasses import dataclass
from typing import Any, Iterable, List, Sequence, Tuple

from app.errors import NotDivisible, RingMismatch, UnknownVariable, ZeroInput
from app.polys.rings import QQ, ZZ, Ring, Term

MAX_NESTING_DEPTH = 3


class Poly:
    """
    불변 조밀 다항식

    Attributes:
        ring: 다항식이 속한 PolyRing
        coeffs: 오름차순 계수 (영다항식은 빈 튜플)
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: "PolyRing", coeffs: Iterable[Any] = ()):
        base = ring.base
        cs = list(coeffs)
        while cs and base.is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly는 불변 객체입니다")

    # ---- 기본 속성 ----

    @property
    def degree(self) -> int:
        """차수 (영다항식은 -1)"""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Any:
        return self.coeffs[-1] if self.coeffs else self.ring.base.zero

    @property
    def var(self) -> str:
        return self.ring.var

    def coeff(self, k: int) -> Any:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.ring.base.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def nonzero_coeffs(self) -> List[Any]:
        base = self.ring.base
        return [c for c in self.coeffs if not base.is_zero(c)]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    # ---- 연산자 ----

    def _lift(self, other: Any) -> "Poly":
        return self.ring.convert(other)

    def __add__(self, other: Any) -> "Poly":
        return self.ring.add(self, self._lift(other))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Poly":
        return self.ring.sub(self, self._lift(other))

    def __rsub__(self, other: Any) -> "Poly":
        return self.ring.sub(self._lift(other), self)

    def __mul__(self, other: Any) -> "Poly":
        return self.ring.mul(self, self._lift(other))

    __rmul__ = __mul__

    def __neg__(self) -> "Poly":
        return self.ring.neg(self)

    def __pow__(self, n: int) -> "Poly":
        return self.ring.pow(self, n)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Poly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        try:
            return self.coeffs == self._lift(other).coeffs
        except (RingMismatch, UnknownVariable, TypeError):
            return False

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __call__(self, m: Any) -> Any:
        return self.eval(m)

    def __str__(self) -> str:
        return self.ring.to_str(self)

    def __repr__(self) -> str:
        return f"Poly({self}, {self.ring.name})"

    # ---- 평가/치환 ----

    def eval(self, m: Any, target: Ring | None = None) -> Any:
        """
        Horner 방식으로 P(m)을 정확히 계산합니다.

        Args:
            m: 계수 환(또는 target 환)의 원소
            target: 계수를 변환해 넣을 확장 환 (예: 몫환 F_p[u]/(π), F_p)

        Raises:
            RingMismatch: m이 대상 환의 원소로 변환되지 않는 경우
        """
        R = target or self.ring.base
        m = R.convert(m)
        acc = R.zero
        for c in reversed(self.coeffs):
            acc = R.add(R.mul(acc, m), R.convert(c))
        return acc

    def eval_coeffs(self, m: Any) -> "Poly":
        """
        계수 다항식의 가장 바깥 변수에 m을 대입합니다.

        P(t, y) ∈ R[t][y] 에서 P(m, y) ∈ R[y] 를 얻을 때 씁니다.
        """
        inner = self.ring.base
        if not isinstance(inner, PolyRing):
            raise RingMismatch(f"{self.ring.name}의 계수는 다항식이 아닙니다")
        target = PolyRing(inner.base, self.ring.var)
        return Poly(target, [c.eval(m) for c in self.coeffs])

    def map_coeffs(self, func, ring: "PolyRing") -> "Poly":
        return Poly(ring, [func(c) for c in self.coeffs])


@dataclass(frozen=True)
class PolyRing(Ring):
    """
    다항식 환 base[var]

    Attributes:
        base: 계수 환
        var: 변수 이름 (y, t, u 중 하나)
    """

    base: Ring
    var: str

    def __post_init__(self):
        if self.base.depth + 1 > MAX_NESTING_DEPTH:
            raise RingMismatch(
                f"다항식 중첩 깊이는 {MAX_NESTING_DEPTH} 이하여야 합니다: {self.var}"
            )
        if self.var in self.base.variables:
            raise RingMismatch(f"변수 {self.var}가 계수 환에 이미 있습니다")

    # ---- Ring 인터페이스 ----

    @property
    def depth(self) -> int:
        return self.base.depth + 1

    @property
    def zero(self) -> Poly:
        return Poly(self, ())

    @property
    def one(self) -> Poly:
        return Poly(self, (self.base.one,))

    @property
    def gen(self) -> Poly:
        return Poly(self, (self.base.zero, self.base.one))

    @property
    def name(self) -> str:
        return f"{self.base.name}[{self.var}]"

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @property
    def variables(self) -> Tuple[str, ...]:
        return (self.var,) + self.base.variables

    def variable(self, name: str) -> Poly:
        if name == self.var:
            return self.gen
        return self.constant(self.base.variable(name))

    def constant(self, c: Any) -> Poly:
        return Poly(self, (self.base.convert(c),))

    def monomial(self, c: Any, k: int) -> Poly:
        return Poly(self, [self.base.zero] * k + [self.base.convert(c)])

    def from_coeffs(self, coeffs: Sequence[Any]) -> Poly:
        return Poly(self, [self.base.convert(c) for c in coeffs])

    def convert(self, x: Any) -> Poly:
        if isinstance(x, Poly):
            if x.ring == self:
                return x
            if x.ring.var == self.var:
                return Poly(self, [self.base.convert(c) for c in x.coeffs])
        return self.constant(x)

    def is_zero(self, a: Poly) -> bool:
        return not a.coeffs

    def add(self, a: Poly, b: Poly) -> Poly:
        B = self.base
        n = max(len(a.coeffs), len(b.coeffs))
        return Poly(self, [B.add(a.coeff(k), b.coeff(k)) for k in range(n)])

    def sub(self, a: Poly, b: Poly) -> Poly:
        B = self.base
        n = max(len(a.coeffs), len(b.coeffs))
        return Poly(self, [B.sub(a.coeff(k), b.coeff(k)) for k in range(n)])

    def neg(self, a: Poly) -> Poly:
        return Poly(self, [self.base.neg(c) for c in a.coeffs])

    def mul(self, a: Poly, b: Poly) -> Poly:
        if not a.coeffs or not b.coeffs:
            return self.zero
        B = self.base
        out = [B.zero] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if B.is_zero(x):
                continue
            for j, y in enumerate(b.coeffs):
                out[i + j] = B.add(out[i + j], B.mul(x, y))
        return Poly(self, out)

    def scale(self, a: Poly, c: Any) -> Poly:
        """계수 환의 원소 c를 곱합니다."""
        return Poly(self, [self.base.mul(c, x) for x in a.coeffs])

    def shift(self, a: Poly, k: int) -> Poly:
        """var^k를 곱합니다."""
        if not a.coeffs:
            return a
        return Poly(self, [self.base.zero] * k + list(a.coeffs))

    def exquo(self, a: Poly, b: Poly) -> Poly:
        if not b.coeffs:
            raise ZeroInput("영다항식으로 나눌 수 없습니다")
        B = self.base
        rem = list(a.coeffs)
        quotient = [B.zero] * max(0, len(rem) - len(b.coeffs) + 1)
        db = b.degree
        for k in range(len(rem) - 1, db - 1, -1):
            if B.is_zero(rem[k]):
                continue
            c = B.exquo(rem[k], b.lc)
            quotient[k - db] = c
            for j, x in enumerate(b.coeffs):
                rem[k - db + j] = B.sub(rem[k - db + j], B.mul(c, x))
        if any(not B.is_zero(x) for x in rem):
            raise NotDivisible(f"{b}는 {a}를 나누지 않습니다")
        return Poly(self, quotient)

    def divmod(self, a: Poly, b: Poly) -> Tuple[Poly, Poly]:
        """
        나머지가 있는 나눗셈 (계수 환이 체이거나 b의 최고차 계수가 단원)

        Raises:
            ZeroInput: b = 0
            RingMismatch: 최고차 계수를 나눌 수 없는 경우
        """
        if not b.coeffs:
            raise ZeroInput("영다항식으로 나눌 수 없습니다")
        B = self.base
        if not B.is_unit(b.lc):
            raise RingMismatch(f"{b}의 최고차 계수가 {B.name}의 단원이 아닙니다")
        inverse = B.unit_inverse(b.lc) if not B.is_field else B.inv(b.lc)
        rem = list(a.coeffs)
        db = b.degree
        quotient = [B.zero] * max(0, len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            if B.is_zero(rem[k]):
                continue
            c = B.mul(rem[k], inverse)
            quotient[k - db] = c
            for j, x in enumerate(b.coeffs):
                rem[k - db + j] = B.sub(rem[k - db + j], B.mul(c, x))
        return Poly(self, quotient), Poly(self, rem[:db] if db > 0 else [])

    def rem(self, a: Poly, b: Poly) -> Poly:
        return self.divmod(a, b)[1]

    def prem(self, a: Poly, b: Poly) -> Poly:
        """
        유사 나머지 prem(a, b) = lc(b)^(deg a - deg b + 1)·a mod b

        계수 환이 체가 아니어도 항상 정의됩니다.
        """
        if not b.coeffs:
            raise ZeroInput("영다항식으로 나눌 수 없습니다")
        B = self.base
        steps = a.degree - b.degree + 1
        if steps <= 0:
            return a
        r = a
        lc_b = b.lc
        done = 0
        while r.coeffs and r.degree >= b.degree:
            k = r.degree - b.degree
            r = self.sub(self.scale(r, lc_b), self.shift(self.scale(b, r.lc), k))
            done += 1
        return self.scale(r, B.pow(lc_b, steps - done))

    def is_unit(self, a: Poly) -> bool:
        return a.degree == 0 and self.base.is_unit(a.coeffs[0])

    def unit_part(self, a: Poly) -> Poly:
        if not a.coeffs:
            return self.one
        return Poly(self, (self.base.unit_part(a.lc),))

    def unit_inverse(self, u: Poly) -> Poly:
        return Poly(self, (self.base.unit_inverse(u.coeffs[0]),))

    def normalize(self, a: Poly) -> Poly:
        if not a.coeffs:
            return a
        return self.scale(a, self.base.unit_inverse(self.base.unit_part(a.lc)))

    # ---- 내용(content)과 gcd ----

    def content(self, a: Poly) -> Any:
        B = self.base
        g = B.zero
        for c in a.coeffs:
            g = B.gcd(g, c)
            if B.is_unit(g):
                return B.normalize(g)
        return B.normalize(g)

    def content_and_primitive(self, a: Poly) -> Tuple[Any, Poly]:
        if not a.coeffs:
            return self.base.zero, a
        c = self.content(a)
        return c, Poly(self, [self.base.exquo(x, c) for x in a.coeffs])

    def primitive(self, a: Poly) -> Poly:
        return self.content_and_primitive(a)[1]

    def gcd(self, a: Poly, b: Poly) -> Poly:
        """
        정규화된 gcd (체 위에서는 모닉 유클리드, 그 외에는 Gauss 보조정리 +
        원시 PRS)
        """
        if not a.coeffs:
            return self.normalize(b)
        if not b.coeffs:
            return self.normalize(a)
        if self.base.is_field:
            while b.coeffs:
                a, b = b, self.rem(a, b)
            return self.normalize(a)

        ca, pa = self.content_and_primitive(a)
        cb, pb = self.content_and_primitive(b)
        c = self.base.gcd(ca, cb)
        if pa.degree < pb.degree:
            pa, pb = pb, pa
        while pb.coeffs:
            pa, pb = pb, self.primitive(self.prem(pa, pb))
        return self.normalize(self.scale(self.primitive(pa), c))

    def ext_gcd(self, a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
        """
        체 위의 확장 유클리드

        Returns:
            (g, s, t): s·a + t·b = g, g는 모닉. 첫 인수가 이미 gcd를 생성하면
            (a/lc(a), 1/lc(a), 0)을 반환합니다.
        """
        if not self.base.is_field:
            raise RingMismatch(f"{self.name}의 계수 환은 체가 아닙니다")
        if not a.coeffs and not b.coeffs:
            return self.zero, self.zero, self.zero
        r0, r1 = a, b
        s0, s1 = self.one, self.zero
        t0, t1 = self.zero, self.one
        while r1.coeffs:
            q, r = self.divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, self.sub(s0, self.mul(q, s1))
            t0, t1 = t1, self.sub(t0, self.mul(q, t1))
        inverse = self.base.inv(r0.lc)
        g = self.scale(r0, inverse)
        if a.coeffs and g.degree == a.degree:
            return g, self.constant(self.base.inv(a.lc)), self.zero
        return g, self.scale(s0, inverse), self.scale(t0, inverse)

    def fraction_field(self) -> Ring:
        from app.polys.quotient import FractionField

        if self.base.is_field:
            return FractionField(self)
        if self.base == ZZ:
            return FractionField(PolyRing(QQ, self.var))
        raise RingMismatch(f"{self.name}의 분수체는 지원하지 않습니다")

    # ---- 렌더링 ----

    def terms(self, a: Poly, ascending: bool = False) -> List[Term]:
        n = len(a.coeffs)
        indices = range(n) if ascending else range(n - 1, -1, -1)
        out: List[Term] = []
        for k in indices:
            for scalar, monomial in self.base.terms(a.coeffs[k], ascending):
                out.append((scalar, ((self.var, k),) + monomial))
        return out


def degree_in(a: Any, name: str) -> int:
    """중첩 다항식 a의 변수 name에 대한 차수 (영원소는 -1, 스칼라는 0)"""
    if not isinstance(a, Poly):
        return -1 if a == 0 else 0
    if not a.coeffs:
        return -1
    if a.ring.var == name:
        return a.degree
    return max(degree_in(c, name) for c in a.coeffs)


def scalar_coefficients(a: Any) -> List[Any]:
    """중첩 다항식의 0이 아닌 스칼라 계수 전체"""
    if not isinstance(a, Poly):
        return [a] if a != 0 else []
    out: List[Any] = []
    for c in a.coeffs:
        out.extend(scalar_coefficients(c))
    return out
