"""
몫환 F_p[u]/(f)와 유리함수체 Frac(K[u])
"""

from dataclasses import dataclass
from itertools import product
from typing import Any, Iterator, List, Tuple

from app.errors import NotDivisible, RingMismatch, ZeroInput
from app.polys.poly import Poly, PolyRing
from app.polys.rings import PrimeField, Ring, Term


@dataclass(frozen=True)
class QuotientRing(Ring):
    """
    몫환 F_p[u]/(f), 원소는 deg < deg f 인 F_p[u]의 다항식

    Attributes:
        base: F_p 위의 다항식 환
        modulus: 차수 1 이상의 모닉 다항식
    """

    base: PolyRing
    modulus: Poly

    def __post_init__(self):
        if not isinstance(self.base.base, PrimeField):
            raise RingMismatch(f"몫환의 계수 환은 F_p여야 합니다: {self.base.name}")
        if self.modulus.degree < 1 or self.modulus.lc != 1:
            raise RingMismatch(f"몫환의 법은 차수 1 이상의 모닉 다항식이어야 합니다: {self.modulus}")

    @property
    def p(self) -> int:
        return self.base.characteristic

    @property
    def size(self) -> int:
        return self.p**self.modulus.degree

    @property
    def zero(self) -> Poly:
        return self.base.zero

    @property
    def one(self) -> Poly:
        return self.base.one

    @property
    def name(self) -> str:
        return f"{self.base.name}/({self.modulus})"

    @property
    def characteristic(self) -> int:
        return self.p

    def convert(self, x: Any) -> Poly:
        return self.base.rem(self.base.convert(x), self.modulus)

    def add(self, a: Poly, b: Poly) -> Poly:
        return self.base.add(a, b)

    def sub(self, a: Poly, b: Poly) -> Poly:
        return self.base.sub(a, b)

    def neg(self, a: Poly) -> Poly:
        return self.base.neg(a)

    def mul(self, a: Poly, b: Poly) -> Poly:
        return self.base.rem(self.base.mul(a, b), self.modulus)

    def exquo(self, a: Poly, b: Poly) -> Poly:
        if b.is_zero():
            raise ZeroInput("0으로 나눌 수 없습니다")
        g, s, _ = self.base.ext_gcd(b, self.modulus)
        if g.degree > 0:
            raise NotDivisible(f"{b}는 {self.name}의 단원이 아닙니다")
        return self.mul(a, s)

    def elements(self) -> Iterator[Poly]:
        """모든 잉여류 대표원을 정확히 한 번씩 (상수부터) 생성합니다."""
        d = self.modulus.degree
        for digits in product(range(self.p), repeat=d):
            yield Poly(self.base, reversed(digits))

    def terms(self, a: Poly, ascending: bool = False) -> List[Term]:
        return self.base.terms(a, ascending)


@dataclass(frozen=True)
class RationalFunction:
    """기약 분수 num/den (den은 모닉)"""

    num: Poly
    den: Poly

    def __str__(self) -> str:
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"


@dataclass(frozen=True)
class FractionField(Ring):
    """
    체 K 위의 다항식 환 K[u]의 분수체 K(u)

    F_p[u], ℚ[u]의 Bézout 여인수를 ℤ와 같은 체 위의 확장 유클리드로 계산할 때 씁니다.
    """

    base: PolyRing

    is_field = True

    def __post_init__(self):
        if not self.base.base.is_field:
            raise RingMismatch(f"분수체의 기저는 체 위의 다항식 환이어야 합니다: {self.base.name}")

    @property
    def depth(self) -> int:
        return self.base.depth

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.base.variables

    @property
    def zero(self) -> RationalFunction:
        return RationalFunction(self.base.zero, self.base.one)

    @property
    def one(self) -> RationalFunction:
        return RationalFunction(self.base.one, self.base.one)

    @property
    def name(self) -> str:
        return f"Frac({self.base.name})"

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    def _make(self, num: Poly, den: Poly) -> RationalFunction:
        K = self.base
        if den.is_zero():
            raise ZeroInput("분모가 0입니다")
        g = K.gcd(num, den)
        num, den = K.exquo(num, g), K.exquo(den, g)
        lead = K.base.inv(den.lc)
        return RationalFunction(K.scale(num, lead), K.scale(den, lead))

    def convert(self, x: Any) -> RationalFunction:
        if isinstance(x, RationalFunction):
            return self._make(self.base.convert(x.num), self.base.convert(x.den))
        return RationalFunction(self.base.convert(x), self.base.one)

    def numerator(self, a: RationalFunction) -> Poly:
        return a.num

    def denominator(self, a: RationalFunction) -> Poly:
        return a.den

    def is_zero(self, a: RationalFunction) -> bool:
        return a.num.is_zero()

    def add(self, a: RationalFunction, b: RationalFunction) -> RationalFunction:
        K = self.base
        if a.den == b.den:
            return self._make(K.add(a.num, b.num), a.den)
        return self._make(
            K.add(K.mul(a.num, b.den), K.mul(b.num, a.den)), K.mul(a.den, b.den)
        )

    def neg(self, a: RationalFunction) -> RationalFunction:
        return RationalFunction(self.base.neg(a.num), a.den)

    def mul(self, a: RationalFunction, b: RationalFunction) -> RationalFunction:
        if a.num.is_zero() or b.num.is_zero():
            return self.zero
        K = self.base
        return self._make(K.mul(a.num, b.num), K.mul(a.den, b.den))

    def exquo(self, a: RationalFunction, b: RationalFunction) -> RationalFunction:
        if b.num.is_zero():
            raise ZeroInput("0으로 나눌 수 없습니다")
        K = self.base
        return self._make(K.mul(a.num, b.den), K.mul(a.den, b.num))

    def is_unit(self, a: RationalFunction) -> bool:
        return not a.num.is_zero()

    def unit_part(self, a: RationalFunction) -> RationalFunction:
        return a if not a.num.is_zero() else self.one

    def unit_inverse(self, u: RationalFunction) -> RationalFunction:
        return self.exquo(self.one, u)

    def gcd(self, a: RationalFunction, b: RationalFunction) -> RationalFunction:
        return self.zero if self.is_zero(a) and self.is_zero(b) else self.one

    def ext_gcd(self, a, b):
        if not self.is_zero(a):
            return self.one, self.inv(a), self.zero
        if not self.is_zero(b):
            return self.one, self.zero, self.inv(b)
        return self.zero, self.zero, self.zero

    def divmod(self, a, b):
        return self.exquo(a, b), self.zero

    def fraction_field(self) -> "FractionField":
        return self

    def terms(self, a: RationalFunction, ascending: bool = False) -> List[Term]:
        if a.den.degree != 0:
            raise RingMismatch(f"유리함수 {a}는 다항식 항으로 표현할 수 없습니다")
        return self.base.terms(a.num, ascending)

    def to_str(self, a: RationalFunction, ascending: bool = False) -> str:
        if a.den.degree == 0:
            return self.base.to_str(a.num, ascending)
        num = self.base.to_str(a.num, ascending)
        den = self.base.to_str(a.den, ascending)
        return f"({num})/({den})"
