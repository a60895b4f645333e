"""
계수 환(ring) 기술자 모듈

모든 환은 Ring 추상 클래스를 구현하며, 원소 연산은 환 객체의 메서드로 수행합니다.
기본 스칼라 환은 여기서 정의하고 다항식 환/몫환/분수체는 poly.py, quotient.py에 있습니다.

원소 표현:
    IntegerRing  -> int
    RationalField -> fractions.Fraction
    PrimeField(p) -> 0 <= a < p 인 int
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator, List, Tuple

from app.errors import NotDivisible, RingMismatch, UnknownVariable, ZeroInput

# (스칼라 계수, ((변수, 지수), ...)) 형태의 단항식
Term = Tuple[Any, Tuple[Tuple[str, int], ...]]


class Ring(ABC):
    """
    모든 계수 환이 반드시 구현해야 하는 기본 구조
    """

    is_field: bool = False
    depth: int = 0

    # ---- 필수 구현 ----

    @property
    @abstractmethod
    def zero(self) -> Any:
        pass

    @property
    @abstractmethod
    def one(self) -> Any:
        pass

    @property
    @abstractmethod
    def name(self) -> str:
        """JSON/로그에 쓰이는 환 이름 (예: "Z", "F_2[u]")"""
        pass

    @abstractmethod
    def convert(self, x: Any) -> Any:
        """int, Fraction 또는 하위 환의 원소를 이 환의 원소로 변환합니다."""
        pass

    @abstractmethod
    def add(self, a: Any, b: Any) -> Any:
        pass

    @abstractmethod
    def mul(self, a: Any, b: Any) -> Any:
        pass

    @abstractmethod
    def neg(self, a: Any) -> Any:
        pass

    @abstractmethod
    def exquo(self, a: Any, b: Any) -> Any:
        """
        정확한 나눗셈 a / b

        Raises:
            ZeroInput: b = 0
            NotDivisible: b가 a를 나누지 않는 경우
        """
        pass

    @abstractmethod
    def terms(self, a: Any, ascending: bool = False) -> List[Term]:
        pass

    # ---- 공통 구현 ----

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def variables(self) -> Tuple[str, ...]:
        """바깥쪽부터 나열한 다항식 변수 이름"""
        return ()

    def variable(self, name: str) -> Any:
        raise UnknownVariable(f"{self.name}에는 변수 {name}가 없습니다", variable=name)

    def sub(self, a: Any, b: Any) -> Any:
        return self.add(a, self.neg(b))

    def pow(self, a: Any, n: int) -> Any:
        if n < 0:
            raise ValueError(f"음수 지수는 지원하지 않습니다: {n}")
        result, base = self.one, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def is_zero(self, a: Any) -> bool:
        return a == self.zero

    def equal(self, a: Any, b: Any) -> bool:
        return self.is_zero(self.sub(a, b))

    def divides(self, a: Any, b: Any) -> bool:
        """a | b 여부"""
        if self.is_zero(a):
            return self.is_zero(b)
        try:
            self.exquo(b, a)
        except NotDivisible:
            return False
        return True

    def is_unit(self, a: Any) -> bool:
        return not self.is_zero(a) and self.divides(a, self.one)

    def unit_part(self, a: Any) -> Any:
        """a = unit_part(a) · normalize(a) 를 만족하는 단원 (0의 단원 부분은 1)"""
        return self.one

    def unit_inverse(self, u: Any) -> Any:
        return self.exquo(self.one, u)

    def normalize(self, a: Any) -> Any:
        """단원 배수를 제거한 대표원 (ℤ에서는 양수, 체 위 다항식은 모닉)"""
        if self.is_zero(a):
            return a
        return self.mul(self.unit_inverse(self.unit_part(a)), a)

    def associates(self, a: Any, b: Any) -> bool:
        return self.normalize(a) == self.normalize(b)

    def gcd(self, a: Any, b: Any) -> Any:
        raise NotImplementedError(f"{self.name}에서는 gcd를 지원하지 않습니다")

    def ext_gcd(self, a: Any, b: Any) -> Tuple[Any, Any, Any]:
        raise NotImplementedError(f"{self.name}은 유클리드 환이 아닙니다")

    def divmod(self, a: Any, b: Any) -> Tuple[Any, Any]:
        raise NotImplementedError(f"{self.name}은 유클리드 환이 아닙니다")

    def quo(self, a: Any, b: Any) -> Any:
        return self.divmod(a, b)[0]

    def inv(self, a: Any) -> Any:
        if not self.is_field:
            raise RingMismatch(f"{self.name}은 체가 아닙니다")
        return self.exquo(self.one, a)

    def fraction_field(self) -> "Ring":
        raise RingMismatch(f"{self.name}의 분수체는 지원하지 않습니다")

    def elements(self) -> Iterator[Any]:
        raise RingMismatch(f"{self.name}은 유한 환이 아닙니다")

    def to_str(self, a: Any, ascending: bool = False) -> str:
        return render_terms(self.terms(a, ascending))

    def to_json(self, a: Any) -> Any:
        return self.to_str(a)

    def __str__(self) -> str:
        return self.name


def _render_scalar(c: Any) -> str:
    return str(c)


def render_terms(terms: List[Term]) -> str:
    """
    단항식 목록을 파서와 왕복 가능한 문자열로 렌더링합니다.

    단항식 안의 변수는 안쪽(u)부터 씁니다. 예: "2*u*y^2 - y + 1/2"
    """
    if not terms:
        return "0"
    parts: List[str] = []
    for index, (c, monomial) in enumerate(terms):
        negative = c < 0
        magnitude = -c if negative else c
        factors = [
            name if exp == 1 else f"{name}^{exp}"
            for name, exp in reversed(monomial)
            if exp > 0
        ]
        if magnitude != 1 or not factors:
            factors.insert(0, _render_scalar(magnitude))
        body = "*".join(factors)
        if index == 0:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts)


@dataclass(frozen=True)
class IntegerRing(Ring):
    """정수환 ℤ"""

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def name(self) -> str:
        return "Z"

    def convert(self, x: Any) -> int:
        if isinstance(x, bool):
            return int(x)
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        raise RingMismatch(f"{x!r}는 정수가 아닙니다", value=x)

    def add(self, a: int, b: int) -> int:
        return a + b

    def sub(self, a: int, b: int) -> int:
        return a - b

    def mul(self, a: int, b: int) -> int:
        return a * b

    def neg(self, a: int) -> int:
        return -a

    def pow(self, a: int, n: int) -> int:
        return a**n

    def exquo(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroInput("0으로 나눌 수 없습니다")
        q, r = divmod(a, b)
        if r:
            raise NotDivisible(f"{b}는 {a}를 나누지 않습니다")
        return q

    def is_unit(self, a: int) -> bool:
        return a in (1, -1)

    def unit_part(self, a: int) -> int:
        return -1 if a < 0 else 1

    def unit_inverse(self, u: int) -> int:
        return u

    def normalize(self, a: int) -> int:
        return abs(a)

    def gcd(self, a: int, b: int) -> int:
        from math import gcd

        return gcd(a, b)

    def ext_gcd(self, a: int, b: int) -> Tuple[int, int, int]:
        from app.arith.integers import ext_gcd

        return ext_gcd(a, b)

    def divmod(self, a: int, b: int) -> Tuple[int, int]:
        if b == 0:
            raise ZeroInput("0으로 나눌 수 없습니다")
        return divmod(a, b)

    def fraction_field(self) -> "RationalField":
        return QQ

    def terms(self, a: int, ascending: bool = False) -> List[Term]:
        return [(a, ())] if a else []

    def to_json(self, a: int) -> int:
        return a


@dataclass(frozen=True)
class RationalField(Ring):
    """유리수체 ℚ"""

    is_field = True

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    @property
    def name(self) -> str:
        return "Q"

    def convert(self, x: Any) -> Fraction:
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise RingMismatch(f"{x!r}는 유리수가 아닙니다", value=x)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def exquo(self, a: Fraction, b: Fraction) -> Fraction:
        if b == 0:
            raise ZeroInput("0으로 나눌 수 없습니다")
        return Fraction(a) / b

    def is_unit(self, a: Fraction) -> bool:
        return a != 0

    def unit_part(self, a: Fraction) -> Fraction:
        return Fraction(a) if a != 0 else Fraction(1)

    def unit_inverse(self, u: Fraction) -> Fraction:
        return 1 / Fraction(u)

    def gcd(self, a: Fraction, b: Fraction) -> Fraction:
        return Fraction(0) if a == 0 and b == 0 else Fraction(1)

    def ext_gcd(self, a: Fraction, b: Fraction) -> Tuple[Fraction, Fraction, Fraction]:
        if a != 0:
            return Fraction(1), 1 / Fraction(a), Fraction(0)
        if b != 0:
            return Fraction(1), Fraction(0), 1 / Fraction(b)
        return Fraction(0), Fraction(0), Fraction(0)

    def divmod(self, a: Fraction, b: Fraction) -> Tuple[Fraction, Fraction]:
        return self.exquo(a, b), Fraction(0)

    def fraction_field(self) -> "RationalField":
        return self

    def terms(self, a: Fraction, ascending: bool = False) -> List[Term]:
        return [(a, ())] if a else []


@dataclass(frozen=True)
class PrimeField(Ring):
    """소수체 F_p (원소는 0 이상 p 미만의 정수)"""

    p: int

    is_field = True

    def __post_init__(self):
        from app.arith.integers import is_prime

        if not is_prime(self.p) or self.p < 2:
            raise RingMismatch(f"F_p의 법이 소수가 아닙니다: {self.p}", p=self.p)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def name(self) -> str:
        return f"F_{self.p}"

    @property
    def characteristic(self) -> int:
        return self.p

    def convert(self, x: Any) -> int:
        if isinstance(x, bool):
            return int(x)
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroInput(f"{x}의 분모가 {self.p}의 배수입니다")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        raise RingMismatch(f"{x!r}는 {self.name}의 원소가 아닙니다", value=x)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def pow(self, a: int, n: int) -> int:
        return pow(a, n, self.p)

    def exquo(self, a: int, b: int) -> int:
        if b % self.p == 0:
            raise ZeroInput("0으로 나눌 수 없습니다")
        return a * pow(b, -1, self.p) % self.p

    def is_unit(self, a: int) -> bool:
        return a % self.p != 0

    def unit_part(self, a: int) -> int:
        return a if a else 1

    def unit_inverse(self, u: int) -> int:
        return pow(u, -1, self.p)

    def gcd(self, a: int, b: int) -> int:
        return 0 if a == 0 and b == 0 else 1

    def ext_gcd(self, a: int, b: int) -> Tuple[int, int, int]:
        if a:
            return 1, pow(a, -1, self.p), 0
        if b:
            return 1, 0, pow(b, -1, self.p)
        return 0, 0, 0

    def divmod(self, a: int, b: int) -> Tuple[int, int]:
        return self.exquo(a, b), 0

    def fraction_field(self) -> "PrimeField":
        return self

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def terms(self, a: int, ascending: bool = False) -> List[Term]:
        return [(a, ())] if a else []


ZZ = IntegerRing()
QQ = RationalField()
