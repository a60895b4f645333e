"""
다항식 식 파서

문법 (우선순위: ^ > 단항 - > * > 이항 ±):

    expr   := term (("+" | "-") term)*
    term   := unary (["*"] unary)*          # "2y", "(y+1)(y-1)" 같은 암묵적 곱
    unary  := ("-" | "+") unary | power
    power  := atom ["^" NUMBER]
    atom   := NUMBER ["/" NUMBER] | VARIABLE | "(" expr ")"

변수는 한 글자이며(y, t, u) 환 기술자가 허용하는 변수만 쓸 수 있습니다.
오류 위치는 1부터 시작하는 열 번호이고, 입력 끝은 len(text) + 1 입니다.
"""

import re
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence

from app.errors import PolySyntaxError, RingMismatch
from app.polys.poly import Poly, PolyRing
from app.polys.rings import QQ, ZZ, PrimeField, Ring

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(.))")

KNOWN_VARIABLES = ("y", "t", "u")


class Token(NamedTuple):
    kind: str  # "num", "var", "op", "end"
    value: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    for match in _TOKEN.finditer(text):
        number, name, op = match.groups()
        if number is not None:
            tokens.append(Token("num", number, match.start(1) + 1))
        elif name is not None:
            tokens.append(Token("var", name, match.start(2) + 1))
        elif op is not None:
            if op not in "+-*^/()":
                raise PolySyntaxError(f"알 수 없는 문자 {op!r}", position=match.start(3) + 1)
            tokens.append(Token("op", op, match.start(3) + 1))
    tokens.append(Token("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.tokens = tokenize(text)
        self.index = 0
        self.ring = ring

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def accept(self, op: str) -> bool:
        if self.current.kind == "op" and self.current.value == op:
            self.index += 1
            return True
        return False

    def fail(self, message: str) -> PolySyntaxError:
        return PolySyntaxError(message, position=self.current.position)

    def parse(self) -> Poly:
        if self.current.kind == "end":
            raise self.fail("빈 식입니다")
        value = self.expr()
        if self.current.kind != "end":
            raise self.fail(f"예상하지 못한 토큰 {self.current.value!r}")
        return value

    def expr(self) -> Poly:
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def _starts_atom(self) -> bool:
        token = self.current
        return token.kind in ("num", "var") or (
            token.kind == "op" and token.value == "("
        )

    def term(self) -> Poly:
        value = self.unary()
        while True:
            if self.accept("*"):
                value = value * self.unary()
            elif self._starts_atom():
                value = value * self.unary()
            else:
                return value

    def unary(self) -> Poly:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.accept("^"):
            if self.current.kind != "num":
                raise self.fail("지수는 0 이상의 정수여야 합니다")
            return self.ring.pow(base, int(self.advance().value))
        return base

    def atom(self) -> Poly:
        token = self.current
        if token.kind == "num":
            self.advance()
            value: Fraction | int = int(token.value)
            if self.accept("/"):
                if self.current.kind != "num":
                    raise self.fail("분모는 양의 정수여야 합니다")
                denominator = int(self.advance().value)
                if denominator == 0:
                    raise PolySyntaxError("분모가 0입니다", position=token.position)
                value = Fraction(value, denominator)
            return self.ring.constant(value)
        if token.kind == "var":
            self.advance()
            name = token.value
            if name in KNOWN_VARIABLES and name not in self.ring.variables:
                raise RingMismatch(
                    f"{self.ring.name}에는 변수 {token.value}가 없습니다",
                    position=token.position,
                )
            return self.ring.variable(token.value)
        if self.accept("("):
            value = self.expr()
            if not self.accept(")"):
                raise self.fail("닫는 괄호가 없습니다")
            return value
        if token.kind == "end":
            raise self.fail("식이 끝났습니다")
        raise self.fail(f"예상하지 못한 토큰 {token.value!r}")


def parse_poly(text: str, ring: PolyRing) -> Poly:
    """
    문자열을 ring의 다항식으로 변환합니다.

    Raises:
        PolySyntaxError: 문법 오류 (position 포함)
        UnknownVariable: y, t, u가 아닌 변수 (예: x)
        RingMismatch: y, t, u 중 환에 없는 변수 (예: ℤ[y]에서 u)이거나
            계수를 환으로 변환할 수 없는 경우 (예: ℤ에서 1/2)
    """
    return _Parser(text, ring).parse()


def variables_in(text: str) -> set:
    return {t.value for t in tokenize(text) if t.kind == "var"}


_PRIME_POLY = re.compile(r"^F(?:p\[u\]:(\d+)|(\d+)\[u\])$")
_PRIME_FIELD = re.compile(r"^F(?:p:(\d+)|_?(\d+))$")


def parse_ring(selector: str) -> Ring:
    """
    값 환 선택자를 해석합니다.

    "Z", "Q[u]", "Z[u]", "Fp[u]:p" (또는 "F2[u]"), 인수분해용 "Fp:p" (또는 "F2")

    Raises:
        RingMismatch: 알 수 없는 선택자 또는 소수가 아닌 p
    """
    text = selector.strip().replace(" ", "")
    if text in ("Z", "ZZ"):
        return ZZ
    if text == "Q[u]":
        return PolyRing(QQ, "u")
    if text == "Z[u]":
        return PolyRing(ZZ, "u")
    match = _PRIME_POLY.match(text)
    if match:
        return PolyRing(PrimeField(int(match.group(1) or match.group(2))), "u")
    match = _PRIME_FIELD.match(text)
    if match:
        return PrimeField(int(match.group(1) or match.group(2)))
    raise RingMismatch(f"알 수 없는 환 선택자입니다: {selector}", selector=selector)


def poly_ring_for(
    Z: Ring, texts: Sequence[str], bivariate: Optional[bool] = None
) -> PolyRing:
    """
    입력에 t가 나오면 Z[t][y], 아니면 Z[y]
    """
    if bivariate is None:
        bivariate = any("t" in variables_in(text) for text in texts)
    if bivariate:
        return PolyRing(PolyRing(Z, "t"), "y")
    return PolyRing(Z, "y")


def parse_family(
    texts: Sequence[str], Z: Ring, bivariate: Optional[bool] = None
) -> List[Poly]:
    R = poly_ring_for(Z, texts, bivariate)
    return [parse_poly(text, R) for text in texts]
