import random
from fractions import Fraction

import pytest
import sympy

from app.cli.parser import parse_poly
from app.errors import ZeroInput
from app.polys.euclid import (
    content_and_primitive,
    ext_gcd_over_field,
    gcd_over_field,
    poly_crt,
    resultant,
)
from app.polys.factor import (
    factor_over_prime_field,
    is_irreducible_by_trial,
    is_irreducible_over_z,
    kronecker_factor,
)
from app.polys.poly import Poly, PolyRing
from app.polys.quotient import QuotientRing
from app.polys.rings import QQ, ZZ, PrimeField

ZY = PolyRing(ZZ, "y")
QY = PolyRing(QQ, "y")
F2 = PrimeField(2)
F2U = PolyRing(F2, "u")
F2UY = PolyRing(F2U, "y")
F7Y = PolyRing(PrimeField(7), "y")


def zy(text):
    return parse_poly(text, ZY)


def f2u(text):
    return parse_poly(text, F2U)


def random_poly(rng, R, degree, height=5, positive_degree=False):
    """차수 ≤ degree 인 무작위 다항식 (positive_degree이면 차수가 정확히 1 이상)"""
    if positive_degree:
        d = rng.randint(1, degree)
        coeffs = [rng.randint(-height, height) for _ in range(d)]
        nonzero = [c for c in range(-height, height + 1) if R.base.convert(c)]
        lead = rng.choice(nonzero)
        return R.from_coeffs(coeffs + [lead])
    return R.from_coeffs([rng.randint(-height, height) for _ in range(degree + 1)])


class TestEvaluation:
    def test_integer_values(self):
        assert zy("y+2").eval(3) == 5
        assert zy("y^2-y").eval(7) == 42

    def test_swan_value_at_one(self):
        P = parse_poly("y^8 + u^3", F2UY)
        assert P.eval(F2U.one) == f2u("u^3 + 1")

    def test_rendering_round_trip(self):
        P = zy("3y^4 - y^2 + 7")
        assert str(P) == "3*y^4 - y^2 + 7"
        assert ZY.to_str(P, ascending=True) == "7 - y^2 + 3*y^4"
        assert zy(str(P)) == P


    def test_evaluation_is_a_ring_morphism(self):
        rng = random.Random(13)
        for R, m_range in ((ZY, range(-50, 51)), (F7Y, range(7))):
            D = R.base
            for _ in range(200):
                P, Q = random_poly(rng, R, 4), random_poly(rng, R, 4)
                m = rng.choice(m_range)
                assert (P + Q).eval(m) == D.add(P.eval(m), Q.eval(m))
                assert (P * Q).eval(m) == D.mul(P.eval(m), Q.eval(m))


class TestEuclid:
    def test_gcd_over_rationals(self):
        assert gcd_over_field(zy("y^2-1"), zy("y-1")) == parse_poly("y-1", QY)
        assert gcd_over_field(zy("y"), zy("y+2")) == QY.one
        assert gcd_over_field(zy("y^4+4"), zy("y^2+2y+2")) == parse_poly(
            "y^2+2y+2", QY
        )

    def test_extended_gcd_identity(self):
        g, A, B = ext_gcd_over_field(zy("y"), zy("y+2"))
        assert g == QY.one
        assert A == QY.constant(Fraction(-1, 2))
        assert B == QY.constant(Fraction(1, 2))

    def test_extended_gcd_with_zero(self):
        P = parse_poly("2y+4", QY)
        g, A, B = ext_gcd_over_field(P, QY.zero)
        assert g == parse_poly("y+2", QY)
        assert A == QY.constant(Fraction(1, 2))
        assert B.is_zero()

    def test_extended_gcd_equal_inputs(self):
        P = parse_poly("y^2+1", QY)
        g, A, B = ext_gcd_over_field(P, P)
        assert g == P
        assert QY.add(QY.mul(A, P), QY.mul(B, P)) == g

    def test_resultant_sign_convention(self):
        assert resultant(zy("y"), zy("y+2")) == 2
        assert resultant(zy("y^2+1"), zy("y-1")) == 2
        assert resultant(zy("y-3"), zy("y-5")) == -2

    def test_resultant_matches_sympy(self):
        y = sympy.Symbol("y")
        rng = random.Random(5)
        for _ in range(30):
            a = [rng.randint(-5, 5) for _ in range(rng.randint(2, 4))] + [1]
            b = [rng.randint(-5, 5) for _ in range(rng.randint(2, 4))] + [2]
            P, Q = ZY.from_coeffs(a), ZY.from_coeffs(b)
            expected = sympy.resultant(
                sum(c * y**i for i, c in enumerate(a)),
                sum(c * y**i for i, c in enumerate(b)),
                y,
            )
            assert resultant(P, Q) == expected

    def test_resultant_rejects_zero(self):
        with pytest.raises(ZeroInput):
            resultant(zy("y"), ZY.zero)

    def test_content_and_primitive(self):
        assert content_and_primitive(zy("2y+4")) == (2, zy("y+2"))
        P = parse_poly("u*y^2 + u^2*y", F2UY)
        assert content_and_primitive(P) == (f2u("u"), parse_poly("y^2 + u*y", F2UY))
        assert content_and_primitive(ZY.zero) == (0, ZY.zero)

    def test_poly_crt(self):
        m, M = poly_crt([(F2U.zero, f2u("u")), (F2U.one, f2u("u+1"))])
        assert M == f2u("u^2+u")
        assert F2U.rem(m, f2u("u")).is_zero()
        assert F2U.rem(m, f2u("u+1")) == F2U.one


    def test_extended_gcd_random_bezout(self):
        rng = random.Random(17)
        for R in (ZY, F7Y):
            for _ in range(200):
                P, Q = random_poly(rng, R, 5), random_poly(rng, R, 5)
                if rng.random() < 0.5:
                    common = random_poly(rng, R, 2)
                    P, Q = P * common, Q * common
                if P.is_zero() and Q.is_zero():
                    continue
                g, A, B = ext_gcd_over_field(P, Q)
                F = g.ring
                P, Q = F.convert(P), F.convert(Q)
                assert F.add(F.mul(A, P), F.mul(B, Q)) == g
                assert g == gcd_over_field(P, Q)
                assert F.rem(P, g).is_zero() and F.rem(Q, g).is_zero()

    def test_resultant_vanishes_iff_common_factor(self):
        rng = random.Random(19)
        for i in range(500):
            P = random_poly(rng, ZY, 3, positive_degree=True)
            Q = random_poly(rng, ZY, 3, positive_degree=True)
            if i % 2:
                common = random_poly(rng, ZY, 2, positive_degree=True)
                P, Q = P * common, Q * common
            shared = gcd_over_field(P, Q).degree >= 1
            assert (resultant(P, Q) == 0) == shared, (P, Q)


class TestFactorization:
    def test_over_f2(self):
        F = factor_over_prime_field(f2u("u^3+1"))
        assert F.factors == [(f2u("u+1"), 1), (f2u("u^2+u+1"), 1)]
        assert factor_over_prime_field(f2u("u")).is_irreducible
        F = factor_over_prime_field(f2u("u^8+u^3"))
        assert F.factors == [
            (f2u("u"), 3),
            (f2u("u+1"), 1),
            (f2u("u^4+u^3+u^2+u+1"), 1),
        ]
        assert F.expand(F2U) == f2u("u^8+u^3")

    def test_berlekamp_agrees_with_trial_division(self):
        F3U = PolyRing(PrimeField(3), "u")
        rng = random.Random(2)
        for _ in range(30):
            coeffs = [rng.randrange(3) for _ in range(rng.randint(2, 6))] + [1]
            P = F3U.from_coeffs(coeffs)
            F = factor_over_prime_field(P)
            assert F.expand(F3U) == P
            for f, _ in F.factors:
                assert is_irreducible_by_trial(f)

    def test_swan_values_are_all_reducible(self):
        u3 = f2u("u^3")
        candidates = [
            F2U.from_coeffs([(k >> i) & 1 for i in range(5)]) for k in range(32)
        ]
        assert len(set(candidates)) == 32
        for m in candidates:
            F = factor_over_prime_field(F2U.pow(m, 8) + u3)
            assert not F.is_irreducible, m

    def test_kronecker_examples(self):
        F = kronecker_factor(zy("y^2-1"))
        assert F.factors == [(zy("y-1"), 1), (zy("y+1"), 1)]
        assert kronecker_factor(zy("y^2+1")).is_irreducible
        F = kronecker_factor(zy("y^4+4"))
        assert sorted(str(f) for f, _ in F.factors) == [
            "y^2 + 2*y + 2",
            "y^2 - 2*y + 2",
        ]
        assert F.expand(ZY) == zy("y^4+4")

    def test_kronecker_reconstructs_random_products(self):
        y = sympy.Symbol("y")
        irreducibles = [
            "y", "y+1", "y-2", "2y+3", "y^2+1", "y^2+y+1", "y^2-2", "y^3-y-1"
        ]
        rng = random.Random(13)
        checked = 0
        while checked < 100:
            picked = []
            while sum(zy(t).degree for t in picked) < 2:
                picked.append(rng.choice(irreducibles))
            if sum(zy(t).degree for t in picked) > 6:
                continue
            checked += 1
            P = ZY.one
            for t in picked:
                P = P * zy(t)
            F = kronecker_factor(P)
            assert F.expand(ZY) == P
            expected = sympy.factor_list(sympy.sympify(str(P).replace("^", "**")), y)
            assert sum(e for _, e in F.factors) == sum(e for _, e in expected[1])
            for f, _ in F.factors:
                assert is_irreducible_over_z(f)

    def test_irreducible_over_z_requires_unit_content(self):
        assert not is_irreducible_over_z(zy("2y+2"))
        assert is_irreducible_over_z(zy("y^2+3"))
        assert not is_irreducible_over_z(ZY.constant(5))


def test_quotient_ring_elements():
    assert list(QuotientRing(F2U, f2u("u")).elements()) == [F2U.zero, F2U.one]
    assert len(list(QuotientRing(F2U, f2u("u^2+u+1")).elements())) == 4
    assert sorted(PrimeField(5).elements()) == [0, 1, 2, 3, 4]


def test_poly_is_immutable():
    P = zy("y")
    with pytest.raises(AttributeError):
        P.coeffs = (1,)


def test_poly_hash_matches_equality():
    assert len({zy("y+1"), zy("1+y"), ZY.from_coeffs([1, 1])}) == 1
    assert Poly(ZY, [1, 0, 0]) == ZY.one
