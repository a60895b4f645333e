import pytest

from app.errors import RingMismatch
from app.polys.poly import PolyRing
from app.polys.rings import QQ, ZZ, PrimeField
from app.schinzel.values import (
    check_av1,
    check_av2,
    check_av3,
    check_values,
    has_residue_property,
    prime_factors,
    scan_prime,
    values_at,
)

F2U = PolyRing(PrimeField(2), "u")
ZU = PolyRing(ZZ, "u")


def test_residue_property():
    assert not has_residue_property(ZZ)
    assert not has_residue_property(F2U)
    assert has_residue_property(ZU)
    assert has_residue_property(PolyRing(QQ, "u"))
    with pytest.raises(RingMismatch):
        has_residue_property(QQ)


def test_values_at(parse):
    assert values_at(parse("y", "y+2"), 3) == [3, 5]


def test_prime_factors():
    assert prime_factors(ZZ, -12) == [2, 3]
    assert [str(f) for f in prime_factors(F2U, F2U.from_coeffs([0, 1, 1]))] == [
        "u",
        "u + 1",
    ]
    # ℤ[u]: 정수 소수가 먼저 옵니다.
    assert [str(f) for f in prime_factors(ZU, ZU.from_coeffs([0, 2]))] == ["2", "u"]


class TestCheckValues:
    def test_integers(self):
        assert check_values(ZZ, [4, 6]).gcd == 2
        assert not check_values(ZZ, [4, 6]).coprime
        assert check_values(ZZ, [1, 0]).coprime

    def test_integer_polynomials_need_both_checks(self):
        two_u = ZU.from_coeffs([0, 2])
        two = ZU.constant(2)
        check = check_values(ZU, [two_u, ZU.from_coeffs([1, 2])])
        assert check.content_gcd == 1 and check.coprime
        # ℚ[u] 위에서는 서로소지만 정수 content 2를 공유합니다.
        check = check_values(ZU, [two, ZU.from_coeffs([2, 2])])
        assert check.rational_gcd.degree == 0
        assert check.content_gcd == 2
        assert not check.coprime


class TestAv2:
    def test_fails_at_two(self, parse):
        verdict = check_av2(parse("y^2-y+2", "y^2-y"))
        assert not verdict.holds
        assert verdict.failing_prime == 2
        assert verdict.evidence[-1].all_killed

    def test_fails_at_u(self, parse):
        verdict = check_av2(parse("y^2+y+u", "(y^2+y)^2+u", ring="F2[u]"))
        assert not verdict.holds
        assert str(verdict.failing_prime) == "u"

    def test_holds(self, parse):
        verdict = check_av2(parse("y", "y+2"))
        assert verdict.holds
        assert verdict.evidence[0].good_residue == 1

    def test_content_method_over_integer_polynomials(self, parse):
        verdict = check_av2(parse("2y+2u", "2y", ring="Z[u]"))
        assert not verdict.holds
        assert verdict.method == "content"
        assert str(verdict.failing_prime) == "2"
        assert check_av2(parse("y+u", "y-u", ring="Z[u]")).holds


class TestAv1:
    def test_fails_at_two(self, parse):
        verdict = check_av1(parse("y^2+y+2"))
        assert not verdict.holds and verdict.failing_prime == 2

    def test_swan_polynomial_holds(self, parse):
        assert check_av1(parse("y^8+u^3", ring="F2[u]")).holds

    def test_single_linear(self, parse):
        assert check_av1(parse("y")).holds

    def test_product_of_family(self, parse):
        # y(y+1)은 항상 짝수입니다.
        verdict = check_av1(parse("y", "y+1"))
        assert not verdict.holds and verdict.failing_prime == 2
        assert check_av1(parse("y", "y+2")).holds

    def test_content_over_rational_polynomials(self, parse):
        assert check_av1(parse("u*y + 1", ring="Q[u]")).holds
        assert not check_av1(parse("u*y + u", ring="Q[u]")).holds


class TestAv3:
    def test_fails_at_two(self, parse):
        verdict = check_av3(parse("(t^2-t)*y + t^2 - t + 2"))
        assert not verdict.holds
        assert verdict.failing_prime == 2
        assert verdict.notes["ideal_membership"][2]

    def test_holds(self, parse):
        verdict = check_av3(parse("t*y + t + 2"))
        assert verdict.holds
        assert all(not member for member in verdict.notes["ideal_membership"].values())

    def test_requires_bivariate(self, parse):
        with pytest.raises(RingMismatch):
            check_av3(parse("y+1"))


def test_scan_prime_records_first_good_residue(parse):
    record = scan_prime(parse("y", "y+2"), 3)
    assert record.good_residue == 0 and record.good_index == 1
