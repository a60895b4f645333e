import random

import pytest

from app.errors import AV2Violation, BudgetExceeded, CommonFactor, RingMismatch
from app.polys.euclid import gcd_over_field
from app.polys.poly import PolyRing, degree_in, scalar_coefficients
from app.polys.rings import ZZ
from app.schinzel.values import check_av2, check_values, values_at
from app.schinzel.witness import (
    box_elements,
    brute_force_coprime,
    find_coprime,
    find_coprime_infinite_field,
    find_coprime_pid,
    find_coprime_polyring,
    integer_polys,
    monomial_conditions,
)

ZY = PolyRing(ZZ, "y")
ZU = PolyRing(ZZ, "u")


def assert_verified(witness, polys):
    Z = polys[0].ring.base
    assert values_at(polys, witness.m) == witness.values
    assert check_values(Z, witness.values).coprime


class TestPid:
    def test_two_linears(self, parse):
        polys = parse("y", "y+2")
        witness = find_coprime_pid(polys)
        assert witness.m == 1
        assert witness.method == "crt"
        assert witness.values == [1, 3]
        assert_verified(witness, polys)

    def test_unit_delta_returns_zero(self, parse):
        witness = find_coprime_pid(parse("y^2+1", "y"))
        assert witness.m == 0
        assert witness.method == "trivial"
        assert witness.values == [1, 0]

    def test_polynomial_ring(self, parse):
        polys = parse("y+u", "y", ring="F2[u]")
        witness = find_coprime_pid(polys)
        assert str(witness.m) == "1"
        assert [str(v) for v in witness.values] == ["u + 1", "1"]

    def test_av2_violation(self, parse):
        with pytest.raises(AV2Violation) as error:
            find_coprime_pid(parse("y^2-y+2", "y^2-y"))
        assert error.value.failing_prime == 2

    def test_rejects_non_pid(self, parse):
        with pytest.raises(RingMismatch):
            find_coprime_pid(parse("y+u", "y", ring="Z[u]"))

    def test_random_pairs_always_verify(self):
        rng = random.Random(2024)
        checked = 0
        while checked < 200:
            P = ZY.from_coeffs([rng.randint(-9, 9) for _ in range(rng.randint(1, 5))])
            Q = ZY.from_coeffs([rng.randint(-9, 9) for _ in range(rng.randint(1, 5))])
            if P.is_zero() or Q.is_zero() or gcd_over_field(P, Q).degree > 0:
                continue
            if not check_av2([P, Q]).holds:
                continue
            checked += 1
            assert_verified(find_coprime_pid([P, Q]), [P, Q])


class TestInfiniteField:
    def test_examples(self, parse):
        polys = parse("y+u", "y-u", ring="Q[u]")
        witness = find_coprime_infinite_field(polys)
        assert witness.m == 1
        assert [str(v) for v in witness.values] == ["u + 1", "-u + 1"]

        witness = find_coprime_infinite_field(parse("y", "y+u", ring="Q[u]"))
        assert witness.m == 1

        witness = find_coprime_infinite_field(parse("y-u", "y-u-1", ring="Q[u]"))
        assert witness.m == 0


class TestPolyring:
    def test_structured_witness(self, parse):
        polys = parse("y+u", "y-u", ring="Z[u]")
        witness = find_coprime_polyring(polys)
        assert_verified(witness, polys)
        assert witness.method == "structured"
        assert witness.monomial_conditions.holds

    def test_odd_constant_witness(self, parse):
        polys = parse("y", "y+2", ring="Z[u]")
        witness = find_coprime_polyring(polys)
        assert_verified(witness, polys)
        assert witness.check.content_gcd == 1

    def test_common_factor(self, parse):
        with pytest.raises(CommonFactor):
            find_coprime_polyring(parse("(y-u)(y+1)", "(y-u)(y+2)", ring="Z[u]"))

    def test_av2_violation(self, parse):
        with pytest.raises(AV2Violation):
            find_coprime_polyring(parse("2y", "2y+2u", ring="Z[u]"))

    def test_explicit_search_bounds(self, parse):
        polys = parse("y+u", "y-u", ring="Z[u]")
        with pytest.raises(BudgetExceeded):
            find_coprime_polyring(
                polys, lambda_height=0, fallback_degree=0, fallback_height=0
            )
        witness = find_coprime_polyring(
            polys, lambda_height=0, fallback_degree=1, fallback_height=1
        )
        assert witness.method == "fallback"
        assert_verified(witness, polys)

    def test_random_pairs_always_verify(self):
        rng = random.Random(8)
        ZUY = PolyRing(ZU, "y")
        checked = 0
        while checked < 50:
            polys = [
                ZUY.from_coeffs(
                    [
                        ZU.from_coeffs([rng.randint(-5, 5) for _ in range(3)])
                        for _ in range(rng.randint(2, 3))
                    ]
                )
                for _ in range(2)
            ]
            if any(P.degree < 1 for P in polys):
                continue
            if gcd_over_field(*polys).degree > 0 or not check_av2(polys).holds:
                continue
            checked += 1
            assert_verified(find_coprime_polyring(polys), polys)

    def test_monomial_conditions_keep_values_nonzero_mod_p(self):
        rng = random.Random(23)
        ZUY = PolyRing(ZU, "y")
        checked = 0
        while checked < 200:
            p = rng.choice([2, 3, 5, 7])
            P = ZUY.from_coeffs(
                [
                    ZU.from_coeffs([rng.randint(-5, 5) for _ in range(3)])
                    for _ in range(3)
                ]
            )
            if all(c % p == 0 for c in scalar_coefficients(P)):
                continue
            d = max(degree_in(P, "u"), 0)
            a = d + 1 + rng.randint(0, 2)
            b = a + 1 + rng.randint(0, 2)
            mu1 = rng.choice([v for v in range(-6, 7) if v])
            mu2 = 1 + mu1 * rng.randint(-2, 2)
            if mu2 == 0:
                continue
            coeffs = [0] * (b + 1)
            coeffs[0], coeffs[a], coeffs[b] = rng.randint(-5, 5), mu1, mu2
            m = ZU.from_coeffs(coeffs)
            assert monomial_conditions(m, [P]).holds
            assert any(c % p for c in P.eval(m).coeffs)
            checked += 1


class TestBruteForce:
    def test_finds_first_in_box(self, parse):
        witness = brute_force_coprime(parse("y", "y+2"), 0, 10)
        assert witness.m == 1
        assert witness.method == "brute-force"

    def test_absent_when_av2_fails(self, parse):
        assert brute_force_coprime(parse("y^2-y+2", "y^2-y"), -1000, 1000) is None

    def test_swan_family(self, parse):
        witness = brute_force_coprime(parse("y^8+u^3", "u", ring="F2[u]"), degree=2)
        assert str(witness.m) == "1"

    def test_box_sizes(self):
        assert len(list(box_elements(ZZ, -3, 3))) == 7
        assert len(list(integer_polys(ZU, 1, 1))) == 9


def test_find_coprime_dispatches_by_ring(parse):
    assert find_coprime(parse("y", "y+2")).method == "crt"
    assert find_coprime(parse("y+u", "y-u", ring="Q[u]")).method == "scan"
    assert find_coprime(parse("y+u", "y-u", ring="Z[u]")).method == "structured"
