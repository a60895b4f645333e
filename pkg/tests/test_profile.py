import random
from fractions import Fraction

import pytest

from app.errors import CapExceeded, PreconditionViolation, RingMismatch
from app.polys.euclid import gcd_over_field
from app.polys.poly import PolyRing
from app.polys.rings import ZZ
from app.config import settings
from app.schinzel.delta import delta_of
from app.schinzel.profile import (
    density_good_m,
    dstar,
    gcd_profile,
    primorial_density,
    value_gcd,
)

ZY = PolyRing(ZZ, "y")


class TestProfile:
    def test_two_linears(self, parse):
        profile = gcd_profile(parse("y", "y+2"))
        assert profile.delta == 2
        assert profile.table == {0: 2, 1: 1}
        assert profile.periodicity_checks == 2 * 4

    def test_unit_delta(self, parse):
        assert gcd_profile(parse("y^2+1", "y")).table == {0: 1}

    def test_shift_by_six(self, parse):
        profile = gcd_profile(parse("y", "y+6"))
        assert profile.table == {0: 6, 1: 1, 2: 2, 3: 3, 4: 2, 5: 1}

    def test_polynomial_ring(self, parse):
        profile = gcd_profile(parse("y+u", "y", ring="F2[u]"))
        assert sorted(str(d) for d in profile.table.values()) == ["1", "u"]

    def test_rejects_non_pid(self, parse):
        with pytest.raises(RingMismatch):
            gcd_profile(parse("y+u", "y", ring="Z[u]"))

    def test_cap(self, parse):
        settings.BUDGET_SCALE = Fraction(1, 10**6)
        with pytest.raises(CapExceeded):
            gcd_profile(parse("y", "y+6"))

    def test_explicit_cap_ignores_budget_scale(self, parse):
        with pytest.raises(CapExceeded):
            gcd_profile(parse("y", "y+6"), cap=3)
        settings.BUDGET_SCALE = Fraction(1, 10**6)
        assert gcd_profile(parse("y", "y+6"), cap=6).delta == 6

    def test_seed_fixes_periodicity_sample(self, parse):
        polys = parse("y^2+1", "y+6")
        first = gcd_profile(polys, seed=11)
        assert gcd_profile(polys, seed=11) == first
        other = gcd_profile(polys, seed=12)
        assert other.table == first.table
        assert other.periodicity_checks == first.periodicity_checks

    def test_periodicity_on_random_instances(self):
        rng = random.Random(99)
        checked = 0
        while checked < 100:
            P = ZY.from_coeffs([rng.randint(-6, 6) for _ in range(rng.randint(2, 3))])
            Q = ZY.from_coeffs([rng.randint(-6, 6) for _ in range(rng.randint(2, 3))])
            if P.degree < 1 or Q.degree < 1 or gcd_over_field(P, Q).degree > 0:
                continue
            delta = abs(delta_of([P, Q]))
            if delta > 5000:
                continue
            checked += 1
            for m in rng.sample(range(-10**6, 10**6), 20):
                d = value_gcd([P, Q], m)
                for shift in range(-2, 3):
                    assert value_gcd([P, Q], m + shift * delta) == d


class TestDStar:
    def test_two_linears(self, parse):
        result = dstar(parse("y", "y+2"))
        assert result.divisors == [1, 2]
        assert result.d_star == 1
        assert result.gcd_stable and result.av2_holds

    def test_shift_by_six(self, parse):
        result = dstar(parse("y", "y+6"))
        assert result.divisors == [1, 2, 3, 6]
        assert result.d_star == 1

    def test_av2_failure_gives_even_dstar(self, parse):
        result = dstar(parse("y^2-y+2", "y^2-y"))
        assert not result.av2_holds
        assert result.d_star % 2 == 0
        assert all(d % 2 == 0 for d in result.divisors)


class TestDensity:
    def test_examples(self, parse):
        assert density_good_m(parse("y", "y+2"), 0, 10) == Fraction(1, 2)
        assert density_good_m(parse("y", "y+30"), 0, 30) == Fraction(4, 15)
        assert density_good_m(parse("y^2+1", "y"), 0, 7) == 1

    def test_matches_primorial_formula(self, parse):
        assert density_good_m(parse("y", "y+30"), 0, 300) == primorial_density(5)
        assert primorial_density(5) == Fraction(4, 15)

    def test_window_must_be_multiple_of_delta(self, parse):
        with pytest.raises(PreconditionViolation):
            density_good_m(parse("y", "y+2"), 0, 7)

    def test_explicit_cap(self, parse):
        with pytest.raises(CapExceeded):
            density_good_m(parse("y", "y+30"), 0, 30, cap=29)
        assert density_good_m(parse("y", "y+30"), 0, 30, cap=30) == Fraction(4, 15)
