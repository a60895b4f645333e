import random

import pytest

from app.errors import CommonFactor, PreconditionViolation, RingMismatch, ZeroInput
from app.polys.euclid import gcd_over_field, resultant
from app.polys.poly import PolyRing
from app.polys.rings import ZZ
from app.schinzel.delta import (
    bezout_delta,
    check_family,
    compute_delta,
    delta_of,
    minimal_delta_bounded,
    verify_certificate,
)

ZY = PolyRing(ZZ, "y")


class TestBezout:
    def test_two_linears(self, parse):
        polys = parse("y", "y+2")
        cert = bezout_delta(polys)
        assert cert.delta == 2
        assert cert.cofactors == [ZY.constant(-1), ZY.one]
        assert cert.resultant == 2
        assert cert.verified
        assert verify_certificate(cert, polys)

    def test_monic_split(self, parse):
        cert = bezout_delta(parse("y^2+1", "y"))
        assert cert.delta == 1
        assert verify_certificate(cert, parse("y^2+1", "y"))

    def test_common_factor(self, parse):
        with pytest.raises(CommonFactor):
            bezout_delta(parse("y", "2y"))

    def test_tampered_certificates_fail(self, parse):
        polys = parse("y", "y+2")
        cert = bezout_delta(polys)
        assert not verify_certificate(cert.model_copy(update={"delta": 3}), polys)
        assert not verify_certificate(cert, list(reversed(polys)))

    def test_three_polynomials(self, parse):
        polys = parse("y", "y+2", "y+3")
        cert = bezout_delta(polys)
        assert cert.resultant is None
        assert verify_certificate(cert, polys)
        # y+3 - (y+2) = 1 이므로 δ는 단원입니다.
        assert delta_of(polys) == 1

    def test_polynomial_ring_coefficients(self, parse):
        polys = parse("y+u", "y", ring="F2[u]")
        cert = bezout_delta(polys)
        assert str(cert.delta) == "u"
        assert verify_certificate(cert, polys)

    def test_integer_polynomial_coefficients(self, parse):
        polys = parse("y+u", "y-u", ring="Z[u]")
        cert = bezout_delta(polys)
        assert verify_certificate(cert, polys)
        assert str(cert.delta) == "2*u"


class TestMinimalDelta:
    def test_examples(self, parse):
        assert minimal_delta_bounded(parse("y", "y+2"), 1) == 2
        assert minimal_delta_bounded(parse("y^2+1", "y"), 2) == 1
        assert minimal_delta_bounded(parse("3y", "3y+6"), 0) == 6

    def test_compute_delta_reports_divisibility(self, parse):
        result = compute_delta(parse("y", "y+2"))
        assert result.minimal_delta == 2
        assert result.divides_bezout
        assert result.bezout.delta == 2

    def test_negative_bound_rejected(self, parse):
        with pytest.raises(PreconditionViolation):
            minimal_delta_bounded(parse("y", "y+2"), -1)

    def test_non_pid_rejected(self, parse):
        with pytest.raises(RingMismatch):
            minimal_delta_bounded(parse("y+u", "y", ring="Z[u]"), 1)

    def test_lattice_chain_divides_bezout_and_resultant(self):
        rng = random.Random(17)
        checked = 0
        while checked < 50:
            P = ZY.from_coeffs([rng.randint(-9, 9) for _ in range(rng.randint(2, 4))])
            Q = ZY.from_coeffs([rng.randint(-9, 9) for _ in range(rng.randint(2, 4))])
            if P.degree < 1 or Q.degree < 1 or gcd_over_field(P, Q).degree > 0:
                continue
            checked += 1
            polys = [P, Q]
            delta = bezout_delta(polys).delta
            rho = resultant(P, Q)
            D = P.degree + Q.degree
            current = minimal_delta_bounded(polys, D)
            following = minimal_delta_bounded(polys, D + 1)
            assert ZZ.divides(current, delta)
            assert ZZ.divides(following, current)
            assert ZZ.divides(current, rho)


class TestFamily:
    def test_requires_minimum(self, parse):
        with pytest.raises(PreconditionViolation):
            check_family(parse("y"))

    def test_rejects_zero(self, parse):
        with pytest.raises(ZeroInput):
            check_family(parse("y", "0"))

    def test_rejects_mixed_rings(self, parse):
        with pytest.raises(RingMismatch):
            check_family(parse("y") + parse("y", ring="Z[u]"))
