import pytest

from app.errors import AV3Violation, CommonFactor, RingMismatch
from app.hilbert.progression import (
    coefficient_delta,
    is_primitive_at,
    is_unit_times_y,
    primitivity_progression,
)


def test_linear_family(parse):
    (P,) = polys = parse("t*y + t + 2")
    witness = primitivity_progression(polys)
    assert (witness.a0, witness.b0) == (2, 1)
    assert witness.deltas == [2]
    assert witness.primes[0].p == 2 and witness.primes[0].m_p == 1
    for k in range(-200, 201):
        assert is_primitive_at(P, 1 + 2 * k)


def test_monic_family_needs_no_congruence(parse):
    witness = primitivity_progression(parse("y^2 + t"))
    assert (witness.a0, witness.b0) == (1, 0)
    assert witness.deltas == [1]
    assert witness.primes == []


def test_av3_violation(parse):
    with pytest.raises(AV3Violation) as error:
        primitivity_progression(parse("(t^2-t)*y + t^2 - t + 2"))
    assert error.value.failing_prime == 2


def test_unit_times_y_is_dropped(parse):
    polys = parse("y", "t*y + t + 2", bivariate=True)
    assert is_unit_times_y(polys[0])
    witness = primitivity_progression(polys)
    assert witness.dropped == [0]
    assert witness.deltas == [1, 2]


def test_degenerate_coefficients(parse):
    with pytest.raises(CommonFactor):
        coefficient_delta(parse("t*y^2")[0])


def test_requires_integer_bivariate(parse):
    with pytest.raises(RingMismatch):
        primitivity_progression(parse("y+1"))


def test_content_primes_divide_delta_off_progression(parse):
    polys = parse("t*y + t + 2", "(t+3)*y^2 + 3*t")
    witness = primitivity_progression(polys)
    for t in range(-60, 61):
        for P, delta in zip(polys, witness.deltas):
            F = P.eval_coeffs(t)
            content = F.ring.content(F)
            assert delta % content == 0, (t, str(P))
    for k in range(-200, 201):
        t = witness.b0 + k * witness.a0
        assert all(is_primitive_at(P, t) for P in polys)
