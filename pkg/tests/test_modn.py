from math import gcd

import pytest

from app.arith.integers import is_prime
from app.errors import AV1Violation, PreconditionViolation, RingMismatch
from app.hilbert.modn import goldbach_mod_n, mod_n_schinzel


def _assert_congruent(witness, polys):
    N = witness.modulus
    for P, entry in zip(polys, witness.entries):
        assert entry.value == P.eval(witness.m)
        assert is_prime(entry.prime)
        assert gcd(entry.prime, N) == 1 or N == 1
        assert (entry.prime - entry.value) % N == 0
        assert entry.residue == entry.prime % N


def test_twin_family_mod_four(parse):
    polys = parse("y", "y+2")
    witnesses = mod_n_schinzel(polys, 4, want=3)
    assert len(witnesses) == 3
    assert len({w.m for w in witnesses}) == 3
    for witness in witnesses:
        _assert_congruent(witness, polys)


def test_single_quadratic_mod_three(parse):
    polys = parse("y^2 + 1")
    (witness,) = mod_n_schinzel(polys, 3)
    _assert_congruent(witness, polys)
    assert polys[0].eval(witness.m) % 3 != 0


def test_av1_violation(parse):
    with pytest.raises(AV1Violation) as error:
        mod_n_schinzel(parse("y^2 + y + 2"), 5)
    assert error.value.failing_prime == 2


def test_rejects_bad_arguments(parse):
    with pytest.raises(PreconditionViolation):
        mod_n_schinzel(parse("y"), 0)
    with pytest.raises(PreconditionViolation):
        mod_n_schinzel(parse("y"), 3, want=0)
    with pytest.raises(RingMismatch):
        mod_n_schinzel(parse("y + u", ring="Z[u]"), 3)


@pytest.mark.parametrize("modulus", range(2, 21))
def test_goldbach_mod_n(modulus):
    for two_n in range(4, 41, 2):
        (witness,) = goldbach_mod_n(two_n, modulus)
        assert is_prime(witness.p) and is_prime(witness.q)
        assert (witness.p + witness.q - two_n) % modulus == 0


def test_goldbach_modulus_one():
    (witness,) = goldbach_mod_n(4, 1)
    assert (witness.p, witness.q) == (2, 2)


def test_goldbach_requires_even():
    with pytest.raises(PreconditionViolation):
        goldbach_mod_n(7, 3)
