import math
import random

import pytest
import sympy

from app.arith.integers import (
    crt,
    euler_phi,
    ext_gcd,
    factorize,
    is_prime,
    lcm,
    prime_in_progression,
    primorial,
    primes_up_to,
)
from app.errors import Incompatible, PreconditionViolation, ZeroInput


def test_ext_gcd_conventions():
    assert ext_gcd(0, 0) == (0, 0, 0)
    g, x, y = ext_gcd(6, 4)
    assert g == 2 and 6 * x + 4 * y == 2
    g, x, y = ext_gcd(240, 46)
    assert g == 2 and 240 * x + 46 * y == 2


def test_ext_gcd_negative_inputs_give_nonnegative_gcd():
    g, x, y = ext_gcd(-12, 18)
    assert g == 6 and -12 * x + 18 * y == 6


def test_crt():
    assert crt([(1, 2), (2, 3)]) == (5, 6)
    assert crt([(0, 5)]) == (0, 5)
    # 서로소가 아닌 법도 호환되면 받아들입니다.
    assert crt([(1, 4), (3, 6)]) == (9, 12)
    with pytest.raises(Incompatible):
        crt([(1, 4), (3, 4)])
    with pytest.raises(ZeroInput):
        crt([(1, 0)])


def test_is_prime_against_sympy():
    assert is_prime(2)
    assert not is_prime(1)
    assert not is_prime(561)
    assert is_prime(1_000_003)
    for n in range(-5, 3000):
        assert is_prime(n) == sympy.isprime(abs(n)), n


def test_primes_up_to():
    assert primes_up_to(1) == ()
    assert primes_up_to(30) == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)


def test_factorize_examples():
    f = factorize(12)
    assert f.factors == ((2, 2), (3, 1))
    assert str(f) == "2^2·3"
    minus_one = factorize(-1)
    assert minus_one.unit == -1 and minus_one.factors == ()
    assert factorize(1_000_003).primes == [1_000_003]
    assert factorize(12).divisors() == [1, 2, 3, 4, 6, 12]
    with pytest.raises(ZeroInput):
        factorize(0)


def test_factorize_matches_sympy():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(-(10**12), 10**12) or 1
        f = factorize(n)
        assert f.value() == n
        assert dict(f.factors) == sympy.factorint(abs(n))


def test_factorize_semiprime_beyond_trial_division():
    n = 1_000_003 * 1_000_033
    assert factorize(n).primes == [1_000_003, 1_000_033]


def test_prime_in_progression():
    assert prime_in_progression(1, 4) == 5
    assert prime_in_progression(3, 10, start=14) == 23
    assert prime_in_progression(2, 3) == 2
    with pytest.raises(PreconditionViolation):
        prime_in_progression(2, 4)


def test_small_helpers():
    assert euler_phi(30) == 8
    assert primorial(5) == 30
    assert primorial(1) == 1
    assert lcm([4, 6]) == 12
    assert lcm([]) == 1


def test_ext_gcd_random_64bit():
    rng = random.Random(64)
    for _ in range(10_000):
        a = rng.randint(-(2**63), 2**63 - 1)
        b = rng.randint(-(2**63), 2**63 - 1)
        g, x, y = ext_gcd(a, b)
        assert g == math.gcd(a, b)
        assert a * x + b * y == g


def test_is_prime_matches_sieve_up_to_a_million():
    limit = 10**6
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    for n in range(limit + 1):
        assert is_prime(n) == bool(sieve[n]), n


def test_crt_random_systems():
    rng = random.Random(21)
    for _ in range(500):
        k = rng.randint(1, 4)
        x = rng.randint(-(10**6), 10**6)
        moduli = [rng.randint(1, 200) for _ in range(k)]
        system = [(x % n, n) for n in moduli]
        m, M = crt(system)
        assert M == lcm(moduli)
        assert 0 <= m < M
        assert m % M == x % M
        for r, n in system:
            assert (m - r) % n == 0


def test_crt_incompatible_pairs():
    rng = random.Random(22)
    for _ in range(500):
        g = rng.randint(2, 50)
        a, b = g * rng.randint(1, 20), g * rng.randint(1, 20)
        r = rng.randrange(a)
        s = (r + rng.randint(1, g - 1)) % b
        with pytest.raises(Incompatible):
            crt([(r, a), (s, b)])
