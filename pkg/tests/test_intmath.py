import math
import random

import pytest

from catalanok.intmath import (
    int_nth_root,
    is_prime,
    is_square_mod,
    kronecker_via_residues,
    ord_in_factorial,
    perfect_nth_root,
    primes_upto,
    xgcd,
)


def test_xgcd_identity():
    rng = random.Random(1)
    for _ in range(500):
        a = rng.randint(-10**9, 10**9)
        b = rng.randint(-10**9, 10**9)
        g, s, t = xgcd(a, b)
        assert g == s * a + t * b
        assert g == math.gcd(a, b)


def test_is_prime_matches_sieve():
    sieve = set(primes_upto(10**4))
    for n in range(10**4 + 1):
        assert is_prime(n) == (n in sieve)


def test_is_prime_large():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**60 - 1)
    assert not is_prime((2**31 - 1) * (2**31 + 11))


def test_int_nth_root_bracketing():
    rng = random.Random(2)
    for _ in range(800):
        n = rng.randint(0, 10 ** rng.randint(1, 40))
        k = rng.randint(1, 11)
        r = int_nth_root(n, k)
        assert r**k <= n < (r + 1) ** k
    assert int_nth_root(0, 5) == 0
    assert int_nth_root(1, 7) == 1
    with pytest.raises(ValueError):
        int_nth_root(-1, 2)


def test_perfect_nth_root():
    rng = random.Random(3)
    for _ in range(300):
        r = rng.randint(-500, 500)
        k = rng.randint(2, 7)
        expected = abs(r) if (r < 0 and k % 2 == 0) else r
        assert perfect_nth_root(r**k, k) == expected
    assert perfect_nth_root(29791, 3) == 31
    assert perfect_nth_root(29792, 3) is None
    assert perfect_nth_root(-27, 3) == -3
    assert perfect_nth_root(-16, 4) is None


def test_ord_in_factorial_against_factorization():
    for m in range(0, 60):
        for q in (2, 3, 5, 7):
            fact = math.factorial(m)
            direct = 0
            while fact and fact % q == 0:
                fact //= q
                direct += 1
            assert ord_in_factorial(m, q) == direct


def test_kronecker_matches_euler_criterion():
    for p in primes_upto(200):
        if p == 2:
            continue
        for disc in (-3, -4, -7, -8, -11, -19, -43, -67, -163, -20, 5, 12):
            got = kronecker_via_residues(disc, p)
            if disc % p == 0:
                assert got == 0
            else:
                euler = pow(disc % p, (p - 1) // 2, p)
                assert got == (1 if euler == 1 else -1)


def test_kronecker_at_two():
    # disc mod 8 rule: 1 -> split, 5 -> inert, even -> ramified
    assert kronecker_via_residues(-7, 2) == 1
    assert kronecker_via_residues(-3, 2) == -1
    assert kronecker_via_residues(-4, 2) == 0
    assert kronecker_via_residues(-8, 2) == 0


def test_is_square_mod():
    assert {a for a in range(7) if is_square_mod(a, 7)} == {0, 1, 2, 4}
