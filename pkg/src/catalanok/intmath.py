"""Integer number-theory helpers: primes, integer roots, residue symbols.

Everything here is exact big-integer arithmetic; no floating point.
"""

from __future__ import annotations

import math
from functools import lru_cache

# Witness set is deterministic for n < 3.3 * 10^24, far beyond desk scale.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, s, t) with g = s*a + t*b and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n below 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_upto(n: int) -> list[int]:
    """All primes <= n by sieve."""
    if n < 2:
        return []
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            start = p * p
            sieve[start : n + 1 : p] = b"\x00" * ((n - start) // p + 1)
    return [i for i, flag in enumerate(sieve) if flag]


def int_nth_root(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0, k >= 1, via integer Newton iteration."""
    if n < 0:
        raise ValueError("int_nth_root requires n >= 0")
    if k < 1:
        raise ValueError("int_nth_root requires k >= 1")
    if k == 1 or n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    if n.bit_length() <= k:
        return 1
    # Seed >= true root; Newton descends monotonically to the floor.
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def perfect_nth_root(n: int, k: int) -> int | None:
    """Returns r with r**k == n, or None. Handles negative n for odd k."""
    if n < 0:
        if k % 2 == 0:
            return None
        r = perfect_nth_root(-n, k)
        return None if r is None else -r
    r = int_nth_root(n, k)
    return r if r**k == n else None


def ord_in_factorial(m: int, q: int) -> int:
    """q-adic valuation of m! (Legendre: sum of floor(m / q^i))."""
    total = 0
    power = q
    while power <= m:
        total += m // power
        power *= q
    return total


@lru_cache(maxsize=None)
def _squares_mod(p: int) -> frozenset[int]:
    return frozenset(x * x % p for x in range(p // 2 + 1))


def is_square_mod(a: int, p: int) -> bool:
    """Whether a is a square modulo p, by exhaustive residue check."""
    return a % p in _squares_mod(p)


def kronecker_via_residues(disc: int, p: int) -> int:
    """Kronecker symbol (disc/p) for prime p, decided by residue enumeration.

    Returns 0 when p | disc, +1 when disc is a nonzero square mod p,
    -1 otherwise.  For p = 2 the standard disc mod 8 rule applies.
    """
    if p == 2:
        if disc % 2 == 0:
            return 0
        return 1 if disc % 8 == 1 else -1
    if disc % p == 0:
        return 0
    return 1 if is_square_mod(disc, p) else -1
