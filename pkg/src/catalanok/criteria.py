"""Divisibility and gcd criteria for solutions of x^p - y^q = 1 in O_K.

Covers: the unit congruence audit (no unit except 1 is 1 mod a prime above
p >= 3), the cyclotomic-quotient gcd G = gcd(<(x^p +- 1)/(x +- 1)>, <x +- 1>)
and its "G divides <p>" guarantee, exact q-th power extraction, and the
report of the divisibility/size conditions every solution must satisfy.

All bound comparisons are exact: values of the form A + B sqrt(q) are
compared against integers by clearing the radical, never through floats.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import DegenerateInput, NotASolution, NotPrime
from .fields import FieldSpec, units
from .ideals import Ideal, ideal_sum, primes_above, principal_ideal, split_type
from .intmath import is_prime, perfect_nth_root, primes_upto
from .quadint import QuadInt, elements_of_norm, from_int, one


@dataclass(frozen=True)
class Lemma2Witness:
    unit: QuadInt
    p: int
    prime: Ideal


@dataclass(frozen=True)
class Lemma2Report:
    field: FieldSpec
    p_max: int
    cases_checked: int
    witnesses: tuple[Lemma2Witness, ...]

    @property
    def passed(self) -> bool:
        return not self.witnesses


def lemma2_verify(field: FieldSpec, p_max: int) -> Lemma2Report:
    """Check eps - 1 not in P for every unit eps != 1 and prime ideal P
    above every prime 3 <= p <= p_max; failures are returned as witnesses."""
    if p_max < 3:
        raise ValueError("p_max must be at least 3")
    unit_one = one(field)
    checked = 0
    witnesses = []
    for p in primes_upto(p_max):
        if p == 2:
            continue
        for prime in primes_above(field, p):
            for eps in units(field):
                if eps == unit_one:
                    continue
                checked += 1
                if prime.contains(eps - unit_one):
                    witnesses.append(Lemma2Witness(eps, p, prime))
    return Lemma2Report(field, p_max, checked, tuple(witnesses))


def lemma4_gcd(x: QuadInt, p: int, sign: int) -> Ideal:
    """G = <(x^p + s)/(x + s)> + <x + s> for s = sign in {+1, -1}.

    The quotient is always an exact element for odd p; G is the unit ideal
    or an ideal of norm p or p^2 containing p.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not is_prime(p) or p == 2:
        raise NotPrime(f"need an odd prime, got {p}")
    s = from_int(x.field, sign)
    u = x + s
    if u.is_zero():
        raise DegenerateInput(f"x = {-sign} collapses the quotient")
    z = x**p + s
    if z.is_zero():
        # gcd(<0>, <u>) = <u>
        return principal_ideal(u)
    quotient = u.divides(z)
    assert quotient is not None, "x + s always divides x^p + s for odd p"
    return ideal_sum(principal_ideal(quotient), principal_ideal(u))


def lemma4_holds(g: Ideal, p: int) -> bool:
    """The guaranteed shape of lemma4_gcd output: unit, or above p."""
    if g.is_unit_ideal():
        return True
    return g.norm in (p, p * p) and g.contains(from_int(g.field, p))


def lemma4_random_audit(field: FieldSpec, samples: int, seed: int,
                        norm_max: int = 10**6,
                        prime_pool: tuple[int, ...] = (3, 5, 7, 11, 13)):
    """Random (x, p, sign) triples; returns (checked, failures)."""
    rng = random.Random(seed)
    box = math.isqrt(norm_max)
    failures = []
    checked = 0
    while checked < samples:
        x = QuadInt(field, rng.randint(-box, box), rng.randint(-box, box))
        if x.is_zero() or x.norm() > norm_max:
            continue
        p = prime_pool[rng.randrange(len(prime_pool))]
        sign = 1 if rng.random() < 0.5 else -1
        if (x + from_int(field, sign)).is_zero():
            continue
        checked += 1
        g = lemma4_gcd(x, p, sign)
        if not lemma4_holds(g, p):
            failures.append((x, p, sign, g))
    return checked, failures


def remark1_witness(field: FieldSpec, p: int, norm_max: int = 10**4,
                    sign: int = -1):
    """First x (by norm) whose gcd is a proper prime above p, not <p>.

    Returns (x, G) or None; such witnesses exist whenever p splits.
    """
    p_ideal = principal_ideal(from_int(field, p))
    excluded = -sign
    for n in range(1, norm_max + 1):
        for x in elements_of_norm(field, n):
            if x.a == excluded and x.b == 0:
                continue
            g = lemma4_gcd(x, p, sign)
            if g.norm == p and g != p_ideal:
                return x, g
    return None


def _root_candidates(z: QuadInt, q: int) -> list[QuadInt]:
    """Untrusted q-th root candidates from complex approximation rounding."""
    f = z.field
    digits = 30 + len(str(abs(z.a) + abs(z.b) + 1)) // max(1, q - 1)
    out = []
    with mpmath.workdps(digits):
        sq = mpmath.sqrt(-f.d)
        om_re = mpmath.mpf(f.omega_trace) / 2
        om_im = sq / 2 if f.omega_trace else sq
        zc = mpmath.mpc(mpmath.mpf(z.a) + mpmath.mpf(z.b) * om_re,
                        mpmath.mpf(z.b) * om_im)
        root = zc ** (mpmath.mpf(1) / q)
        zeta = mpmath.exp(2j * mpmath.pi / q)
        w = root
        for _ in range(q):
            b = w.imag / om_im
            a = w.real - b * om_re
            try:
                out.append(QuadInt(f, int(mpmath.nint(a)), int(mpmath.nint(b))))
            except (OverflowError, ValueError):
                pass
            w = w * zeta
    return out


def is_perfect_qth_power(z: QuadInt, q: int) -> QuadInt | None:
    """Exact q-th root of z in O_K if one exists, else None.

    Fast path: a necessary integer check on norm(z), then rounded complex
    candidates verified exactly.  Completeness is guaranteed by falling
    back to exhaustive enumeration of the candidate norm shell.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    if z.is_zero():
        return QuadInt(z.field, 0, 0)
    root_norm = perfect_nth_root(z.norm(), q)
    if root_norm is None:
        return None
    for r in _root_candidates(z, q):
        if r.norm() == root_norm and r**q == z:
            return r
    for r in elements_of_norm(z.field, root_norm):
        if r**q == z:
            return r
    return None


def cmp_int_vs_surd(n, a, b, q) -> int:
    """Sign of n - (a + b sqrt(q)), by exact radical clearing."""
    t = Fraction(n) - Fraction(a)
    b = Fraction(b)
    if b == 0:
        return (t > 0) - (t < 0)
    if b > 0:
        if t < 0:
            return -1
        lhs, rhs = t * t, b * b * q
        return (lhs > rhs) - (lhs < rhs)
    if t >= 0:
        return 1
    lhs, rhs = b * b * q, t * t
    return (lhs > rhs) - (lhs < rhs)


def theorem2_bound_holds(norm_x: int, p: int, q: int) -> bool:
    """|x| >= q + q^{(p-2)/2}, decided as norm_x >= A + B sqrt(q) exactly."""
    a = q * q + q ** (p - 2)
    b = 2 * q ** ((p - 1) // 2)
    return cmp_int_vs_surd(norm_x, a, b, q) >= 0


@dataclass(frozen=True)
class CasselsReport:
    field: FieldSpec
    x: QuadInt
    y: QuadInt
    p: int
    q: int
    q_divides_x: bool
    p_divides_y: bool
    bound_thm2: bool
    bound_prop1: bool | None
    bound_inert_strong: bool | None


def cassels_check(x: QuadInt, y: QuadInt, p: int, q: int) -> CasselsReport:
    """Divisibility and size report for a verified solution x^p - y^q = 1."""
    if not (is_prime(p) and is_prime(q)):
        raise NotPrime(f"need primes, got p={p}, q={q}")
    if not p > q >= 3:
        raise ValueError(f"need p > q >= 3, got p={p}, q={q}")
    field = x.field
    if (x**p - y**q) != one(field):
        raise NotASolution(f"{x}^{p} - {y}^{q} != 1")
    q_div = any(prime.contains(x) for prime in primes_above(field, q))
    p_div = any(prime.contains(y) for prime in primes_above(field, p))
    nx = x.norm()
    bound2 = theorem2_bound_holds(nx, p, q)
    prop1 = None
    if (p, q) == (5, 3):
        prop1 = nx > (q + q ** (p - 2)) ** 2
    inert_strong = None
    if split_type(field, q).kind != "split":
        # Stronger non-split bound |x| >= q^{p-1} / 2.
        inert_strong = 4 * nx >= q ** (2 * (p - 1))
    return CasselsReport(
        field=field, x=x, y=y, p=p, q=q,
        q_divides_x=q_div, p_divides_y=p_div,
        bound_thm2=bound2, bound_prop1=prop1,
        bound_inert_strong=inert_strong,
    )


def theorem2_case(field: FieldSpec, q: int) -> str:
    """Proof-case label for q: inert -> 'a', split -> 'b', ramified -> 'c'."""
    if not is_prime(q) or q < 3:
        raise NotPrime(f"need a prime q >= 3, got {q}")
    return {"inert": "a", "split": "b", "ramified": "c"}[split_type(field, q).kind]
