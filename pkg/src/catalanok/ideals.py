"""Integral ideals of O_K in Hermite normal form, and prime splitting.

An ideal is stored as the canonical triple (n, m, k): as a module over the
integers it is  Z*n + Z*(m + k*w)  with n, k > 0, 0 <= m < n, k | n, k | m
and norm n*k.  This representative is unique, so ideal equality is plain
coordinate equality, and sum (= gcd) and membership reduce to integer
linear algebra on two generators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatch, NotPrime, ZeroIdeal
from .fields import FieldSpec
from .intmath import is_prime, kronecker_via_residues, xgcd
from .quadint import QuadInt


@dataclass(frozen=True)
class Ideal:
    field: FieldSpec
    n: int
    m: int
    k: int

    def __post_init__(self):
        if self.n <= 0 or self.k <= 0 or not (0 <= self.m < self.n):
            raise ValueError(f"not a normalized HNF triple: {self}")
        if self.n % self.k or self.m % self.k:
            raise ValueError(f"module is not an ideal: {self}")
        # Closure under multiplication by w: w*(m + k*w) must lie in the module.
        t = self.field.omega_trace
        nw = self.field.omega_norm
        if (-self.k * nw - ((self.m + self.k * t) // self.k) * self.m) % self.n:
            raise ValueError(f"module is not closed under w: {self}")

    @property
    def norm(self) -> int:
        """Index of the ideal in O_K."""
        return self.n * self.k

    def is_unit_ideal(self) -> bool:
        return self.n == 1 and self.k == 1

    def generators(self) -> tuple[QuadInt, QuadInt]:
        return (
            QuadInt(self.field, self.n, 0),
            QuadInt(self.field, self.m, self.k),
        )

    def contains(self, x: QuadInt) -> bool:
        """Exact membership test by solving over the HNF basis."""
        if self.field != x.field:
            raise FieldMismatch(f"{self.field} vs {x.field}")
        if x.b % self.k:
            return False
        t = x.b // self.k
        return (x.a - t * self.m) % self.n == 0

    def to_text(self) -> str:
        return f"hnf[{self.n},{self.m},{self.k}]@{self.field.d}"

    def __repr__(self) -> str:
        return self.to_text()


def _hnf_from_vectors(field: FieldSpec, vectors: list[tuple[int, int]]) -> Ideal:
    """Canonical HNF of the module spanned by (a, b) ~ a + b*w vectors."""
    vectors = [(a, b) for a, b in vectors if a or b]
    if not vectors:
        raise ZeroIdeal("zero module has no HNF")
    # Combine rows to a single generator (m0, k) with k = gcd of b-coords.
    m0, k = 0, 0
    for a, b in vectors:
        if b == 0:
            continue
        g, s, t = xgcd(k, b)
        m0, k = s * m0 + t * a, g
    firsts = []
    for a, b in vectors:
        if k:
            a -= (b // k) * m0
        firsts.append(a)
    n = 0
    for a in firsts:
        n = abs(xgcd(n, a)[0])
    if n == 0 or k == 0:
        raise ZeroIdeal("module has rank < 2; not an ideal of O_K")
    return Ideal(field, n, m0 % n, k)


def principal_ideal(x: QuadInt) -> Ideal:
    """HNF of <x>, the module spanned by {x, w*x}; norm equals norm(x)."""
    if x.is_zero():
        raise ZeroIdeal("zero element generates the zero ideal")
    t = x.field.omega_trace
    nw = x.field.omega_norm
    wx = (-nw * x.b, x.a + t * x.b)
    return _hnf_from_vectors(x.field, [(x.a, x.b), wx])


def unit_ideal(field: FieldSpec) -> Ideal:
    return Ideal(field, 1, 0, 1)


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    """Ideal sum I + J, which is the ideal gcd(I, J)."""
    if i.field != j.field:
        raise FieldMismatch(f"{i.field} vs {j.field}")
    return _hnf_from_vectors(
        i.field,
        [(i.n, 0), (i.m, i.k), (j.n, 0), (j.m, j.k)],
    )


def ideal_product(i: Ideal, j: Ideal) -> Ideal:
    """Ideal product from the four pairwise generator products."""
    if i.field != j.field:
        raise FieldMismatch(f"{i.field} vs {j.field}")
    gi = i.generators()
    gj = j.generators()
    vectors = []
    for x in gi:
        for y in gj:
            z = x * y
            vectors.append((z.a, z.b))
    return _hnf_from_vectors(i.field, vectors)


def ideal_norm(i: Ideal) -> int:
    return i.norm


def contains(i: Ideal, x: QuadInt) -> bool:
    return i.contains(x)


@dataclass(frozen=True)
class SplitType:
    """How a rational prime factors in O_K."""

    kind: str  # "split" | "inert" | "ramified"
    primes: tuple[Ideal, ...]  # two ideals for split, one otherwise

    @property
    def primes_above(self) -> tuple[Ideal, ...]:
        return self.primes


def _omega_roots_mod(field: FieldSpec, p: int) -> list[int]:
    """Roots of the minimal polynomial of w modulo p, by enumeration."""
    t = field.omega_trace
    nw = field.omega_norm
    return [r for r in range(p) if (r * r - t * r + nw) % p == 0]


def _prime_above(field: FieldSpec, p: int, root: int) -> Ideal:
    """The norm-p prime <p, w - root> as an HNF ideal."""
    return Ideal(field, p, (-root) % p, 1)


def split_type(field: FieldSpec, p: int) -> SplitType:
    """Split/inert/ramified decision for p, with the primes above it.

    Ramified iff p | disc; otherwise split iff the Kronecker symbol
    (disc/p) is +1 (decided by residue enumeration, which is exact and
    fast at desk scale).
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    symbol = kronecker_via_residues(field.disc, p)
    if symbol == 0:
        roots = _omega_roots_mod(field, p)
        return SplitType("ramified", (_prime_above(field, p, roots[0]),))
    if symbol == 1:
        r1, r2 = _omega_roots_mod(field, p)
        return SplitType(
            "split",
            (_prime_above(field, p, r1), _prime_above(field, p, r2)),
        )
    from .quadint import from_int

    return SplitType("inert", (principal_ideal(from_int(field, p)),))


def primes_above(field: FieldSpec, p: int) -> tuple[Ideal, ...]:
    return split_type(field, p).primes
