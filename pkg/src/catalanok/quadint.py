"""Exact arithmetic on elements of O_K with arbitrary-precision coordinates.

An element is a + b*w over the field's integral basis; see fields.py for
the two basis conventions.  All operations are exact integer arithmetic,
including exact division tests; there is no floating point in this module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import FieldMismatch, ZeroDivisor
from .fields import FieldSpec, field_spec
from .intmath import int_nth_root

_TEXT_RE = re.compile(r"^(-?\d+)([+-]\d+)\*w\[(-\d+)\]$")


@dataclass(frozen=True)
class QuadInt:
    """a + b*w in O_K, with plain (arbitrary-precision) integer coordinates."""

    field: FieldSpec
    a: int
    b: int

    def _check(self, other: "QuadInt") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "QuadInt") -> "QuadInt":
        self._check(other)
        return QuadInt(self.field, self.a + other.a, self.b + other.b)

    def __sub__(self, other: "QuadInt") -> "QuadInt":
        self._check(other)
        return QuadInt(self.field, self.a - other.a, self.b - other.b)

    def __neg__(self) -> "QuadInt":
        return QuadInt(self.field, -self.a, -self.b)

    def __mul__(self, other: "QuadInt") -> "QuadInt":
        # w^2 = t*w - n with t = trace(w), n = norm(w).
        self._check(other)
        t = self.field.omega_trace
        n = self.field.omega_norm
        bb = self.b * other.b
        a = self.a * other.a - n * bb
        b = self.a * other.b + self.b * other.a + t * bb
        return QuadInt(self.field, a, b)

    def __pow__(self, exponent: int) -> "QuadInt":
        if exponent < 0:
            raise ValueError("negative powers are not defined in O_K")
        result = QuadInt(self.field, 1, 0)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "QuadInt":
        """The nontrivial Galois conjugate: a + b*(trace(w) - w)."""
        t = self.field.omega_trace
        return QuadInt(self.field, self.a + t * self.b, -self.b)

    def norm(self) -> int:
        """N(x) = x * conj(x) >= 0; equals |x|^2 as a complex number."""
        t = self.field.omega_trace
        n = self.field.omega_norm
        return self.a * self.a + t * self.a * self.b + n * self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_one(self) -> bool:
        return self.a == 1 and self.b == 0

    def divides(self, other: "QuadInt") -> "QuadInt | None":
        """Quotient q with other = q * self if self | other in O_K, else None.

        Decided exactly via other * conj(self) / norm(self); works in the
        non-Euclidean fields too.
        """
        self._check(other)
        if self.is_zero():
            raise ZeroDivisor("division by zero element")
        if other.is_zero():
            return QuadInt(self.field, 0, 0)
        w = other * self.conj()
        n = self.norm()
        if w.a % n or w.b % n:
            return None
        return QuadInt(self.field, w.a // n, w.b // n)

    def to_text(self) -> str:
        """Canonical text form, e.g. "2+11*w[-1]"; exact round-trip."""
        return f"{self.a}{self.b:+d}*w[{self.field.d}]"

    def __repr__(self) -> str:
        return self.to_text()

    def __str__(self) -> str:
        return self.to_text()


def zero(field: FieldSpec) -> QuadInt:
    return QuadInt(field, 0, 0)


def one(field: FieldSpec) -> QuadInt:
    return QuadInt(field, 1, 0)


def omega(field: FieldSpec) -> QuadInt:
    return QuadInt(field, 0, 1)


def from_int(field: FieldSpec, n: int) -> QuadInt:
    return QuadInt(field, n, 0)


def divides(x: QuadInt, y: QuadInt) -> QuadInt | None:
    """Module-level spelling of QuadInt.divides."""
    return x.divides(y)


def parse_quadint(text: str, field: FieldSpec | None = None) -> QuadInt:
    """Parse the canonical form "a+b*w[d]"; the inverse of to_text."""
    m = _TEXT_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a canonical element: {text!r}")
    a, b, d = int(m.group(1)), int(m.group(2)), int(m.group(3))
    spec = field_spec(d)
    if field is not None and field != spec:
        raise FieldMismatch(f"element of {spec} parsed in context {field}")
    return QuadInt(spec, a, b)


def elements_of_norm(field: FieldSpec, n: int) -> list[QuadInt]:
    """All x in O_K with norm(x) == n, ordered by coordinates (a, b).

    Solves the norm form exactly: a^2 - d b^2 = n over the sqrt basis and
    (2a + b)^2 + |d| b^2 = 4n over the half-integer basis.
    """
    if n < 0:
        return []
    if n == 0:
        return [zero(field)]
    out = []
    absd = -field.d
    if field.omega_trace == 0:
        bmax = int_nth_root(n // absd, 2) if n >= absd else 0
        for b in range(-bmax, bmax + 1):
            rest = n - absd * b * b
            a = int_nth_root(rest, 2)
            if a * a == rest:
                if a == 0:
                    out.append(QuadInt(field, 0, b))
                else:
                    out.append(QuadInt(field, a, b))
                    out.append(QuadInt(field, -a, b))
    else:
        four_n = 4 * n
        bmax = int_nth_root(four_n // absd, 2)
        for b in range(-bmax, bmax + 1):
            rest = four_n - absd * b * b
            s = int_nth_root(rest, 2)
            if s * s != rest:
                continue
            for sv in ({s, -s} if s else {0}):
                if (sv - b) % 2 == 0:
                    out.append(QuadInt(field, (sv - b) // 2, b))
    out.sort(key=lambda x: (x.a, x.b))
    return out
