"""Rigorous interval arithmetic with exact rational endpoints.

Endpoints are exact rationals; every operation takes a working precision
(bits) and rounds outward to that many significant bits, so enclosures stay
sound while sizes stay bounded.  Internally the arithmetic runs on dyadic
(mantissa, exponent) integer pairs - no floats anywhere, and no gcd
normalization in the hot path.  Real roots use integer k-th roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DivisionByIntervalContainingZero,
    NegativeRadicand,
)
from .fields import FieldSpec
from .intmath import int_nth_root
from .quadint import QuadInt

DEFAULT_PRECISION = 256
MAX_PRECISION = 4096

_ZERO = Fraction(0)
_ONE = Fraction(1)

# Dyadic scalars are (man, exp) pairs meaning man * 2**exp, man an int.

def _probe_fast_fraction() -> bool:
    # fast normalized constructor; falls back to the public one if the
    # stdlib Fraction ever changes its slot layout
    try:
        probe = object.__new__(Fraction)
        probe._numerator = 3
        probe._denominator = 4
        return probe == Fraction(3, 4) and float(probe) == 0.75
    except (AttributeError, TypeError):  # pragma: no cover
        return False


_FAST_FRACTION = _probe_fast_fraction()


def _dy_fraction(man: int, exp: int) -> Fraction:
    """Exact Fraction equal to man * 2**exp."""
    if man == 0:
        return _ZERO
    if exp >= 0:
        return Fraction(man << exp)
    shift = -exp
    tz = (man & -man).bit_length() - 1
    if tz:
        j = tz if tz < shift else shift
        man >>= j
        shift -= j
    if shift == 0:
        return Fraction(man)
    if _FAST_FRACTION:
        f = object.__new__(Fraction)
        f._numerator = man
        f._denominator = 1 << shift
        return f
    return Fraction(man, 1 << shift)  # pragma: no cover


def _dy(x: Fraction, prec: int, rnd: int) -> tuple[int, int]:
    """Dyadic form of a rational, exact if possible, else rounded toward rnd."""
    num = x.numerator
    den = x.denominator
    if den == 1:
        return num, 0
    k = den.bit_length() - 1
    if den == 1 << k:
        return num, -k
    e = num.bit_length() - den.bit_length() - prec
    if e >= 0:
        q, r = divmod(num, den << e)
    else:
        q, r = divmod(num << -e, den)
    if rnd > 0 and r:
        q += 1
    return q, e


def _dy_round(man: int, exp: int, prec: int, rnd: int) -> tuple[int, int]:
    """Round a dyadic to prec significant bits, toward rnd."""
    extra = man.bit_length() - prec
    if extra <= 0:
        return man, exp
    q = man >> extra
    if rnd > 0 and man & ((1 << extra) - 1):
        q += 1
    return q, exp + extra


def _dy_conv(x: Fraction, prec: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Dyadic approximation of a rational with a one-ulp error bound.

    Returns (value, err) with |x - value| <= err; err is (0, 0) exactly
    when the conversion is exact (dyadic input).
    """
    num = x.numerator
    den = x.denominator
    if den == 1:
        return (num, 0), (0, 0)
    k = den.bit_length() - 1
    if den == 1 << k:
        return (num, -k), (0, 0)
    e = num.bit_length() - den.bit_length() - prec
    if e >= 0:
        q = num // (den << e)
    else:
        q = (num << -e) // den
    return (q, e), (1, e)


def _dy_round_err(man: int, exp: int,
                  prec: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Truncate to prec bits; returns (value, err) with the ulp bound."""
    extra = man.bit_length() - prec
    if extra <= 0:
        return (man, exp), (0, 0)
    return (man >> extra, exp + extra), (1, exp + extra)


def _dy_cmp(a: tuple[int, int], b: tuple[int, int]) -> int:
    ma, ea = a
    mb, eb = b
    sa = (ma > 0) - (ma < 0)
    sb = (mb > 0) - (mb < 0)
    if sa != sb:
        return sa - sb
    d = ea - eb
    if d >= 0:
        lhs, rhs = ma << d, mb
    else:
        lhs, rhs = ma, mb << -d
    return (lhs > rhs) - (lhs < rhs)


def _dy_add(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    ma, ea = a
    mb, eb = b
    if ma == 0:
        return b
    if mb == 0:
        return a
    d = ea - eb
    if d >= 0:
        return (ma << d) + mb, eb
    return ma + (mb << -d), ea


def _dy_mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    return a[0] * b[0], a[1] + b[1]


def _dy_pow(a: tuple[int, int], n: int, prec: int, rnd: int) -> tuple[int, int]:
    """Directed power of a nonnegative dyadic by repeated squaring."""
    result = (1, 0)
    base = _dy_round(a[0], a[1], prec, rnd)
    e = n
    while e:
        if e & 1:
            result = _dy_round(*_dy_mul(result, base), prec, rnd)
        base = _dy_round(*_dy_mul(base, base), prec, rnd)
        e >>= 1
    return result


def _dy_inv(a: tuple[int, int], prec: int, rnd: int) -> tuple[int, int]:
    """Directed reciprocal of a nonzero dyadic."""
    man, exp = a
    neg = man < 0
    if neg:
        man = -man
    s = prec + man.bit_length()
    q, r = divmod(1 << s, man)
    round_up_mag = (rnd > 0) != neg
    if round_up_mag and r:
        q += 1
    return (-q if neg else q), -s - exp


def _dy_root(a: tuple[int, int], k: int, prec: int, rnd: int) -> tuple[int, int]:
    """Directed k-th root of a nonnegative dyadic."""
    man, exp = a
    if man == 0:
        return 0, 0
    u = (man.bit_length() + exp) // k - prec
    shift = exp - k * u
    if shift >= 0:
        scaled = man << shift
        rem = 0
    else:
        scaled = man >> -shift
        rem = man & ((1 << -shift) - 1)
    if rnd > 0 and rem:
        scaled += 1
    r = int_nth_root(scaled, k)
    if rnd > 0 and r**k < scaled:
        r += 1
    return r, u


def round_down(x: Fraction, prec: int) -> Fraction:
    """Round toward -infinity to `prec` significant bits."""
    return _dy_fraction(*_dy_round(*_dy(x, prec, -1), prec, -1))


def round_up(x: Fraction, prec: int) -> Fraction:
    """Round toward +infinity to `prec` significant bits."""
    return _dy_fraction(*_dy_round(*_dy(x, prec, 1), prec, 1))


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"inverted interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "Interval":
        f = Fraction(x)
        return cls(f, f)

    @classmethod
    def of(cls, lo, hi) -> "Interval":
        return cls(Fraction(lo), Fraction(hi))

    def width(self) -> Fraction:
        return self.hi - self.lo

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= Fraction(x) <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def is_positive(self) -> bool:
        return self.lo > 0

    def round_out(self, prec: int) -> "Interval":
        return Interval(round_down(self.lo, prec), round_up(self.hi, prec))

    def _dylo(self, prec: int) -> tuple[int, int]:
        return _dy(self.lo, prec, -1)

    def _dyhi(self, prec: int) -> tuple[int, int]:
        return _dy(self.hi, prec, 1)

    @staticmethod
    def _build(lo: tuple[int, int], hi: tuple[int, int], prec: int) -> "Interval":
        lo = _dy_round(lo[0], lo[1], prec, -1)
        hi = _dy_round(hi[0], hi[1], prec, 1)
        return Interval(_dy_fraction(*lo), _dy_fraction(*hi))

    def add(self, other: "Interval", prec: int) -> "Interval":
        return Interval._build(
            _dy_add(self._dylo(prec), other._dylo(prec)),
            _dy_add(self._dyhi(prec), other._dyhi(prec)),
            prec,
        )

    def sub(self, other: "Interval", prec: int) -> "Interval":
        neg = other.neg()
        return self.add(neg, prec)

    def neg(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def mul(self, other: "Interval", prec: int) -> "Interval":
        al, ah = self._dylo(prec), self._dyhi(prec)
        bl, bh = other._dylo(prec), other._dyhi(prec)
        a_pos = al[0] >= 0
        a_neg = ah[0] <= 0
        b_pos = bl[0] >= 0
        b_neg = bh[0] <= 0
        if a_pos:
            if b_pos:
                lo, hi = _dy_mul(al, bl), _dy_mul(ah, bh)
            elif b_neg:
                lo, hi = _dy_mul(ah, bl), _dy_mul(al, bh)
            else:
                lo, hi = _dy_mul(ah, bl), _dy_mul(ah, bh)
        elif a_neg:
            if b_pos:
                lo, hi = _dy_mul(al, bh), _dy_mul(ah, bl)
            elif b_neg:
                lo, hi = _dy_mul(ah, bh), _dy_mul(al, bl)
            else:
                lo, hi = _dy_mul(al, bh), _dy_mul(al, bl)
        else:
            if b_pos:
                lo, hi = _dy_mul(al, bh), _dy_mul(ah, bh)
            elif b_neg:
                lo, hi = _dy_mul(ah, bl), _dy_mul(al, bl)
            else:
                c1, c2 = _dy_mul(al, bh), _dy_mul(ah, bl)
                lo = c1 if _dy_cmp(c1, c2) <= 0 else c2
                c3, c4 = _dy_mul(al, bl), _dy_mul(ah, bh)
                hi = c3 if _dy_cmp(c3, c4) >= 0 else c4
        return Interval._build(lo, hi, prec)

    def scale(self, c, prec: int) -> "Interval":
        c = Fraction(c)
        if c >= 0:
            dc_lo = _dy(c, prec, -1)
            dc_hi = _dy(c, prec, 1)
            return Interval._build(
                _dy_mul(self._dylo(prec), dc_lo if self.lo >= 0 else dc_hi),
                _dy_mul(self._dyhi(prec), dc_hi if self.hi >= 0 else dc_lo),
                prec,
            )
        dc_lo = _dy(c, prec, -1)
        dc_hi = _dy(c, prec, 1)
        return Interval._build(
            _dy_mul(self._dyhi(prec), dc_lo if self.hi >= 0 else dc_hi),
            _dy_mul(self._dylo(prec), dc_hi if self.lo >= 0 else dc_lo),
            prec,
        )

    def div(self, other: "Interval", prec: int) -> "Interval":
        if other.contains_zero():
            raise DivisionByIntervalContainingZero(f"divide by {other}")
        inv_lo = _dy_inv(other._dyhi(prec), prec, -1)
        inv_hi = _dy_inv(other._dylo(prec), prec, 1)
        inverse = Interval._build(inv_lo, inv_hi, prec)
        return self.mul(inverse, prec)

    def pow_int(self, n: int, prec: int) -> "Interval":
        """x^n for n >= 0, with the usual sign/straddle case split."""
        if n < 0:
            raise ValueError("use div for negative powers")
        if n == 0:
            return Interval.point(1)
        if n == 1:
            return self.round_out(prec)
        lo_d, hi_d = self._dylo(prec), self._dyhi(prec)
        if n % 2 == 1 or lo_d[0] >= 0:
            return Interval._build(
                _dy_pow_signed(lo_d, n, prec, -1),
                _dy_pow_signed(hi_d, n, prec, 1),
                prec,
            )
        if hi_d[0] <= 0:
            return Interval._build(
                _dy_pow_signed(hi_d, n, prec, -1),
                _dy_pow_signed(lo_d, n, prec, 1),
                prec,
            )
        top1 = _dy_pow_signed(lo_d, n, prec, 1)
        top2 = _dy_pow_signed(hi_d, n, prec, 1)
        top = top1 if _dy_cmp(top1, top2) >= 0 else top2
        return Interval._build((0, 0), top, prec)

    def nth_root(self, k: int, prec: int) -> "Interval":
        """Enclosure of x ** (1/k) for a nonnegative interval."""
        if self.lo < 0:
            raise NegativeRadicand(f"nth_root of {self}")
        return Interval._build(
            _dy_root(self._dylo(prec), k, prec, -1),
            _dy_root(self._dyhi(prec), k, prec, 1),
            prec,
        )

    def sqrt(self, prec: int) -> "Interval":
        return self.nth_root(2, prec)

    def abs_(self) -> "Interval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return self.neg()
        return Interval(_ZERO, max(-self.lo, self.hi))

    def intersect(self, other: "Interval") -> "Interval | None":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        return Interval(lo, hi) if lo <= hi else None

    def strictly_inside(self, other: "Interval") -> bool:
        return other.lo < self.lo and self.hi < other.hi

    def __repr__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def _dy_pow_signed(a: tuple[int, int], n: int, prec: int, rnd: int) -> tuple[int, int]:
    if a[0] >= 0:
        return _dy_pow(a, n, prec, rnd)
    mag_rnd = -rnd if n % 2 else rnd
    mag = _dy_pow((-a[0], a[1]), n, prec, mag_rnd)
    return (-mag[0], mag[1]) if n % 2 else mag


@dataclass(frozen=True)
class ComplexInterval:
    re: Interval
    im: Interval

    @classmethod
    def point(cls, re, im=0) -> "ComplexInterval":
        return cls(Interval.point(re), Interval.point(im))

    @classmethod
    def zero(cls) -> "ComplexInterval":
        return cls.point(0, 0)

    def add(self, other: "ComplexInterval", prec: int) -> "ComplexInterval":
        return ComplexInterval(self.re.add(other.re, prec), self.im.add(other.im, prec))

    def sub(self, other: "ComplexInterval", prec: int) -> "ComplexInterval":
        return ComplexInterval(self.re.sub(other.re, prec), self.im.sub(other.im, prec))

    def neg(self) -> "ComplexInterval":
        return ComplexInterval(self.re.neg(), self.im.neg())

    def mul(self, other: "ComplexInterval", prec: int) -> "ComplexInterval":
        re = self.re.mul(other.re, prec).sub(self.im.mul(other.im, prec), prec)
        im = self.re.mul(other.im, prec).add(self.im.mul(other.re, prec), prec)
        return ComplexInterval(re, im)

    def scale(self, c, prec: int) -> "ComplexInterval":
        return ComplexInterval(self.re.scale(c, prec), self.im.scale(c, prec))

    def pow_int(self, n: int, prec: int) -> "ComplexInterval":
        result = ComplexInterval.point(1)
        base = self
        e = n
        while e:
            if e & 1:
                result = result.mul(base, prec)
            base = base.mul(base, prec)
            e >>= 1
        return result

    def abs_(self, prec: int) -> "Interval":
        s = self.re.pow_int(2, prec).add(self.im.pow_int(2, prec), prec)
        return s.sqrt(prec)

    def sup_mag(self) -> Fraction:
        """Cheap upper bound for |z|: sup|re| + sup|im|."""
        re_sup = max(-self.re.lo, self.re.hi)
        im_sup = max(-self.im.lo, self.im.hi)
        return re_sup + im_sup

    def width(self) -> Fraction:
        return max(self.re.width(), self.im.width())

    def __repr__(self) -> str:
        return f"({self.re} + {self.im}i)"


_SQRT_CACHE: dict[tuple[int, int], Interval] = {}


def sqrt_int_interval(n: int, prec: int) -> Interval:
    """Cached enclosure of sqrt(n) for a nonnegative integer n."""
    key = (n, prec)
    hit = _SQRT_CACHE.get(key)
    if hit is None:
        hit = _SQRT_CACHE.setdefault(key, Interval.point(n).sqrt(prec))
    return hit


def complexify(x: QuadInt, prec: int) -> ComplexInterval:
    """Enclosure of x as a complex number: exact real part, sqrt(|d|) imag."""
    field: FieldSpec = x.field
    re = Fraction(x.a) + Fraction(x.b) * field.omega_re
    root = sqrt_int_interval(-field.d, prec)
    if field.omega_trace == 0:
        im = root.scale(x.b, prec)
    else:
        im = root.scale(Fraction(x.b, 2), prec)
    return ComplexInterval(Interval.point(re), im)
