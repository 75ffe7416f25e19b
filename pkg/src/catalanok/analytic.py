"""Certified analytic inequalities: binomial tail bounds, root isolation,
and the prime-power exponent calculus.

Three groups of checks live here:

* binomial series tails: enclosures of the truncation error of (1+z)^a, of
  its positive majorant at |z|, and of the product-form bound, certified as
  a chain (tail_bounds);
* distance-to-root certification: all p complex p-th roots of an exact
  algebraic integer are isolated in disjoint boxes (mpmath seeds verified
  by an interval Krawczyk step), then compared against 1/2 (theorem1_*);
* the q-adic exponent bookkeeping t = m + ord_q(m!) and the resulting
  q^{t-(p-2)/2} bound values, including the three special prime pairs
  (theorem3_*).

Every certificate is decided on interval enclosures with exact rational
endpoints; mpmath supplies only untrusted starting points.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import mpmath

from .errors import AbsTooSmall, Inconclusive, NotInUnitDisk, NotPrime
from .intervals import (
    DEFAULT_PRECISION,
    MAX_PRECISION,
    ComplexInterval,
    Interval,
    _dy_add,
    _dy_cmp,
    _dy_conv,
    _dy_fraction,
    _dy_mul,
    _dy_pow,
    _dy_round,
    _dy_round_err,
    complexify,
    round_up,
)
from .intmath import is_prime, ord_in_factorial
from .quadint import QuadInt, one

_HALF = Fraction(1, 2)


def binomial_fraction(a: Fraction, r: int) -> Fraction:
    """Generalized binomial coefficient C(a, r) as an exact rational."""
    num = Fraction(1)
    for j in range(r):
        num *= a - j
    return num / math.factorial(r)


def rising_over_factorial(a: Fraction, m: int) -> Fraction:
    """a (a+1) ... (a+m-1) / m! as an exact rational."""
    num = Fraction(1)
    for j in range(m):
        num *= a + j
    return num / math.factorial(m)


def _dy_abs(a: tuple[int, int]) -> tuple[int, int]:
    return (a[0] if a[0] >= 0 else -a[0]), a[1]


def _e1_tail(a: Fraction, z: ComplexInterval, m: int, prec: int,
             rho: Fraction) -> Interval:
    """Enclosure of |sum_{r>=m} C(a,r) z^r|, the truncation error of (1+z)^a.

    The running term is a complex disk: a dyadic center plus a radius that
    absorbs every rounding error.  Disk multiplication is rotation
    invariant, so the radius contracts with |z| instead of suffering the
    rectangle wrapping blowup.  Once the term index passes a, consecutive
    term magnitudes shrink by at least the disk norm of z, so the remaining
    tail is enclosed by a geometric series.
    """
    # Disk form of z: dyadic center, radius covering box size and rounding.
    (zre, ere) = _dy_conv(z.re.mid(), prec)
    (zim, eim) = _dy_conv(z.im.mid(), prec)
    half_diag = _dy_conv((z.re.width() + z.im.width()) / 2, prec)
    z_rad = _dy_add(_dy_add(half_diag[0], half_diag[1]), _dy_add(ere, eim))
    # |any point of z| <= |center| + z_rad <= rho + z_rad (midpoint in box).
    rho_dy, rho_err = _dy_conv(rho, prec)
    lam = _dy_round(*_dy_add(_dy_add(rho_dy, rho_err), z_rad), prec, 1)
    lam_frac = _dy_fraction(*lam)
    if lam_frac >= 1:
        raise Inconclusive("disk norm of z reaches 1")

    def scale_disk(cre, cim, rad, factor: Fraction):
        """Disk times an exact rational scalar."""
        fd, f_err = _dy_conv(factor, prec)
        f_abs = _dy_add(_dy_abs(fd), f_err)
        sup = _dy_add(_dy_abs(cre), _dy_abs(cim))
        nre, e1 = _dy_round_err(*_dy_mul(cre, fd), prec)
        nim, e2 = _dy_round_err(*_dy_mul(cim, fd), prec)
        rad = _dy_add(_dy_mul(rad, f_abs), _dy_mul(sup, f_err))
        rad = _dy_round(*_dy_add(rad, _dy_add(e1, e2)), prec, 1)
        return nre, nim, rad

    def mul_disk_z(cre, cim, rad):
        """Disk times the z disk: radius picks up |c| z_rad + rad * lam."""
        sup = _dy_add(_dy_abs(cre), _dy_abs(cim))
        t1 = _dy_mul(cre, zre)
        t2 = _dy_mul(cim, zim)
        t3 = _dy_mul(cre, zim)
        t4 = _dy_mul(cim, zre)
        nre, e1 = _dy_round_err(*_dy_add(t1, (-t2[0], t2[1])), prec)
        nim, e2 = _dy_round_err(*_dy_add(t3, t4), prec)
        rad = _dy_add(_dy_mul(rad, lam), _dy_mul(sup, z_rad))
        rad = _dy_round(*_dy_add(rad, _dy_add(e1, e2)), prec, 1)
        return nre, nim, rad

    # First term C(a, m) z^m: rectangle power (depth log m), then a disk.
    zp = z.pow_int(m, prec)
    cre, ere = _dy_conv(zp.re.mid(), prec)
    cim, eim = _dy_conv(zp.im.mid(), prec)
    box_rad = _dy_conv((zp.re.width() + zp.im.width()) / 2, prec)
    rad = _dy_add(_dy_add(box_rad[0], box_rad[1]), _dy_add(ere, eim))
    cre, cim, rad = scale_disk(cre, cim, rad, binomial_fraction(a, m))

    tot_re = (0, 0)
    tot_im = (0, 0)
    tot_rad = (0, 0)
    r = m
    a_ceil = math.ceil(a)
    threshold = None
    limit = 8 * prec + 4096
    while True:
        tot_re, e1 = _dy_round_err(*_dy_add(tot_re, cre), prec)
        tot_im, e2 = _dy_round_err(*_dy_add(tot_im, cim), prec)
        tot_rad = _dy_round(*_dy_add(_dy_add(tot_rad, rad), _dy_add(e1, e2)),
                            prec, 1)
        tm = _dy_add(_dy_add(_dy_abs(cre), _dy_abs(cim)), rad)
        if threshold is None:
            threshold = (tm[0], tm[1] - (prec // 2 + 8))
        if r >= a_ceil and _dy_cmp(tm, threshold) <= 0:
            tail = _dy_fraction(*tm) * lam_frac / (1 - lam_frac)
            break
        cre, cim, rad = mul_disk_z(cre, cim, rad)
        cre, cim, rad = scale_disk(cre, cim, rad, Fraction(a - r, r + 1))
        r += 1
        if r - m > limit:
            raise Inconclusive(
                f"series for |z| <= {float(rho):.4f} did not settle")
    pad = _dy_fraction(*tot_rad) + tail
    mag = ComplexInterval.point(_dy_fraction(*tot_re),
                                _dy_fraction(*tot_im)).abs_(prec)
    lo = mag.lo - pad
    return Interval(lo if lo > 0 else Fraction(0),
                    round_up(mag.hi + pad, prec))


def _e2_tail(a: Fraction, x: Interval, m: int, prec: int) -> Interval:
    """Enclosure of the positive majorant tail sum_{r>=m} C(-a,r)(-x)^r.

    Every term is positive, so directed endpoint arithmetic on dyadic pairs
    is exact bookkeeping: the lower endpoint is a true partial-sum lower
    bound and only the upper endpoint receives the geometric tail.
    """
    x_lo = _dy_conv(x.lo, prec)[0]
    xc, xe = _dy_conv(x.hi, prec)
    x_hi = _dy_add(xc, xe)
    x_hi_frac = _dy_fraction(*x_hi)
    coef = rising_over_factorial(a, m)
    c_lo, (c_err_man, c_err_exp) = _dy_conv(coef, prec)
    c_hi = _dy_add(c_lo, (c_err_man, c_err_exp))
    term_lo = _dy_round(*_dy_mul(_dy_pow(x_lo, m, prec, -1), c_lo), prec, -1)
    term_hi = _dy_round(*_dy_mul(_dy_pow(x_hi, m, prec, 1), c_hi), prec, 1)
    tot_lo = (0, 0)
    tot_hi = (0, 0)
    r = m
    threshold = None
    limit = 8 * prec + 4096
    while True:
        tot_lo = _dy_round(*_dy_add(tot_lo, term_lo), prec, -1)
        tot_hi = _dy_round(*_dy_add(tot_hi, term_hi), prec, 1)
        if threshold is None:
            threshold = (term_hi[0], term_hi[1] - (prec // 2 + 8))
        factor = (a + r) / (r + 1)
        ratio = x_hi_frac * (factor if factor > 1 else Fraction(1))
        if ratio < 1 and _dy_cmp(term_hi, threshold) <= 0:
            tail = _dy_fraction(*term_hi) * ratio / (1 - ratio)
            hi = round_up(_dy_fraction(*tot_hi) + tail, prec)
            return Interval(_dy_fraction(*tot_lo), hi)
        f_lo, (fe_man, fe_exp) = _dy_conv(factor, prec)
        f_hi = _dy_add(f_lo, (fe_man, fe_exp))
        term_lo = _dy_round(*_dy_mul(_dy_mul(term_lo, x_lo), f_lo), prec, -1)
        term_hi = _dy_round(*_dy_mul(_dy_mul(term_hi, x_hi), f_hi), prec, 1)
        r += 1
        if r - m > limit:
            raise Inconclusive("majorant series did not settle")


def _product_bound(a: Fraction, x: Interval, m: int, prec: int) -> Interval:
    """Enclosure of [a(a+1)...(a+m-1)/m!] x^m (1-x)^{-a-m} for x in [0,1)."""
    coef = rising_over_factorial(a, m)
    xm = x.pow_int(m, prec)
    one_minus = Interval.point(1).sub(x, prec)
    na, da = a.numerator, a.denominator
    power = one_minus.pow_int(na + m * da, prec)
    root = power.nth_root(da, prec)
    inv = Interval.point(1).div(root, prec)
    return xm.scale(coef, prec).mul(inv, prec)


@dataclass(frozen=True)
class TailBounds:
    """Certified chain: e1_bound <= e2_value <= lemma6_bound."""

    a: Fraction
    m: int
    e1_bound: Interval
    e2_value: Interval
    lemma6_bound: Interval


def tail_bounds(a: Fraction, z: ComplexInterval, m: int,
                prec: int = DEFAULT_PRECISION) -> TailBounds:
    """Certify the two-step truncation-error chain at one (a, z, m) point.

    Raises NotInUnitDisk if |z| < 1 cannot be certified, and Inconclusive
    when the enclosures fail to separate (the caller should raise prec).
    """
    a = Fraction(a)
    if a <= 0:
        raise ValueError("a must be positive")
    if m < 1:
        raise ValueError("m must be at least 1")
    az = z.abs_(prec)
    if az.hi >= 1:
        raise NotInUnitDisk(f"|z| enclosure {az} reaches 1")
    e1 = _e1_tail(a, z, m, prec, az.hi)
    e2 = _e2_tail(a, az, m, prec)
    l6 = _product_bound(a, az, m, prec)
    if not (e1.hi <= e2.lo and e2.hi <= l6.lo):
        raise Inconclusive(
            f"chain not separated at precision {prec}: "
            f"e1={e1}, e2={e2}, bound={l6}"
        )
    return TailBounds(a=a, m=m, e1_bound=e1, e2_value=e2, lemma6_bound=l6)


def with_precision_doubling(fn, prec: int = DEFAULT_PRECISION,
                            max_prec: int = MAX_PRECISION,
                            max_doublings: int | None = None):
    """Run fn(prec), doubling precision on Inconclusive up to the limits."""
    doublings = 0
    while True:
        try:
            return fn(prec)
        except Inconclusive:
            if prec * 2 > max_prec:
                raise
            if max_doublings is not None and doublings >= max_doublings:
                raise
            prec *= 2
            doublings += 1


# 16 exact rational unit vectors, used to place z at assorted arguments.
_DIRECTIONS: tuple[tuple[Fraction, Fraction], ...] = tuple(
    (Fraction(u, w), Fraction(v, w))
    for (u, v, w) in (
        (1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1),
        (3, 4, 5), (-3, 4, 5), (3, -4, 5), (-3, -4, 5),
        (4, 3, 5), (-4, 3, 5), (4, -3, 5), (-4, -3, 5),
        (5, 12, 13), (-5, 12, 13), (12, 5, 13), (-12, 5, 13),
    )
)


@dataclass(frozen=True)
class TailsSweep:
    samples: int
    certified: int
    inconclusive: int
    failures: tuple[tuple[Fraction, Fraction, Fraction, int], ...]

    @property
    def all_certified(self) -> bool:
        return self.certified == self.samples


def tails_grid(samples: int, seed: int = 20240901,
               prec: int = DEFAULT_PRECISION, max_doublings: int = 2,
               m_max: int = 20) -> TailsSweep:
    """Randomized grid certification of the truncation-error chain.

    Samples a in (0, 5], |z| <= 0.9 over 16 rational directions, m <= m_max,
    all as exact rationals so every enclosure starts from a point.
    """
    rng = random.Random(seed)
    certified = 0
    inconclusive = 0
    failures = []
    for _ in range(samples):
        a = Fraction(rng.randint(1, 320), 64)
        rho = Fraction(rng.randint(0, 921), 1024)
        ux, uy = _DIRECTIONS[rng.randrange(len(_DIRECTIONS))]
        m = rng.randint(1, m_max)
        z = ComplexInterval.point(rho * ux, rho * uy)
        try:
            with_precision_doubling(
                lambda w: tail_bounds(a, z, m, w),
                prec=prec,
                max_doublings=max_doublings,
            )
            certified += 1
        except Inconclusive:
            inconclusive += 1
            failures.append((a, rho * ux, rho * uy, m))
    return TailsSweep(samples, certified, inconclusive, tuple(failures))


# ---------------------------------------------------------------------------
# Certified p-th roots and the distance-to-lattice-point check.
# ---------------------------------------------------------------------------


def _to_fraction(x) -> Fraction:
    """Exact rational from an mpmath float's printed form (seed use only)."""
    s = mpmath.nstr(x, mpmath.mp.dps, strip_zeros=False)
    return Fraction(s)


def _seed_roots(c: QuadInt, p: int, dps: int) -> list[tuple[Fraction, Fraction]]:
    """Untrusted approximations of the p complex p-th roots of c."""
    f = c.field
    with mpmath.workdps(dps):
        sq = mpmath.sqrt(-f.d)
        re = mpmath.mpf(c.a) + mpmath.mpf(c.b) * mpmath.mpf(f.omega_trace) / 2
        im = mpmath.mpf(c.b) * (sq / 2 if f.omega_trace else sq)
        root = mpmath.mpc(re, im) ** (mpmath.mpf(1) / p)
        zeta = mpmath.exp(2j * mpmath.pi / p)
        seeds = []
        w = root
        for _ in range(p):
            seeds.append((_to_fraction(w.real), _to_fraction(w.imag)))
            w = w * zeta
    return seeds


def _krawczyk_box(cbox: ComplexInterval, p: int,
                  seed: tuple[Fraction, Fraction], rad: Fraction,
                  prec: int) -> ComplexInterval:
    """Certify and tighten a unique root of z^p - c inside seed +- rad.

    Interval Krawczyk step in real 2x2 form; contraction on the first pass
    proves existence and uniqueness, further passes only tighten.
    """
    sre, sim = seed
    box = ComplexInterval(
        Interval(sre - rad, sre + rad),
        Interval(sim - rad, sim + rad),
    )
    point_one = Interval.point(1)
    for sweep in range(2):
        mre = box.re.mid()
        mim = box.im.mid()
        mpoint = ComplexInterval.point(mre, mim)
        fm = mpoint.pow_int(p, prec).sub(cbox, prec)
        jac = box.pow_int(p - 1, prec).scale(p, prec)
        ju, jv = jac.re.mid(), jac.im.mid()
        den = ju * ju + jv * jv
        if den == 0:
            raise Inconclusive("derivative enclosure centered at zero")
        yr = Fraction(ju, 1) / den
        yi = Fraction(-jv, 1) / den
        yfm_re = fm.re.scale(yr, prec).sub(fm.im.scale(yi, prec), prec)
        yfm_im = fm.re.scale(yi, prec).add(fm.im.scale(yr, prec), prec)
        u, v = jac.re, jac.im
        diag = point_one.sub(u.scale(yr, prec).sub(v.scale(yi, prec), prec), prec)
        off = v.scale(yr, prec).add(u.scale(yi, prec), prec)
        dre = box.re.sub(Interval.point(mre), prec)
        dim = box.im.sub(Interval.point(mim), prec)
        kre = (Interval.point(mre)
               .sub(yfm_re, prec)
               .add(diag.mul(dre, prec).add(off.mul(dim, prec), prec), prec))
        kim = (Interval.point(mim)
               .sub(yfm_im, prec)
               .add(off.neg().mul(dre, prec).add(diag.mul(dim, prec), prec), prec))
        if sweep == 0:
            if not (kre.strictly_inside(box.re) and kim.strictly_inside(box.im)):
                raise Inconclusive("Krawczyk step did not contract")
        re_cap = kre.intersect(box.re)
        im_cap = kim.intersect(box.im)
        if re_cap is None or im_cap is None:
            raise Inconclusive("Krawczyk refinement emptied the box")
        box = ComplexInterval(re_cap, im_cap)
    return box


def _boxes_disjoint(a: ComplexInterval, b: ComplexInterval) -> bool:
    return (a.re.hi < b.re.lo or b.re.hi < a.re.lo
            or a.im.hi < b.im.lo or b.im.hi < a.im.lo)


def certified_roots(c: QuadInt, p: int,
                    prec: int = DEFAULT_PRECISION) -> list[ComplexInterval]:
    """Disjoint certified enclosures of all p complex p-th roots of c != 0."""
    if c.is_zero():
        raise ValueError("roots of zero are degenerate")
    dps = max(40, prec // 8)
    seeds = _seed_roots(c, p, dps)
    cbox = complexify(c, prec)
    scale = max(abs(sre) + abs(sim) for sre, sim in seeds)
    rad = round_up(max(scale, Fraction(1)) * Fraction(1, 1 << (dps * 3 // 2)), 64)
    boxes = [_krawczyk_box(cbox, p, seed, rad, prec) for seed in seeds]
    for i in range(len(boxes)):
        for j in range(i + 1, len(boxes)):
            if not _boxes_disjoint(boxes[i], boxes[j]):
                raise Inconclusive("root boxes overlap; raise precision")
    return boxes


class Theorem1Result(NamedTuple):
    eps_abs: Interval
    unique_root: bool
    distances: tuple[Interval, ...]


def theorem1_epsilon(b: QuadInt, p: int, q: int,
                     prec: int = DEFAULT_PRECISION) -> Theorem1Result:
    """Certify 0 < |nearest p-th root of (b^p-1)^q + 1  -  b^q| <= 1/2.

    All p roots are isolated; unique_root is True when exactly one root's
    distance enclosure lies in (0, 1/2] and every other root is certified
    to lie strictly farther than 1/2.
    """
    if not (is_prime(p) and is_prime(q)):
        raise NotPrime(f"need primes, got p={p}, q={q}")
    if not p > q >= 3:
        raise ValueError(f"need p > q >= 3, got p={p}, q={q}")
    if b.norm() < 4:
        raise AbsTooSmall(f"norm({b}) = {b.norm()} < 4")
    unit = one(b.field)
    c = (b**p - unit) ** q + unit
    target = complexify(b**q, prec)
    boxes = certified_roots(c, p, prec)
    dists = tuple(box.sub(target, prec).abs_(prec) for box in boxes)
    near = [i for i, d in enumerate(dists) if d.hi <= _HALF]
    far = [i for i, d in enumerate(dists) if d.lo > _HALF]
    if len(near) + len(far) != len(dists):
        raise Inconclusive("a distance enclosure straddles 1/2")
    eps = Interval(min(d.lo for d in dists), min(d.hi for d in dists))
    if len(near) == 1 and dists[near[0]].lo > 0:
        return Theorem1Result(dists[near[0]], True, dists)
    if len(near) == 1:
        raise Inconclusive("nearest-root distance not separated from 0")
    return Theorem1Result(eps, False, dists)


def theorem1_epsilon_auto(b: QuadInt, p: int, q: int,
                          prec: int = DEFAULT_PRECISION,
                          max_prec: int = MAX_PRECISION) -> Theorem1Result:
    return with_precision_doubling(
        lambda w: theorem1_epsilon(b, p, q, w), prec=prec, max_prec=max_prec
    )


# ---------------------------------------------------------------------------
# Exponent bookkeeping t = m + ord_q(m!) and the final bound values.
# ---------------------------------------------------------------------------


def exponent_data(p: int, q: int) -> tuple[int, int, int, Fraction, Fraction]:
    """Returns (m, ord_q(m!), t, closed-form t, t - (p-2)/2)."""
    m = p // q + 1
    ordv = ord_in_factorial(m, q)
    t = m + ordv
    t_closed = (Fraction(p - 1, q) + 1 + Fraction(p - 1, q * (q - 1))
                + Fraction(1, q - 1))
    exponent = Fraction(2 * t - (p - 2), 2)
    return m, ordv, t, t_closed, exponent


def _q_half_power(q: int, half_exponent: int, prec: int) -> Interval:
    """Enclosure of q ** (half_exponent / 2) for integer half_exponent."""
    if half_exponent % 2 == 0:
        e = half_exponent // 2
        value = Fraction(q) ** e
        return Interval.point(value)
    if half_exponent > 0:
        return Interval.point(q**half_exponent).sqrt(prec)
    root = Interval.point(q**(-half_exponent)).sqrt(prec)
    return Interval.point(1).div(root, prec)


@dataclass(frozen=True)
class Theorem3Bound:
    p: int
    q: int
    m: int
    t: int
    t_closed_form: Fraction
    closed_form_agrees: bool
    exponent: Fraction
    final_bound: Interval
    special_case: str  # generic | p7q5 | q3p5 | q3p7
    x_abs_lower: Fraction | None
    premise_ok: bool

    @property
    def below_one(self) -> bool:
        return self.final_bound.hi < 1


def theorem3_bound(p: int, q: int, x_abs_lower: Fraction | None = None,
                   prec: int = DEFAULT_PRECISION) -> Theorem3Bound:
    """Final bound value q^{t-(p-2)/2} (2/3 + 1/q), with the special pairs.

    (7,5) replaces 2/3 by the sharper 32/93.  (5,3) and (7,3) rely on the
    stronger |x| > q + q^{p-2} style lower bound: (5,3) evaluates its fixed
    explicit expression, (7,3) recomputes the head and tail terms exactly
    from the supplied |x| lower bound (default q + q^{p-2}).
    """
    if not (is_prime(p) and is_prime(q)):
        raise NotPrime(f"need primes, got p={p}, q={q}")
    if not p > q >= 3:
        raise ValueError(f"need p > q >= 3, got p={p}, q={q}")
    m, _, t, t_closed, exponent = exponent_data(p, q)
    premise_ok = True
    if (p, q) == (7, 5):
        special = "p7q5"
        coef = Fraction(32, 93) + Fraction(1, 5)
        bound = _q_half_power(5, 2 * t - (p - 2), prec).scale(coef, prec)
    elif (p, q) == (5, 3):
        special = "q3p5"
        if x_abs_lower is None:
            x_abs_lower = Fraction(q + q ** (p - 2))
        s7 = Interval.point(3**7).sqrt(prec)
        s5 = Interval.point(3**5).sqrt(prec)
        geo = s5.div(s5.sub(Interval.point(1), prec), prec)
        term1 = s7.scale(Fraction(1, 486), prec).mul(geo, prec)
        term2 = s7.scale(Fraction(1, 81), prec)
        bound = term1.add(term2, prec)
        premise_ok = x_abs_lower > 3
    elif (p, q) == (7, 3):
        special = "q3p7"
        if x_abs_lower is None:
            x_abs_lower = Fraction(q + q ** (p - 2))
        if x_abs_lower <= 3:
            raise ValueError("q3p7 recalculation needs |x| lower bound > 3")
        head = Fraction(q**t, q) / (x_abs_lower - 3)
        coef = abs(binomial_fraction(Fraction(p, q), m + 1))
        tail = q**t * coef / (x_abs_lower - 2)
        bound = Interval.point(head + tail).round_out(prec)
    else:
        special = "generic"
        coef = Fraction(2, 3) + Fraction(1, q)
        bound = _q_half_power(q, 2 * t - (p - 2), prec).scale(coef, prec)
        if x_abs_lower is not None:
            gap = x_abs_lower - 3
            premise_ok = gap >= 0 and gap * gap >= q ** (p - 2)
    return Theorem3Bound(
        p=p, q=q, m=m, t=t, t_closed_form=t_closed,
        closed_form_agrees=(t_closed == t), exponent=exponent,
        final_bound=bound, special_case=special,
        x_abs_lower=x_abs_lower, premise_ok=premise_ok,
    )


SPECIAL_PAIRS = ((5, 3), (7, 3), (7, 5))


@dataclass(frozen=True)
class ExponentScan:
    p_max: int
    q_max: int
    pairs_checked: int
    violations: tuple[tuple[int, int, Fraction], ...]
    claim_q_gt_5: bool
    claim_q5_p_gt_7: bool
    claim_q3_p_gt_7: bool

    @property
    def violations_outside_special(self) -> tuple[tuple[int, int, Fraction], ...]:
        return tuple(v for v in self.violations if (v[0], v[1]) not in SPECIAL_PAIRS)

    @property
    def violation_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((p, q) for p, q, _ in self.violations)


def theorem3_exponent_scan(p_max: int, q_max: int) -> ExponentScan:
    """Exact sign survey of t - (p-2)/2 over prime pairs p > q."""
    from .intmath import primes_upto

    primes = primes_upto(max(p_max, q_max))
    violations = []
    checked = 0
    for q in primes:
        if q < 3 or q > q_max:
            continue
        for p in primes:
            if p <= q or p > p_max:
                continue
            checked += 1
            _, _, _, _, exponent = exponent_data(p, q)
            if exponent >= 0:
                violations.append((p, q, exponent))
    vio_pairs = {(p, q) for p, q, _ in violations}
    claim_q_gt_5 = not any(q > 5 for _, q in vio_pairs)
    claim_q5 = not any(q == 5 and p > 7 for p, q in vio_pairs)
    claim_q3 = not any(q == 3 and p > 7 for p, q in vio_pairs)
    return ExponentScan(
        p_max=p_max, q_max=q_max, pairs_checked=checked,
        violations=tuple(violations),
        claim_q_gt_5=claim_q_gt_5,
        claim_q5_p_gt_7=claim_q5,
        claim_q3_p_gt_7=claim_q3,
    )
