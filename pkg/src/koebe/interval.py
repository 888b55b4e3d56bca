"""Closed real intervals with outward-rounded binary64 endpoints.

Every operation rounds the computed lower endpoint one ulp toward -inf and
the upper endpoint one ulp toward +inf, unless the floating result is known
to be exact, so the result always contains the exact real result of the
operation applied to any points of the operands.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass
from numbers import Real

import mpmath
from mpmath import libmp

_INF = math.inf


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


def _sum_bounds(a: float, b: float) -> tuple[float, float]:
    # TwoSum: err is the exact rounding error of a + b
    s = a + b
    if not math.isfinite(s):
        return _down(s), _up(s)
    bv = s - a
    err = (a - (s - bv)) + (b - bv)
    if err == 0.0:
        return s, s
    return (s, _up(s)) if err > 0 else (_down(s), s)


_SPLITTER = 134217729.0  # 2**27 + 1
# Dekker's product is error-free only away from overflow and underflow
_TWO_PRODUCT_MIN = 2.0**-900
_TWO_PRODUCT_MAX = 2.0**990


def _split(a: float) -> tuple[float, float]:
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def _prod_bounds(a: float, b: float) -> tuple[float, float]:
    p = a * b
    if a == 0.0 or b == 0.0:
        return p, p
    if not (_TWO_PRODUCT_MIN < abs(a) < _TWO_PRODUCT_MAX and _TWO_PRODUCT_MIN < abs(b) < _TWO_PRODUCT_MAX):
        return _down(p), _up(p)
    if not _TWO_PRODUCT_MIN < abs(p) < _TWO_PRODUCT_MAX:
        return _down(p), _up(p)
    # TwoProduct: err is the exact rounding error of a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    if err == 0.0:
        return p, p
    return (p, _up(p)) if err > 0 else (_down(p), p)


def _quot_bounds(a: float, b: float) -> tuple[float, float]:
    q = a / b
    if a == 0.0:
        return q, q
    lo, hi = _prod_bounds(q, b)
    if lo == hi == a:
        return q, q
    return _down(q), _up(q)


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if math.isnan(lo) or math.isnan(hi) or lo > hi:
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x) -> "Interval":
        """Degenerate interval. ``x`` is taken as exact (ints must fit in 53 bits)."""
        if isinstance(x, Interval):
            return x
        if isinstance(x, int) and abs(x) > 2**53:
            f = float(x)
            return cls(_down(f), _up(f))
        return cls(float(x), float(x))

    @classmethod
    def hull(cls, *values) -> "Interval":
        ivs = [cls.point(v) for v in values]
        return cls(min(v.lo for v in ivs), max(v.hi for v in ivs))

    # -- queries ---------------------------------------------------------
    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * self.lo + 0.5 * self.hi

    def contains(self, x) -> bool:
        other = Interval.point(x)
        return self.lo <= other.lo and other.hi <= self.hi

    def is_positive(self) -> bool:
        return self.lo > 0.0

    def is_negative(self) -> bool:
        return self.hi < 0.0

    def is_nonnegative(self) -> bool:
        return self.lo >= 0.0

    def straddles_zero(self) -> bool:
        return self.lo <= 0.0 <= self.hi

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: "Interval") -> "Interval":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise ValueError("empty intersection")
        return Interval(lo, hi)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, (Interval, Real)):
            return NotImplemented
        o = Interval.point(other)
        return Interval(_sum_bounds(self.lo, o.lo)[0], _sum_bounds(self.hi, o.hi)[1])

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        if not isinstance(other, (Interval, Real)):
            return NotImplemented
        o = Interval.point(other)
        return Interval(_sum_bounds(self.lo, -o.hi)[0], _sum_bounds(self.hi, -o.lo)[1])

    def __rsub__(self, other):
        return Interval.point(other) - self

    def __mul__(self, other):
        if not isinstance(other, (Interval, Real)):
            return NotImplemented
        o = Interval.point(other)
        bounds = [_prod_bounds(a, b) for a in (self.lo, self.hi) for b in (o.lo, o.hi)]
        return Interval(min(lo for lo, _ in bounds), max(hi for _, hi in bounds))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (Interval, Real)):
            return NotImplemented
        o = Interval.point(other)
        if o.straddles_zero():
            raise ZeroDivisionError(f"division by interval containing zero: {o}")
        bounds = [_quot_bounds(x, y) for x in (self.lo, self.hi) for y in (o.lo, o.hi)]
        return Interval(min(b[0] for b in bounds), max(b[1] for b in bounds))

    def __rtruediv__(self, other):
        return Interval.point(other) / self

    def square(self) -> "Interval":
        if self.lo >= 0.0:
            return Interval(max(0.0, _prod_bounds(self.lo, self.lo)[0]), _prod_bounds(self.hi, self.hi)[1])
        if self.hi <= 0.0:
            return Interval(max(0.0, _prod_bounds(self.hi, self.hi)[0]), _prod_bounds(self.lo, self.lo)[1])
        m = max(-self.lo, self.hi)
        return Interval(0.0, _prod_bounds(m, m)[1])

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Interval(1.0, 1.0)
        base = self
        # square-and-multiply; square() keeps even powers nonnegative
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base.square()
        return result

    def sqrt(self) -> "Interval":
        if self.lo < 0.0:
            raise ValueError(f"sqrt of interval with negative part: {self}")
        lo = max(0.0, _down(math.sqrt(self.lo)))
        return Interval(lo, _up(math.sqrt(self.hi)))

    def __repr__(self):
        return f"Interval({self.lo!r}, {self.hi!r})"


def _enclose_mpf(value) -> Interval:
    # value carries ~200 good bits; one ulp either side of its rounding covers it
    f = float(value)
    return Interval(_down(f), _up(f))


def cos_pi_frac(p: int, q: int) -> Interval:
    """Enclosure of cos(p*pi/q), at most 2 ulp wide."""
    with mpmath.workprec(200):
        return _enclose_mpf(mpmath.cospi(mpmath.mpf(p) / q))


def sin_pi_frac(p: int, q: int) -> Interval:
    """Enclosure of sin(p*pi/q), at most 2 ulp wide."""
    with mpmath.workprec(200):
        return _enclose_mpf(mpmath.sinpi(mpmath.mpf(p) / q))


@contextmanager
def mp_interval_precision(bits: int):
    """Run mpmath interval arithmetic at ``bits`` of working precision; yields the context."""
    ctx = mpmath.iv
    saved = ctx.prec
    ctx.prec = bits
    try:
        yield ctx
    finally:
        ctx.prec = saved


def from_mp_interval(x) -> Interval:
    """Round an mpmath interval outward to binary64 endpoints."""
    lo, hi = x._mpi_
    return Interval(libmp.to_float(lo, rnd=libmp.round_floor), libmp.to_float(hi, rnd=libmp.round_ceiling))
