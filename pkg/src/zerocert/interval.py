"""Closed real intervals with outward rounding, and rectangular complex boxes.

Every endpoint produced by an arithmetic operation is pushed one ulp outward
with ``math.nextafter``; results of libm transcendental functions are pushed
two ulps outward (glibc's exp/log/sin/cos/atan are accurate to < 1 ulp).
The result of any operation therefore contains the exact result for all
inputs drawn from the operand intervals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import DomainError

_INF = math.inf
_LIBM_ULPS = 2


def _down(x: float, n: int = 1) -> float:
    for _ in range(n):
        x = math.nextafter(x, -_INF)
    return x


def _up(x: float, n: int = 1) -> float:
    for _ in range(n):
        x = math.nextafter(x, _INF)
    return x


def _exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return _INF


@dataclass(frozen=True, slots=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if math.isnan(lo) or math.isnan(hi):
            raise ValueError("NaN interval endpoint")
        if lo > hi:
            raise ValueError(f"empty interval [{lo!r}, {hi!r}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    # -- construction -----------------------------------------------------

    @classmethod
    def point(cls, x: float) -> Interval:
        return cls(x, x)

    @classmethod
    def from_value(cls, v) -> Interval:
        """Tightest float interval containing an exact int, Fraction, decimal string or float."""
        if isinstance(v, Interval):
            return v
        if isinstance(v, float):
            return cls(v, v)
        if isinstance(v, str):
            v = Fraction(v)
        if isinstance(v, (int, Rational)):
            f = float(v)
            exact = Fraction(f)
            if exact == v:
                return cls(f, f)
            return cls(f, _up(f)) if exact < v else cls(_down(f), f)
        raise TypeError(f"cannot enclose {type(v).__name__}")

    @classmethod
    def hull(cls, *xs) -> Interval:
        ivs = [_coerce(x) for x in xs]
        return cls(min(i.lo for i in ivs), max(i.hi for i in ivs))

    @classmethod
    def symmetric(cls, radius: float) -> Interval:
        r = abs(float(radius))
        return cls(-r, r)

    # -- inspection -------------------------------------------------------

    @property
    def mid(self) -> float:
        if math.isinf(self.lo) or math.isinf(self.hi):
            return 0.0 if self.lo == -self.hi else (self.lo if math.isinf(self.hi) else self.hi)
        return 0.5 * self.lo + 0.5 * self.hi

    @property
    def width(self) -> float:
        return _up(self.hi - self.lo)

    @property
    def rad(self) -> float:
        return _up(0.5 * self.width)

    def mag(self) -> float:
        """Largest absolute value in the interval."""
        return max(abs(self.lo), abs(self.hi))

    def mig(self) -> float:
        """Smallest absolute value in the interval."""
        if self.lo <= 0.0 <= self.hi:
            return 0.0
        return min(abs(self.lo), abs(self.hi))

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, float):
            return self.lo <= x <= self.hi
        q = Fraction(x) if not isinstance(x, Fraction) else x
        return Fraction(self.lo) <= q <= Fraction(self.hi)

    __contains__ = contains

    def certainly_lt(self, other) -> bool:
        return self.hi < _coerce(other).lo

    def certainly_le(self, other) -> bool:
        return self.hi <= _coerce(other).lo

    def certainly_gt(self, other) -> bool:
        return self.lo > _coerce(other).hi

    def certainly_positive(self) -> bool:
        return self.lo > 0.0

    def widen(self, r: float) -> Interval:
        r = abs(float(r))
        return Interval(_down(self.lo - r), _up(self.hi + r))

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __str__(self) -> str:
        return f"[{self.lo:.12g}, {self.hi:.12g}]"

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def __pos__(self) -> Interval:
        return self

    def __add__(self, other) -> Interval:
        if isinstance(other, ComplexInterval):
            return NotImplemented
        o = _coerce(other)
        return Interval(_down(self.lo + o.lo), _up(self.hi + o.hi))

    __radd__ = __add__

    def __sub__(self, other) -> Interval:
        if isinstance(other, ComplexInterval):
            return NotImplemented
        o = _coerce(other)
        return Interval(_down(self.lo - o.hi), _up(self.hi - o.lo))

    def __rsub__(self, other) -> Interval:
        if isinstance(other, ComplexInterval):
            return NotImplemented
        return _coerce(other) - self

    def __mul__(self, other) -> Interval:
        if isinstance(other, ComplexInterval):
            return NotImplemented
        o = _coerce(other)
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        if any(math.isnan(p) for p in ps):
            raise ValueError("0 * inf in interval product")
        return Interval(_down(min(ps)), _up(max(ps)))

    __rmul__ = __mul__

    def __truediv__(self, other) -> Interval:
        if isinstance(other, ComplexInterval):
            return NotImplemented
        o = _coerce(other)
        if o.lo <= 0.0 <= o.hi:
            raise ZeroDivisionError("interval divisor contains 0")
        qs = (self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi)
        return Interval(_down(min(qs)), _up(max(qs)))

    def __rtruediv__(self, other) -> Interval:
        return _coerce(other) / self

    def __pow__(self, n: int) -> Interval:
        if not isinstance(n, int):
            raise TypeError("use Interval.rpow for non-integer exponents")
        if n == 0:
            return Interval(1.0, 1.0)
        if n < 0:
            return 1.0 / (self ** (-n))
        if n == 2:
            return self.sqr()
        result = Interval(1.0, 1.0)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base.sqr()
        return result

    def sqr(self) -> Interval:
        lo2, hi2 = self.lo * self.lo, self.hi * self.hi
        if self.lo >= 0.0:
            return Interval(_down(lo2), _up(hi2))
        if self.hi <= 0.0:
            return Interval(_down(hi2), _up(lo2))
        return Interval(0.0, _up(max(lo2, hi2)))

    def __abs__(self) -> Interval:
        if self.lo >= 0.0:
            return self
        if self.hi <= 0.0:
            return -self
        return Interval(0.0, max(-self.lo, self.hi))

    # -- elementary functions ----------------------------------------------

    def sqrt(self) -> Interval:
        if self.lo < 0.0:
            raise DomainError(f"sqrt of {self}")
        return Interval(max(0.0, _down(math.sqrt(self.lo))), _up(math.sqrt(self.hi)))

    def exp(self) -> Interval:
        return Interval(max(0.0, _down(_exp(self.lo), _LIBM_ULPS)), _up(_exp(self.hi), _LIBM_ULPS))

    def log(self) -> Interval:
        if self.lo < 0.0:
            raise DomainError(f"log of {self}")
        lo = -_INF if self.lo == 0.0 else _down(math.log(self.lo), _LIBM_ULPS)
        return Interval(lo, _up(math.log(self.hi), _LIBM_ULPS))

    def rpow(self, y) -> Interval:
        """self ** y for a positive base and real exponent y."""
        return (_coerce(y) * self.log()).exp()

    def atan(self) -> Interval:
        return Interval(_down(math.atan(self.lo), _LIBM_ULPS), _up(math.atan(self.hi), _LIBM_ULPS))

    def cosh(self) -> Interval:
        lo, hi = self.lo, self.hi
        if lo >= 0.0:
            a, b = lo, hi
        elif hi <= 0.0:
            a, b = -hi, -lo
        else:
            a, b = 0.0, max(-lo, hi)
        try:
            top = _up(math.cosh(b), _LIBM_ULPS)
        except OverflowError:
            top = _INF
        try:
            bottom = 1.0 if a == 0.0 else max(1.0, _down(math.cosh(a), _LIBM_ULPS))
        except OverflowError:
            bottom = _down(_INF)
        return Interval(bottom, top)

    def cos(self) -> Interval:
        # extrema at j*pi, value (-1)**j
        return _periodic(self, math.cos, 0.0)

    def sin(self) -> Interval:
        # extrema at (j + 1/2)*pi, value (-1)**j
        return _periodic(self, math.sin, 0.5)


def _coerce(x) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval.from_value(x)


PI = Interval(math.pi, _up(math.pi))
HALF_PI = Interval(0.5 * math.pi, _up(0.5 * math.pi))
TWO_PI = Interval(2.0 * math.pi, _up(2.0 * math.pi))


def _periodic(x: Interval, fn, offset: float) -> Interval:
    lo, hi = x.lo, x.hi
    if math.isinf(lo) or math.isinf(hi) or hi - lo >= 6.283185307179586:
        return Interval(-1.0, 1.0)
    vals = (fn(lo), fn(hi))
    out_lo = max(-1.0, _down(min(vals), _LIBM_ULPS))
    out_hi = min(1.0, _up(max(vals), _LIBM_ULPS))
    # an extremum at (j + offset)*pi inside [lo, hi]; the test is conservative
    j0 = math.floor(lo / math.pi - offset) - 1
    j1 = math.ceil(hi / math.pi - offset) + 1
    for j in range(j0, j1 + 1):
        where = (j + offset) * PI
        if where.hi >= lo and where.lo <= hi:
            if j % 2 == 0:
                out_hi = 1.0
            else:
                out_lo = -1.0
    return Interval(out_lo, out_hi)


def isum(terms) -> Interval:
    """Left-to-right enclosure of a sum of intervals or exact numbers."""
    total = Interval(0.0, 0.0)
    for t in terms:
        total = total + t
    return total


@dataclass(frozen=True, slots=True)
class ComplexInterval:
    """Rectangle re x im in the complex plane."""

    re: Interval
    im: Interval

    @classmethod
    def from_complex(cls, z) -> ComplexInterval:
        if isinstance(z, ComplexInterval):
            return z
        if isinstance(z, Interval):
            return cls(z, Interval(0.0, 0.0))
        if isinstance(z, (int, float, Rational)):
            return cls(Interval.from_value(z), Interval(0.0, 0.0))
        z = complex(z)
        return cls(Interval.point(z.real), Interval.point(z.imag))

    @property
    def mid(self) -> complex:
        return complex(self.re.mid, self.im.mid)

    @property
    def width(self) -> float:
        return max(self.re.width, self.im.width)

    def contains(self, z) -> bool:
        if isinstance(z, ComplexInterval):
            return self.re.contains(z.re) and self.im.contains(z.im)
        z = complex(z)
        return self.re.contains(z.real) and self.im.contains(z.imag)

    __contains__ = contains

    def __repr__(self) -> str:
        return f"ComplexInterval({self.re!r}, {self.im!r})"

    def __neg__(self) -> ComplexInterval:
        return ComplexInterval(-self.re, -self.im)

    def conj(self) -> ComplexInterval:
        return ComplexInterval(self.re, -self.im)

    def __add__(self, other) -> ComplexInterval:
        o = _ccoerce(other)
        return ComplexInterval(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> ComplexInterval:
        o = _ccoerce(other)
        return ComplexInterval(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> ComplexInterval:
        return _ccoerce(other) - self

    def __mul__(self, other) -> ComplexInterval:
        if isinstance(other, (Interval, int, float, Rational)):
            s = _coerce(other)
            return ComplexInterval(self.re * s, self.im * s)
        o = _ccoerce(other)
        return ComplexInterval(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def abs2(self) -> Interval:
        return self.re.sqr() + self.im.sqr()

    def __truediv__(self, other) -> ComplexInterval:
        if isinstance(other, (Interval, int, float, Rational)):
            s = _coerce(other)
            return ComplexInterval(self.re / s, self.im / s)
        o = _ccoerce(other)
        d = o.abs2()
        return ComplexInterval(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def __rtruediv__(self, other) -> ComplexInterval:
        return _ccoerce(other) / self

    def abs(self) -> Interval:
        return self.abs2().sqrt()

    def exp(self) -> ComplexInterval:
        m = self.re.exp()
        return ComplexInterval(m * self.im.cos(), m * self.im.sin())

    def arg(self) -> Interval:
        """Principal argument; the box may not meet (-inf, 0]."""
        re, im = self.re, self.im
        if re.hi <= 0.0 and im.lo <= 0.0 <= im.hi:
            raise DomainError(f"box {self} meets the branch cut of log")
        if re.lo <= 0.0 and im.lo <= 0.0 <= im.hi:
            raise DomainError(f"box {self} meets the branch cut of log")
        angles = [math.atan2(y, x) for x in (re.lo, re.hi) for y in (im.lo, im.hi)]
        return Interval(_down(min(angles), _LIBM_ULPS), _up(max(angles), _LIBM_ULPS))

    def log(self) -> ComplexInterval:
        """Principal logarithm."""
        arg = self.arg()
        return ComplexInterval(0.5 * self.abs2().log(), arg)


def _ccoerce(z) -> ComplexInterval:
    return ComplexInterval.from_complex(z)
