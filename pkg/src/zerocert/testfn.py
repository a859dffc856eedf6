"""The localized test function f_{a,b,h} and its Fourier transform.

    f(t)  = (1/2pi) (e^{-iat} - e^{-ibt}) / (it cosh(ht/2))
    F(z)  = (2/pi) [arctan e^{pi(z-a)/h} - arctan e^{pi(z-b)/h}],   |Im z| < h/2

F is the convolution of the indicator of [a, b] with 1/(h cosh(pi z/h)); it has
positive real part on the strip, is close to 1 inside [a, b] and decays like
e^{-pi d/h} at distance d outside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, HypothesisViolation
from .interval import PI, ComplexInterval, Interval
from .special import arctan_exp

_TAYLOR_SWITCH = 1e-4


@dataclass(frozen=True)
class TestWindow:
    """Window (a, b) with decay parameter h."""

    __test__ = False  # not a pytest class

    a: float
    b: float
    h: float

    def __post_init__(self):
        for name in ("a", "b", "h"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, v)
        if not self.h > 0:
            raise ValueError("h must be positive")
        if self.a > self.b:
            raise ValueError("need a <= b")

    @property
    def center(self) -> float:
        return 0.5 * (self.a + self.b)

    @property
    def length(self) -> float:
        return self.b - self.a

    def check_certificate(self, sigma0: float, sigma1: float) -> None:
        """Raise unless the window is usable in a completeness certificate."""
        if not self.length > 5 * self.h / math.pi:
            raise HypothesisViolation(
                "window-too-narrow",
                f"b - a = {self.length:g} must exceed 5h/pi = {5 * self.h / math.pi:g}",
            )
        if not self.h > 2 * sigma1 - sigma0:
            raise HypothesisViolation(
                "h-too-small", f"h = {self.h:g} must exceed 2*sigma1 - sigma0 = {2 * sigma1 - sigma0:g}"
            )
        if not self.h > sigma1 - sigma0 / 2:
            raise HypothesisViolation(
                "barner-class", f"h = {self.h:g} must exceed sigma1 - sigma0/2 = {sigma1 - sigma0 / 2:g}"
            )


def _sinc_over_t(d, t, enclosure: bool):
    """sin(d t) / t, with a Taylor branch near d t = 0."""
    if enclosure:
        d = Interval.from_value(d)
        t = Interval.from_value(t)
        x = d * t
        if x.mag() < _TAYLOR_SWITCH:
            x2 = x.sqr()
            series = 1.0 - x2 / 6.0 + x2.sqr() / 120.0
            rem = (x2 ** 3 / 5040.0).hi
            return d * series.widen(rem)
        return (d * t).sin() / t
    x = d * t
    if abs(x) < _TAYLOR_SWITCH:
        x2 = x * x
        return d * (1.0 - x2 / 6.0 + x2 * x2 / 120.0)
    return math.sin(x) / t


def f_eval(w: TestWindow, t, enclosure: bool = False):
    """f_{a,b,h}(t), written as (1/pi) e^{-ict} sin(dt)/t / cosh(ht/2).

    c = (a+b)/2 and d = (b-a)/2; this form has no cancellation and its
    t -> 0 limit is (b - a)/(2 pi).
    """
    if enclosure:
        t = Interval.from_value(t)
        a, b = Interval.point(w.a), Interval.point(w.b)
        c = (a + b) / 2.0
        d = (b - a) / 2.0
        amp = _sinc_over_t(d, t, True) / ((w.h / 2.0) * t).cosh() / PI
        phase = c * t
        return ComplexInterval(amp * phase.cos(), -(amp * phase.sin()))
    t = float(t)
    c, d = w.center, 0.5 * (w.b - w.a)
    e = math.exp(-abs(0.5 * w.h * t))
    amp = _sinc_over_t(d, t, False) * (2.0 * e / (1.0 + e * e)) / math.pi
    return complex(amp * math.cos(c * t), -amp * math.sin(c * t))


def _check_strip(w: TestWindow, z) -> None:
    if isinstance(z, ComplexInterval):
        im = z.im.mag()
    elif isinstance(z, Interval):
        return
    else:
        im = abs(complex(z).imag)
    if not im < w.h / 2:
        raise DomainError(f"|Im z| = {im:g} must be below h/2 = {w.h / 2:g}")


def _is_real(z) -> bool:
    if isinstance(z, (int, float, Interval)):
        return True
    if isinstance(z, ComplexInterval):
        return False
    return complex(z).imag == 0.0


def _parts(w: TestWindow, z, enclosure: bool):
    """(region, first, second) with the arctan pieces arranged per region.

    region 'inside'  : F = 1 - (2/pi)(first + second)
    region 'right'   : F = (2/pi)(first - second)     z right of b
    region 'left'    : F = (2/pi)(first - second)     z left of a
    Each arrangement keeps the arctan arguments of modulus <= 1, so nothing
    overflows and pi/2 never cancels.
    """
    real = _is_real(z)
    if enclosure:
        if real:
            x = Interval.from_value(z.real if isinstance(z, complex) else z)
            rez = x
        else:
            x = ComplexInterval.from_complex(z)
            rez = x.re
        scale = PI / w.h
        ua = (x - w.a) * scale
        ub = (x - w.b) * scale
        xm = rez.mid
    else:
        x = complex(z).real if real else complex(z)
        scale = math.pi / w.h
        ua = (x - w.a) * scale
        ub = (x - w.b) * scale
        xm = x if real else x.real
    if xm >= w.b:
        return "right", arctan_exp(-ub, enclosure), arctan_exp(-ua, enclosure)
    if xm <= w.a:
        return "left", arctan_exp(ua, enclosure), arctan_exp(ub, enclosure)
    return "inside", arctan_exp(-ua, enclosure), arctan_exp(ub, enclosure)


def fhat_eval(w: TestWindow, z, enclosure: bool = False):
    """F_{a,b,h}(z) on the strip |Im z| < h/2.

    Real arguments give a float (or an Interval in enclosure mode); complex
    arguments give a complex (or ComplexInterval).
    """
    _check_strip(w, z)
    if w.a == w.b:
        return _zero_like(z, enclosure)
    region, p, q = _parts(w, z, enclosure)
    two_over_pi = 2.0 / PI if enclosure else 2.0 / math.pi
    if region == "inside":
        return 1.0 - two_over_pi * (p + q)
    return two_over_pi * (p - q)


def one_minus_fhat(w: TestWindow, z, enclosure: bool = False):
    """1 - F(z), computed without cancellation for Re z inside (a, b)."""
    _check_strip(w, z)
    if w.a != w.b:
        region, p, q = _parts(w, z, enclosure)
        if region == "inside":
            two_over_pi = 2.0 / PI if enclosure else 2.0 / math.pi
            return two_over_pi * (p + q)
    return 1.0 - fhat_eval(w, z, enclosure)


def _zero_like(z, enclosure):
    if enclosure:
        return Interval(0.0, 0.0) if _is_real(z) else ComplexInterval.from_complex(0.0)
    return 0.0 if _is_real(z) else 0j


def fhat_real_part(w: TestWindow, z, enclosure: bool = False):
    """Re F(z) as a float or Interval."""
    v = fhat_eval(w, z, enclosure)
    if enclosure:
        return v.re if isinstance(v, ComplexInterval) else v
    return v.real if isinstance(v, complex) else v


def fhat_bounds(w: TestWindow, z) -> tuple[float, float]:
    """Envelope (lower, upper) with lower < Re F(z) < upper.

    Inside [a, b]:  lower = max(1 - (4/pi) e^{-(pi/h) min(x-a, b-x)},
                                1/2 - (2/pi) e^{-(pi/h)(b-a)}, 0), upper = 1.
    Outside (a, b): lower = 0, upper = (2/pi) e^{-(pi/h) max(x-b, a-x)}.
    The second inside term is the value at the window edge, where Re F is
    smallest; it exceeds 0.49 whenever b - a > 5h/pi.
    """
    _check_strip(w, z)
    x = Interval.point(complex(z).real)
    a, b = Interval.point(w.a), Interval.point(w.b)
    k = PI / w.h
    # outward rounded, so the float envelope is never tighter than the exact one
    if w.a <= x.lo <= w.b:
        near = (x - a) if x.lo - w.a <= w.b - x.lo else (b - x)
        inner = 1.0 - 4.0 / PI * (-(k * near)).exp()
        edge = 0.5 - 2.0 / PI * (-(k * (b - a))).exp()
        return max(inner.lo, edge.lo, 0.0), 1.0
    far = (x - b) if x.lo > w.b else (a - x)
    return 0.0, (2.0 / PI * (-(k * far)).exp()).hi


def fhat_derivative_bound(w: TestWindow) -> float:
    """Upper bound 2/h for |d/dx F(x)| on the real line.

    dF/dx = (1/h) [sech(pi(x-a)/h) - sech(pi(x-b)/h)], each sech in (0, 1].
    Used to turn an ordinate error delta into the slack (2/h) delta per zero.
    """
    return 2.0 / w.h


def g_pair(r: float, X: float):
    """Transform pair g(t) = e^{-r|t| - iXt}/2, g^(xi) = r/((xi - X)^2 + r^2).

    With r > sigma1 - sigma0/2 the zero sum of g^ is a positive sum peaked
    at X, used to bound how much zeros beyond a cutoff can contribute.
    """
    if not r > 0:
        raise ValueError("r must be positive")

    def g(t: float) -> complex:
        return 0.5 * math.exp(-r * abs(t)) * complex(math.cos(X * t), -math.sin(X * t))

    def ghat(xi: float) -> float:
        return r / ((xi - X) ** 2 + r * r)

    return g, ghat
