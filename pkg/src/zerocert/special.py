"""Log-gamma branch, digamma and the cut-plane arctan.

Two tiers: the fast path works in 80-bit extended precision (``np.longdouble``)
and returns a Python ``complex``; the enclosure path works in outward-rounded
interval arithmetic and returns a :class:`ComplexInterval` certified to contain
the exact value.

Both tiers shift the argument with the recurrences
``logGamma(z) = logGamma(z + 1) - log z`` and ``psi(z) = psi(z + 1) - 1/z``
until ``Re z >= 10`` and then sum a Stirling series with ``STIRLING_TERMS``
Bernoulli terms. For ``|ph z| < pi`` the log-gamma remainder after K terms is
bounded by the first omitted term times ``sec(ph z / 2) ** (2K + 2)``; for K = 0
this is the Binet bound ``1 / (12 |z| cos(ph z / 2)**2)``. The digamma
remainder is the derivative of the log-gamma remainder and is bounded with
Cauchy's estimate on the circle ``|xi - z| = |z| / 6``.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .interval import HALF_PI, PI, ComplexInterval, Interval

SHIFT_THRESHOLD = 10.0
STIRLING_TERMS = 12

# B_2, B_4, ..., B_26
_BERNOULLI = (
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510),
    Fraction(43867, 798), Fraction(-174611, 330), Fraction(854513, 138),
    Fraction(-236364091, 2730), Fraction(8553103, 6),
)
_LG_COEFFS = tuple(b / ((2 * k) * (2 * k - 1)) for k, b in enumerate(_BERNOULLI, 1))
_PSI_COEFFS = tuple(b / (2 * k) for k, b in enumerate(_BERNOULLI, 1))

_LD_HALF_LOG_2PI = np.longdouble("0.918938533204672741780329736405617639861")


def _ld(q: Fraction) -> np.longdouble:
    return np.longdouble(q.numerator) / np.longdouble(q.denominator)


_LD_LG = tuple(_ld(c) for c in _LG_COEFFS[:STIRLING_TERMS])
_LD_PSI = tuple(_ld(c) for c in _PSI_COEFFS[:STIRLING_TERMS])


def _check_right_half_plane(z) -> None:
    re = z.re.lo if isinstance(z, ComplexInterval) else complex(z).real
    if not re > 0.0:
        raise DomainError(f"need Re(z) > 0, got {z}")


def log_gamma_branch(z, enclosure: bool = False):
    """The branch of log Gamma on Re(z) > 0 that vanishes at z = 1.

    Its imaginary part is continuous along every vertical line (unlike
    ``log(gamma(z))`` with the principal logarithm).
    """
    _check_right_half_plane(z)
    if enclosure:
        return _log_gamma_enclosure(ComplexInterval.from_complex(z))
    return _log_gamma_fast(complex(z))


def digamma(z, enclosure: bool = False):
    """Gamma'/Gamma(z) for Re(z) > 0."""
    _check_right_half_plane(z)
    if enclosure:
        return _digamma_enclosure(ComplexInterval.from_complex(z))
    return _digamma_fast(complex(z))


def _log_gamma_fast(z: complex) -> complex:
    w = np.clongdouble(z)
    shift = np.clongdouble(0)
    while w.real < SHIFT_THRESHOLD:
        shift += np.log(w)
        w += 1
    lw = np.log(w)
    s = (w - np.longdouble(0.5)) * lw - w + _LD_HALF_LOG_2PI
    inv = 1 / w
    inv2 = inv * inv
    p = inv
    for c in _LD_LG:
        s += c * p
        p *= inv2
    return complex(s - shift)


def _digamma_fast(z: complex) -> complex:
    w = np.clongdouble(z)
    shift = np.clongdouble(0)
    while w.real < SHIFT_THRESHOLD:
        shift += 1 / w
        w += 1
    inv = 1 / w
    inv2 = inv * inv
    s = np.log(w) - inv / 2
    p = inv2
    for c in _LD_PSI:
        s -= c * p
        p *= inv2
    return complex(s - shift)


def _sec2_half_arg(z: ComplexInterval, absz: Interval) -> Interval:
    # sec^2(phi/2) = 2|z| / (|z| + Re z)
    return 2.0 * absz / (absz + z.re)


def _log_gamma_enclosure(z: ComplexInterval) -> ComplexInterval:
    shift = ComplexInterval.from_complex(0.0)
    while z.re.lo < SHIFT_THRESHOLD:
        shift = shift + z.log()
        z = z + 1.0
    lz = z.log()
    half_log_2pi = 0.5 * (2.0 * PI).log()
    inv = 1.0 / z
    inv2 = inv * inv
    p = inv
    # small terms first: each addition into a large accumulator costs an ulp of it
    series = ComplexInterval.from_complex(0.0)
    for c in _LG_COEFFS[:STIRLING_TERMS]:
        series = series + p * Interval.from_value(c)
        p = p * inv2
    k = STIRLING_TERMS + 1
    absz = z.abs()
    bound = (
        Interval.from_value(abs(_LG_COEFFS[k - 1]))
        / absz.rpow(2 * k - 1)
        * _sec2_half_arg(z, absz) ** k
    )
    r = Interval.symmetric(bound.hi)
    series = series + ComplexInterval(r, r) + half_log_2pi
    return (z - 0.5) * lz - z + (series - shift)


def _digamma_enclosure(z: ComplexInterval) -> ComplexInterval:
    shift = ComplexInterval.from_complex(0.0)
    while z.re.lo < SHIFT_THRESHOLD:
        shift = shift + 1.0 / z
        z = z + 1.0
    inv = 1.0 / z
    inv2 = inv * inv
    s = z.log() - 0.5 * inv
    p = inv2
    for c in _PSI_COEFFS[:STIRLING_TERMS]:
        s = s - p * Interval.from_value(c)
        p = p * inv2
    # On |xi - z| = |z|/6: |xi| >= 5|z|/6 and |ph xi| <= pi/2 + asin(1/6),
    # so cos^2(ph xi / 2) >= 0.4164 and sec^2 <= 2.4016.
    k = STIRLING_TERMS + 1
    absz = z.abs()
    radius = absz / 6.0
    on_circle = Interval.from_value(abs(_LG_COEFFS[k - 1])) / (
        (5.0 * absz / 6.0).rpow(2 * k - 1)
    ) * Interval.from_value(Fraction("2.4016")) ** k
    bound = on_circle / radius
    r = Interval.symmetric(bound.hi)
    return s + ComplexInterval(r, r) - shift


def _on_cut(z: complex) -> bool:
    return z.real == 0.0 and abs(z.imag) >= 1.0


def arctan_cut(z, enclosure: bool = False):
    """Holomorphic arctan on C minus {iz in [1, inf) or (-inf, -1]}.

    ``arctan(z) = (i/2) (log(1 - iz) - log(1 + iz))`` with principal logarithms;
    ``arctan(z) + arctan(1/z) = pi/2`` for Re z > 0.
    """
    if enclosure:
        w = ComplexInterval.from_complex(z)
        iz = ComplexInterval(-w.im, w.re)
        d = (1.0 - iz).log() - (1.0 + iz).log()
        return ComplexInterval(-0.5 * d.im, 0.5 * d.re)
    z = complex(z)
    if _on_cut(z):
        raise DomainError(f"arctan branch cut: {z}")
    d = cmath.log(1 - 1j * z) - cmath.log(1 + 1j * z)
    return 0.5j * d


def arctan_exp(u, enclosure: bool = False):
    """arctan(e^u) on the strip |Im u| < pi/2, without overflow.

    For Re u > 0 the reflected form pi/2 - arctan(e^{-u}) is used.
    """
    if isinstance(u, (int, float)) or isinstance(u, Interval):
        return _arctan_exp_real(u, enclosure)
    if enclosure:
        w = ComplexInterval.from_complex(u)
        if w.re.lo > 0.0:
            return ComplexInterval(HALF_PI, Interval(0.0, 0.0)) - arctan_cut((-w).exp(), True)
        return arctan_cut(w.exp(), True)
    u = complex(u)
    if u.imag == 0.0:
        return complex(_arctan_exp_real(u.real, False))
    if u.real > 0.0:
        return math.pi / 2 - arctan_cut(cmath.exp(-u))
    return arctan_cut(cmath.exp(u))


def _arctan_exp_real(x, enclosure: bool):
    if enclosure:
        x = Interval.from_value(x)
        if x.lo > 0.0:
            return HALF_PI - (-x).exp().atan()
        return x.exp().atan()
    x = float(x)
    if x > 0.0:
        return math.pi / 2 - math.atan(math.exp(-x))
    return math.atan(math.exp(x))
