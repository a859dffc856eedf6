"""Guard-zone cutoffs, zero-counting bounds and the explicit-formula residual.

None of these produce a certificate. They say how far beyond [a, b] a zero
list should reach, sanity-check list cardinalities, and measure how well a
list balances the explicit formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arch import w_inf_eval
from .errors import DomainError, HypothesisViolation
from .interval import Interval, isum
from .lfunc import Family, LFunctionDescriptor, ZeroList
from .primesum import choose_cutoff, w_f_eval
from .testfn import TestWindow, fhat_derivative_bound, fhat_real_part

FAMILIES = ("general", "zeta-r", "zeta-ab", "hecke", "elliptic")


def _loglog(x: float, what: str) -> float:
    if not x > 1.0:
        raise DomainError(f"log log undefined for {what} = {x:g}")
    return math.log(math.log(x))


def recommend_cutoff(family: str, X: float, h: float | None = None, Q: float | None = None,
                     N: float | None = None, Qprime: float | None = None, A: float | None = None) -> float:
    """Extra length C(X) by which the zero list should extend past an endpoint X.

    general : (h/pi) log log(e (Q + 1)(|X| + 1)), without the non-effective constant
    zeta-r  : (h/pi)(log log R + 0.4)                          X = R
    zeta-ab : (h/pi)(log log T + 1.1)                          X = T
    hecke   : log log(|X| + A) + log log Q' + log N + 3
    elliptic: log log(N X^2) + 3
    """
    if family == "general":
        _need(h=h, Q=Q)
        return h / math.pi * _loglog(math.e * (Q + 1) * (abs(X) + 1), "e(Q+1)(|X|+1)")
    if family == "zeta-r":
        _need(h=h)
        return h / math.pi * (_loglog(X, "R") + 0.4)
    if family == "zeta-ab":
        _need(h=h)
        return h / math.pi * (_loglog(X, "T") + 1.1)
    if family == "hecke":
        _need(N=N, Qprime=Qprime, A=A)
        return _loglog(abs(X) + A, "|X| + A") + _loglog(Qprime, "Q'") + math.log(N) + 3.0
    if family == "elliptic":
        _need(N=N)
        return _loglog(N * X * X, "N X^2") + 3.0
    raise DomainError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def _need(**kw):
    missing = [k for k, v in kw.items() if v is None]
    if missing:
        raise DomainError(f"missing parameter(s): {', '.join(missing)}")


def hecke_cutoff_params(desc: LFunctionDescriptor) -> dict:
    """N, Q' = Q + e and A = max|phi| + max|n|/2 read off a number-field descriptor."""
    places = desc.places()
    phis = [abs(phi) for _, phi in places]
    halves = [abs(g.u) for g in desc.gamma_factors]
    return {"N": desc.degree, "Qprime": desc.Q + math.e, "A": max(phis) + max(halves)}


@dataclass(frozen=True)
class GuardReport:
    """Required list range versus the range the list actually spans."""

    family: str
    cutoff_a: float | None
    cutoff_b: float | None
    required_lo: float | None
    required_hi: float | None
    list_lo: float | None
    list_hi: float | None

    @property
    def deficit_lo(self) -> float | None:
        if self.required_lo is None:
            return None
        if self.list_lo is None:
            return math.inf
        return max(0.0, self.list_lo - self.required_lo)

    @property
    def deficit_hi(self) -> float | None:
        if self.required_hi is None:
            return None
        if self.list_hi is None:
            return math.inf
        return max(0.0, self.required_hi - self.list_hi)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "cutoff_a": self.cutoff_a,
            "cutoff_b": self.cutoff_b,
            "required": [self.required_lo, self.required_hi],
            "list_range": [self.list_lo, self.list_hi],
            "deficit_lo": self.deficit_lo,
            "deficit_hi": self.deficit_hi,
        }


def _safe(fn, *args, **kw):
    try:
        return fn(*args, **kw)
    except DomainError:
        return None


def guard_report(family: str, a: float, b: float, zeros: ZeroList | None, **params) -> GuardReport:
    """Guard zone [a - C(a), b + C(b)]; the zeta-r form only extends the top end."""
    if family == "zeta-r":
        ca = 0.0
        cb = _safe(recommend_cutoff, family, b, **params)
    else:
        ca = _safe(recommend_cutoff, family, a, **params)
        cb = _safe(recommend_cutoff, family, b, **params)
    # the (0, R] form needs no zeros below the window
    lo = a - ca if ca is not None and family != "zeta-r" else None
    hi = b + cb if cb is not None else None
    ords = zeros.ordinates if zeros is not None else ()
    if family == "zeta-r":
        ords = tuple(x for x in ords if x > 0)
    return GuardReport(family, ca, cb, lo, hi, min(ords) if ords else None, max(ords) if ords else None)


def zeta_counting_bounds(T: float) -> tuple[float, float]:
    """(g(T), r1(T)) with |N(T) - g(T)| <= r1(T).

    g(T) = (T/2pi) log(T/(2 pi e)) + 7/8, r1(T) = 0.112 log T + 0.278 log log T + 2.584.
    """
    if not T >= math.e:
        raise DomainError(f"need T >= e, got {T:g}")
    g = T / (2 * math.pi) * math.log(T / (2 * math.pi * math.e)) + 7.0 / 8.0
    r1 = 0.112 * math.log(T) + 0.278 * math.log(math.log(T)) + 2.584
    return g, r1


def zeta_zero_sum_tails(a: float, b: float, h: float, T_a: float | None, T_b: float) -> tuple[float, float, float]:
    """Upper bounds on the F-mass of zeta zeros above T_b, below 0, and in (0, T_a).

    upper     = e^{(pi/h)(b - T_b)} [(0.143 + 0.033h) log T_b + 0.354 log log T_b + 3.3]
    lower_neg = e^{-(pi/h) a} / 10000
    lower_pos = e^{(pi/h)(T_a - a)} [(0.143 + 0.033h) log a + 0.354 log log a + 3.3], 0 if a = 0
    """
    if not (a == 0 or a > 14):
        raise HypothesisViolation("a-range", f"need a = 0 or a > 14, got {a:g}")
    if not b > max(a, 14):
        raise HypothesisViolation("b-range", f"need b > max(a, 14), got {b:g}")
    if not 1 < h <= math.pi:
        raise HypothesisViolation("h-range", f"need 1 < h <= pi, got {h:g}")
    if not T_b > b:
        raise HypothesisViolation("T_b-range", f"need T_b > b, got {T_b:g}")
    k = math.pi / h
    upper = math.exp(k * (b - T_b)) * (
        (0.143 + 0.033 * h) * math.log(T_b) + 0.354 * math.log(math.log(T_b)) + 3.3
    )
    lower_neg = math.exp(-k * a) / 10000.0
    if a == 0:
        lower_pos = 0.0
    else:
        if T_a is None or not 14 < T_a < a:
            raise HypothesisViolation("T_a-range", f"need 14 < T_a < a, got {T_a}")
        lower_pos = math.exp(k * (T_a - a)) * (
            (0.143 + 0.033 * h) * math.log(a) + 0.354 * math.log(math.log(a)) + 3.3
        )
    return upper, lower_neg, lower_pos


@dataclass(frozen=True)
class ResidualReport:
    residual: Interval
    zero_side: Interval
    w_f: Interval
    w_inf: Interval
    M: int
    zeros_used: int


def explicit_formula_check(desc: LFunctionDescriptor, zeros: ZeroList, w: TestWindow,
                           wf_budget: float = 1e-3, osc_budget: float = 1e-4) -> ResidualReport:
    """Enclosure of [sum_zeros F(gamma) - sum_poles |n| F] - w_f - w_inf.

    With a complete list the exact value is 0. The enclosure absorbs the
    prime-sum tail, the oscillatory-integral radii and the ordinate precision.
    """
    zsum = isum(fhat_real_part(w, g, enclosure=True) for g in zeros.ordinates)
    poles = isum(
        fhat_real_part(w, z, enclosure=True) * n for z, n in desc.pole_offsets()
    ) if desc.poles else Interval(0.0, 0.0)
    precision = len(zeros) * fhat_derivative_bound(w) * zeros.delta
    zero_side = (zsum - poles).widen(precision)
    if w.a == w.b:
        wf, winf, M = Interval(0.0, 0.0), Interval(0.0, 0.0), 0
    else:
        M = choose_cutoff(desc, w.h, wf_budget)
        wf, tail = w_f_eval(desc, w, M, enclosure=True)
        wf = wf.widen(tail)
        winf = w_inf_eval(desc, w, enclosure=True, osc_budget=osc_budget)
    return ResidualReport(zero_side - wf - winf, zero_side, wf, winf, M, len(zeros))


__all__ = [
    "FAMILIES",
    "Family",
    "GuardReport",
    "ResidualReport",
    "explicit_formula_check",
    "guard_report",
    "hecke_cutoff_params",
    "recommend_cutoff",
    "zeta_counting_bounds",
    "zeta_zero_sum_tails",
]
