"""The archimedean term w_inf(f_{a,b,h}).

    w_inf = ((b - a)/pi) log Q
            + (1/pi) sum_k Im[l(lam_k(sigma0/2 + ib) + mu_k) - l(lam_k(sigma0/2 + ia) + mu_k)]
            - (1/pi) sum_k [I_k(lam_k b + v_k) - I_k(lam_k a + v_k)]

with l the log-gamma branch and

    I_k(R) = int_0^inf e^{-A t}/(1 - e^{-t}) sin(Rt)/t (sech(lam_k h t/2) - 1) dt,
    A = lam_k sigma0/2 + u_k > 0.

I_k(R) is enclosed either by the contour bound C (1/|R| + e^{-|R| B}/A) or by
adaptive Gauss-Legendre quadrature with analytic head and tail bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BudgetError, DomainError, HypothesisViolation
from .interval import PI, Interval, isum
from .lfunc import Family, LFunctionDescriptor
from .special import log_gamma_branch
from .testfn import TestWindow

DEFAULT_OSC_BUDGET = 0.05
HEAD_ETA = 1e-3
TAIL_FACTOR = 60.0
ERROR_INFLATION = 10.0
MAX_PANELS = 400_000

_GL15 = np.polynomial.legendre.leggauss(15)
_GL30 = np.polynomial.legendre.leggauss(30)


@dataclass(frozen=True)
class OscIntegralBound:
    B: float
    C: float
    bound: float


def _B_limit(lam: float, h: float) -> float:
    return min(2.0 * math.pi, math.pi / (lam * h))


def contour_constant(lam: float, h: float, B: float) -> Interval:
    """C = (1 + 1/cos(lam h B/2)) / (B (1 - cos B)) as an enclosure."""
    if not 0.0 < B < _B_limit(lam, h):
        raise DomainError(f"B = {B:g} must lie in (0, {_B_limit(lam, h):g})")
    Bi = Interval.point(B)
    half = Interval.point(lam) * h * Bi / 2.0
    return (1.0 + 1.0 / half.cos()) / (Bi * (1.0 - Bi.cos()))


def default_B(desc: LFunctionDescriptor | None, lam: float, h: float) -> float:
    """Contour height per family, falling back to 0.8 of the legal maximum."""
    limit = _B_limit(lam, h)
    choice = None
    if desc is not None:
        if desc.family is Family.ZETA:
            choice = 4.9 / h
        elif desc.family is Family.HECKE:
            choice = 1.6 if lam == 0.5 else 0.8
        elif desc.family is Family.ELLIPTIC:
            choice = 0.8
    if choice is None or not 0.0 < choice < limit:
        choice = 0.8 * limit
    return choice


def osc_bound(lam: float, u: float, sigma0: float, h: float, R: float, B: float) -> OscIntegralBound:
    """Bound on |I(R)| from shifting the contour to Im t = B."""
    if R == 0:
        raise DomainError("R = 0: the oscillatory term vanishes identically")
    C = contour_constant(lam, h, B)
    A = Interval.point(lam) * sigma0 / 2.0 + u
    if not A.lo > 0:
        raise DomainError("need lam sigma0/2 + u > 0")
    Ri = Interval.point(abs(R))
    val = C * (1.0 / Ri + (-(Ri * B)).exp() / A)
    return OscIntegralBound(B, C.hi, val.hi)


def _integrand(t: np.ndarray, A: float, R: float, c: float) -> np.ndarray:
    geo = -np.exp(-A * t) / np.expm1(-t)
    x = c * t
    small = x < 1.0
    xs = np.where(small, x, 0.0)
    xl = np.where(small, 1.0, x)
    e = np.exp(-xl)
    sech_m1 = np.where(small, -2.0 * np.sinh(xs / 2.0) ** 2 / np.cosh(xs), 2.0 * e / (1.0 + e * e) - 1.0)
    return geo * np.sin(R * t) / t * sech_m1


def _panel_rules(lo: np.ndarray, hi: np.ndarray, A: float, R: float, c: float):
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    out = []
    for nodes, weights in (_GL15, _GL30):
        t = mid[:, None] + half[:, None] * nodes[None, :]
        vals = _integrand(t, A, R, c)
        out.append((vals * weights[None, :]).sum(axis=1) * half)
        if nodes.size == 30:
            scale = np.abs(vals).max(axis=1) * (hi - lo)
    return out[0], out[1], scale


def head_bound(R: float, lam: float, h: float, eta: float) -> float:
    """|int_0^eta| <= |R| (lam h)^2 (eta^2/2 + eta^3/3)/8, valid for eta <= 1."""
    v = Interval.point(abs(R)) * (Interval.point(lam) * h).sqr() / 8.0
    e = Interval.point(eta)
    return (v * (e.sqr() / 2.0 + (e ** 3) / 3.0)).hi


def tail_bound(A: float, T: float) -> float:
    """|int_T^inf| <= e^{-AT} / (A T (1 - e^{-T}))."""
    Ai, Ti = Interval.point(A), Interval.point(T)
    return ((-(Ai * Ti)).exp() / (Ai * Ti * (1.0 - (-Ti).exp()))).hi


def osc_quadrature(lam: float, mu: complex, sigma0: float, h: float, R: float,
                   budget: float = DEFAULT_OSC_BUDGET) -> Interval:
    """Enclosure of I(R) by quadrature on [eta, T] plus head and tail bounds.

    The panel error estimate |Q30 - Q15| is inflated tenfold into the radius.
    """
    if not budget > 0:
        raise ValueError("budget must be positive")
    if R == 0:
        return Interval(0.0, 0.0)
    A = lam * sigma0 / 2.0 + complex(mu).real
    if not A > 0:
        raise DomainError("need lam sigma0/2 + Re(mu) > 0")
    c = lam * h / 2.0
    eta = HEAD_ETA
    # the head has a definite sign, so keep it well below the budget
    while head_bound(R, lam, h, eta) > budget / 64 and eta > 1e-12:
        eta /= 2.0
    T = TAIL_FACTOR / A
    head = head_bound(R, lam, h, eta)
    tail = tail_bound(A, T)
    width = min(4.0 * math.pi / abs(R), 1.0)
    n = max(1, math.ceil((T - eta) / width))
    if n > MAX_PANELS:
        raise BudgetError(f"quadrature would need {n} panels")
    edges = np.linspace(eta, T, n + 1)
    lo, hi = edges[:-1], edges[1:]
    total = 0.0
    err = 0.0
    scale = 0.0
    target = budget / 4
    for _ in range(40):
        q15, q30, sc = _panel_rules(lo, hi, A, R, c)
        diff = np.abs(q30 - q15)
        share = target * (hi - lo) / (T - eta)
        ok = diff * ERROR_INFLATION <= share
        total += math.fsum(q30[ok])
        err += float(diff[ok].sum())
        scale += float(sc[ok].sum())
        if ok.all():
            break
        lo, hi = lo[~ok], hi[~ok]
        midp = 0.5 * (lo + hi)
        lo, hi = np.concatenate([lo, midp]), np.concatenate([midp, hi])
        if lo.size > MAX_PANELS:
            raise BudgetError("quadrature panel count exploded")
    else:
        raise BudgetError("quadrature did not converge")
    rounding = 64 * 2.0 ** -52 * scale
    radius = ERROR_INFLATION * err + rounding + head + tail
    if radius > budget:
        raise BudgetError(f"quadrature radius {radius:.3g} exceeds budget {budget:.3g}")
    return Interval.point(total).widen(radius)


def _q_interval(Q: float) -> Interval:
    # Q is data given as a float; allow for one rounding of the exact constant
    return Interval(math.nextafter(Q, 0.0), math.nextafter(Q, math.inf))


def gamma_main_term(desc: LFunctionDescriptor, a: float, b: float, enclosure: bool = False):
    """((b-a)/pi) log Q + (1/pi) sum_k Im[l(lam_k(sigma0/2+ib)+mu_k) - l(lam_k(sigma0/2+ia)+mu_k)]."""
    if enclosure:
        terms = [(Interval.point(b) - a) * _q_interval(desc.Q).log()]
        for g in desc.gamma_factors:
            lb = log_gamma_branch(_gamma_arg(g, desc.sigma0, b), enclosure=True)
            la = log_gamma_branch(_gamma_arg(g, desc.sigma0, a), enclosure=True)
            terms.append(lb.im - la.im)
        return isum(terms) / PI
    s = (b - a) * math.log(desc.Q)
    for g in desc.gamma_factors:
        s += (log_gamma_branch(_gamma_arg(g, desc.sigma0, b)) - log_gamma_branch(_gamma_arg(g, desc.sigma0, a))).imag
    return s / math.pi


def _gamma_arg(g, sigma0: float, t: float) -> complex:
    return complex(g.lam * sigma0 / 2 + g.u, g.lam * t + g.v)


def osc_terms(desc: LFunctionDescriptor, w: TestWindow, enclosure: bool = False,
              osc_budget: float = DEFAULT_OSC_BUDGET, B: dict | None = None,
              method: str = "auto") -> list[tuple[int, float, float, int, str, Interval, OscIntegralBound | None]]:
    """Per gamma factor and endpoint: (k, z, R, sign, method, enclosure, bound).

    sign is +1 for z = b and -1 for z = a, so that
    w_inf = main - (1/pi) sum sign * value.
    """
    out = []
    for k, g in enumerate(desc.gamma_factors):
        Bk = (B or {}).get(k) or default_B(desc, g.lam, w.h)
        for z, sign in ((w.b, 1), (w.a, -1)):
            R = g.lam * z + g.v
            if R == 0.0:
                out.append((k, z, R, sign, "exempt", Interval(0.0, 0.0), None))
                continue
            bound = osc_bound(g.lam, g.u, desc.sigma0, w.h, R, Bk)
            if method == "bound" or (method == "auto" and enclosure and bound.bound <= osc_budget):
                val = Interval.symmetric(bound.bound)
                if not enclosure:
                    val = Interval(0.0, 0.0)
                out.append((k, z, R, sign, "bound", val, bound))
                continue
            try:
                val = osc_quadrature(g.lam, g.mu, desc.sigma0, w.h, R, osc_budget)
            except BudgetError:
                if method == "quadrature":
                    raise
                if bound.bound <= osc_budget or not enclosure:
                    out.append((k, z, R, sign, "bound", Interval.symmetric(bound.bound), bound))
                    continue
                raise BudgetError(
                    f"oscillatory term at z = {z:g} (R = {R:g}): bound {bound.bound:.3g} and quadrature both miss budget {osc_budget:.3g}"
                ) from None
            out.append((k, z, R, sign, "quadrature", val, bound))
    return out


def w_inf_eval(desc: LFunctionDescriptor, w: TestWindow, enclosure: bool = False,
               osc_budget: float = DEFAULT_OSC_BUDGET, B: dict | None = None, method: str = "auto"):
    """w_inf(f_{a,b,h}): an Interval in enclosure mode, a float otherwise.

    The fast path uses the quadrature midpoint for every oscillatory term.
    """
    if not w.h > desc.sigma1 - desc.sigma0 / 2:
        raise HypothesisViolation(
            "barner-class", f"h = {w.h:g} must exceed sigma1 - sigma0/2 = {desc.sigma1 - desc.sigma0 / 2:g}"
        )
    if w.a == w.b:
        return Interval(0.0, 0.0) if enclosure else 0.0
    if not enclosure:
        osc_budget = min(osc_budget, 1e-7)
    main = gamma_main_term(desc, w.a, w.b, enclosure)
    terms = osc_terms(desc, w, enclosure, osc_budget, B, method)
    if enclosure:
        signed = [v if sign > 0 else -v for (_, _, _, sign, _, v, _) in terms]
        return main - isum(signed) / PI
    s = math.fsum(sign * v.mid for (_, _, _, sign, _, v, _) in terms)
    return main - s / math.pi
