"""Completeness certificates for lists of zeros.

Every certificate has the shape

    lhs = (prime sum) + (archimedean part) + (remainder) + (poles) - sum_j Re F(gamma_j)

and the verdict is CERTIFIED_COMPLETE only when the upper end of the lhs
enclosure plus every slack stays at or below the threshold. A missing zero
inside [a, b] would have contributed at least the threshold-sized margin, so a
list passing the test contains every zero there. Failing proves nothing.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field

from .arch import DEFAULT_OSC_BUDGET, gamma_main_term, osc_bound, w_inf_eval
from .diagnostics import guard_report, hecke_cutoff_params
from .errors import BudgetError, DomainError, HypothesisViolation
from .interval import PI, Interval, isum
from .lfunc import EllipticCoefficients, Family, LFunctionDescriptor, ZeroList, zeta_descriptor
from .primesum import DEFAULT_BUDGET, choose_cutoff, prime_tail_bound, sieve, w_f_eval
from .special import log_gamma_branch
from .testfn import TestWindow, fhat_derivative_bound, fhat_real_part


class Verdict(str, enum.Enum):
    CERTIFIED_COMPLETE = "CERTIFIED_COMPLETE"
    INCONCLUSIVE = "INCONCLUSIVE"


class Theorem(str, enum.Enum):
    GENERAL = "General"
    ZETA_R = "ZetaR"
    ZETA_AB = "ZetaAB"
    HECKE = "Hecke"
    ELLIPTIC = "Elliptic"


THRESHOLDS = {
    Theorem.GENERAL: 0.49,
    Theorem.ZETA_R: -0.56,
    Theorem.ZETA_AB: 0.44,
    Theorem.HECKE: 0.44,
    Theorem.ELLIPTIC: 0.42,
}

# prime-sum tails already folded into the fixed remainder constants
ZETA_TAIL_ABSORBED = 0.043
HECKE_TAIL_ABSORBED = 0.05
ELLIPTIC_TAIL_ABSORBED = 0.07
ELLIPTIC_CUTOFF = 29  # p^m < 30
ZETA_CUTOFF_LIMIT = 10_000_000

HECKE_REAL_WEIGHT = 1.65
HECKE_COMPLEX_WEIGHT = 5.57
ELLIPTIC_WEIGHT = 5.57


@dataclass
class CertifyOptions:
    shortcut: bool = False
    strict: bool = False
    osc_budget: float = DEFAULT_OSC_BUDGET
    wf_budget: float = DEFAULT_BUDGET
    M: int | None = None
    B: dict | None = None


# -- report --------------------------------------------------------------------


def _enc(v):
    if isinstance(v, Interval):
        return {"lo": v.lo, "hi": v.hi}
    return v


def _dec(v):
    if isinstance(v, dict) and set(v) == {"lo", "hi"}:
        return Interval(float(v["lo"]), float(v["hi"]))
    return v


@dataclass
class CertificateReport:
    verdict: Verdict
    theorem: Theorem
    window: TestWindow
    lhs: Interval
    threshold: float
    terms: dict
    zeros_used: int
    warnings: list = field(default_factory=list)
    guard: dict | None = None

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED_COMPLETE

    @property
    def total_upper(self) -> float:
        """lhs.hi plus the tail and precision slacks, rounded up."""
        s = Interval.point(self.lhs.hi) + self.terms.get("w_f_tail", 0.0) + self.terms.get("precision_slack", 0.0)
        return s.hi

    @property
    def margin(self) -> float:
        return self.threshold - self.total_upper

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "theorem": self.theorem.value,
            "window": {"a": self.window.a, "b": self.window.b, "h": self.window.h},
            "lhs": _enc(self.lhs),
            "threshold": self.threshold,
            "terms": {k: _enc(v) for k, v in self.terms.items()},
            "zeros_used": self.zeros_used,
            "warnings": list(self.warnings),
            "guard": self.guard,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> CertificateReport:
        w = d["window"]
        return cls(
            verdict=Verdict(d["verdict"]),
            theorem=Theorem(d["theorem"]),
            window=TestWindow(w["a"], w["b"], w["h"]),
            lhs=_dec(d["lhs"]),
            threshold=float(d["threshold"]),
            terms={k: _dec(v) for k, v in d["terms"].items()},
            zeros_used=int(d["zeros_used"]),
            warnings=list(d.get("warnings", [])),
            guard=d.get("guard"),
        )

    @classmethod
    def from_json(cls, s: str) -> CertificateReport:
        return cls.from_dict(json.loads(s))

    def to_text(self) -> str:
        w = self.window
        lines = [
            f"theorem      {self.theorem.value}",
            f"window       [{w.a:g}, {w.b:g}]  h = {w.h:g}",
        ]
        labels = {
            "w_f": "prime sum",
            "w_inf": "archimedean",
            "main_term": "gamma main term",
            "remainder": "remainder",
            "penalty": "endpoint penalty",
            "pole_term": "pole term",
            "zero_sum": "zero sum (subtracted)",
        }
        for key, label in labels.items():
            if key in self.terms:
                lines.append(f"{label:<22} {_fmt(self.terms[key])}")
        lines.append(f"{'lhs':<22} {_fmt(self.lhs)}")
        for key in ("w_f_tail", "delta_slack", "shortcut_error", "precision_slack"):
            if key in self.terms:
                lines.append(f"{key:<22} {self.terms[key]:.3e}")
        if "M" in self.terms:
            lines.append(f"{'prime cutoff M':<22} {self.terms['M']}")
        lines.append(f"{'lhs.hi + slack':<22} {self.total_upper:.10f}  vs threshold {self.threshold:g}")
        lines.append(f"{'margin':<22} {self.margin:+.6f}")
        lines.append(f"zeros used   {self.zeros_used}")
        if self.guard:
            g = self.guard
            lo, hi = g["required"]
            lines.append(
                f"guard zone   required [{_opt(lo)}, {_opt(hi)}], list spans "
                f"[{_opt(g['list_range'][0])}, {_opt(g['list_range'][1])}]"
            )
            lines.append(f"cutoffs      C(a) = {_opt(g['cutoff_a'])}  C(b) = {_opt(g['cutoff_b'])}")
            if g["deficit_lo"] or g["deficit_hi"]:
                lines.append(f"guard deficit  below {_opt(g['deficit_lo'])}  above {_opt(g['deficit_hi'])}")
        for msg in self.warnings:
            lines.append(f"warning: {msg}")
        lines.append(f"verdict      {self.verdict.value}")
        return "\n".join(lines)


def _fmt(v) -> str:
    if isinstance(v, Interval):
        return f"{v.mid:+.10f}  [{v.lo:+.12f}, {v.hi:+.12f}]"
    return f"{v}"


def _opt(x) -> str:
    return "n/a" if x is None else f"{x:.6g}"


# -- shared pieces -------------------------------------------------------------


def _check_zeros(zeros: ZeroList, w: TestWindow, opts: CertifyOptions) -> list[str]:
    if not zeros.delta < w.h / 20:
        raise HypothesisViolation(
            "precision-too-coarse", f"delta = {zeros.delta:g} must be below h/20 = {w.h / 20:g}"
        )
    warnings = []
    if opts.strict and not zeros.multiplicity_asserted:
        tight = zeros.close_pairs(zeros.delta) if zeros.delta > 0 else [
            (i, x, y) for i, x, y in zeros.close_pairs(math.inf) if x == y
        ]
        if tight:
            i, x, y = tight[0]
            raise HypothesisViolation(
                "close-ordinates",
                f"ordinates {x!r} and {y!r} are closer than delta; assert multiplicity to list them both",
            )
    for _, x, y in zeros.close_pairs(2 * zeros.delta) if zeros.delta > 0 else []:
        warnings.append(f"possible duplicate beyond multiplicity: {x!r} and {y!r} are within 2 delta")
    if zeros.delta == 0:
        for _, x, y in zeros.close_pairs(math.inf):
            if x == y:
                warnings.append(f"possible duplicate beyond multiplicity: ordinate {x!r} listed twice")
    return warnings


def zero_sum(w: TestWindow, zeros: ZeroList, shortcut: bool = False) -> tuple[Interval, int, float]:
    """Enclosure of sum_j Re F(gamma_j), core count and shortcut error.

    With the shortcut, zeros at distance at least R* = (h/pi)(log m + 5) + delta
    from both ends count as exactly 1; each overstates F by less than
    (4/pi) e^{-(pi/h) R*}, and the sum of those errors stays below 1/100.
    """
    ords = zeros.ordinates
    if not shortcut or w.a == w.b:
        return isum(fhat_real_part(w, g, enclosure=True) for g in ords), 0, 0.0
    m = max(1, zeros.count_between(w.a, w.b))
    rstar = w.h / math.pi * (math.log(m) + 5.0)
    lo, hi = w.a + rstar + zeros.delta, w.b - rstar - zeros.delta
    core = [g for g in ords if lo <= g <= hi]
    rest = [g for g in ords if not lo <= g <= hi]
    total = isum([Interval.point(float(len(core)))] + [fhat_real_part(w, g, enclosure=True) for g in rest])
    each = (4.0 / PI * (-(PI / w.h * rstar)).exp()).hi
    err = (Interval.point(each) * len(core)).hi
    return total, len(core), err


def _pole_term(desc: LFunctionDescriptor, w: TestWindow) -> Interval:
    parts = []
    for z, n in desc.pole_offsets():
        if not abs(z.imag) < w.h / 2:
            raise HypothesisViolation(
                "pole-outside-strip", f"pole offset {z} has |Im| >= h/2 = {w.h / 2:g}"
            )
        parts.append(fhat_real_part(w, z, enclosure=True) * n)
    return isum(parts)


def _finish(theorem: Theorem, w: TestWindow, parts: dict, subtract: Interval, slack: dict,
            zeros: ZeroList, warnings: list, guard) -> CertificateReport:
    lhs = isum(v for v in parts.values()) - subtract
    delta_slack = (Interval.point(len(zeros)) * fhat_derivative_bound(w) * zeros.delta).hi
    shortcut_err = slack.pop("shortcut_error", 0.0)
    precision = (Interval.point(delta_slack) + shortcut_err).hi
    terms = dict(parts)
    terms["zero_sum"] = subtract
    terms.update(slack)
    terms["delta_slack"] = delta_slack
    terms["shortcut_error"] = shortcut_err
    terms["precision_slack"] = precision
    threshold = THRESHOLDS[theorem]
    total = (Interval.point(lhs.hi) + terms.get("w_f_tail", 0.0) + precision).hi
    verdict = Verdict.CERTIFIED_COMPLETE if total <= threshold else Verdict.INCONCLUSIVE
    if verdict is Verdict.INCONCLUSIVE:
        warnings = warnings + [_attribution(theorem, terms, total, threshold)]
    return CertificateReport(verdict, theorem, w, lhs, threshold, terms, len(zeros), warnings,
                             guard.to_dict() if guard is not None else None)


def _attribution(theorem: Theorem, terms: dict, total: float, threshold: float) -> str:
    """Name the largest positive contributions when the bound is missed."""
    pos = []
    for k, v in terms.items():
        if k in ("zero_sum", "precision_slack", "M"):
            continue
        x = v.hi if isinstance(v, Interval) else v
        if isinstance(x, (int, float)) and x > 0:
            pos.append((x, k))
    pos.sort(reverse=True)
    top = ", ".join(f"{k} = {x:.4g}" for x, k in pos[:3])
    return (
        f"bound missed by {total - threshold:.4g}; zero sum = {terms['zero_sum'].mid:.4g} "
        f"against positive terms {top}"
    )


# -- general certificate -------------------------------------------------------


def certify_general(desc: LFunctionDescriptor, zeros: ZeroList, w: TestWindow,
                    opts: CertifyOptions | None = None) -> CertificateReport:
    """Certificate from the explicit-formula inequality with threshold 0.49."""
    opts = opts or CertifyOptions()
    w.check_certificate(desc.sigma0, desc.sigma1)
    warnings = _check_zeros(zeros, w, opts)
    poles = _pole_term(desc, w)
    M = opts.M or choose_cutoff(desc, w.h, opts.wf_budget)
    wf, tail = w_f_eval(desc, w, M, enclosure=True)
    winf = w_inf_eval(desc, w, enclosure=True, osc_budget=opts.osc_budget, B=opts.B)
    zs, _, err = zero_sum(w, zeros, opts.shortcut)
    guard = guard_report("general", w.a, w.b, zeros, h=w.h, Q=desc.Q)
    parts = {"w_f": wf, "w_inf": winf, "pole_term": poles}
    slack = {"w_f_tail": tail, "M": M, "shortcut_error": err}
    return _finish(Theorem.GENERAL, w, parts, zs, slack, zeros, warnings, guard)


# -- zeta ----------------------------------------------------------------------


def zeta_cutoff(h: float) -> int:
    """floor((30/alpha)^{1/alpha}) with alpha = (h - 1)/2."""
    alpha = (h - 1.0) / 2.0
    if not alpha > 0:
        raise HypothesisViolation("h-range", f"need h > 1, got {h:g}")
    x = (30.0 / alpha) ** (1.0 / alpha)
    if x > ZETA_CUTOFF_LIMIT:
        raise BudgetError(f"prime-power cutoff {x:.3g} is too large; increase h")
    return int(math.floor(x))


def zeta_prime_sum(a: float, b: float, h: float, M: int) -> Interval:
    """-(2/pi) sum_{p^m <= M} sin(d t) cos(c t) / (m p^{m/2} cosh(h t/2)), t = m log p.

    c = (a + b)/2, d = (b - a)/2; for a = 0 this is -(1/pi) sum sin(b t)/(...).
    """
    A, Bv = Interval.point(a), Interval.point(b)
    c, d = (A + Bv) / 2.0, (Bv - A) / 2.0
    terms = []
    for p, m, pm in sieve(int(M)).entries:
        t = Interval.from_value(p).log() * m
        den = Interval.from_value(pm).sqrt() * m * (t * (h / 2.0)).cosh()
        terms.append((d * t).sin() * (c * t).cos() / den)
    return -2.0 * isum(terms) / PI if terms else Interval(0.0, 0.0)


def _zeta_gamma_im(t: float) -> Interval:
    return log_gamma_branch(complex(0.25, t / 2.0), enclosure=True).im


def _check_zeta_h(h: float) -> None:
    if not 1.0 < h <= math.pi:
        raise HypothesisViolation("h-range", f"need 1 < h <= pi, got {h:g}")


def zeta_osc_remainder(h: float, endpoints: tuple[float, ...], fixed: Interval) -> Interval:
    """Larger of the fixed remainder and the contour bound at this h.

    The fixed constants hold for h up to about 3; near h = pi the contour
    bound with B = 4.9/h is slightly larger and is used instead.
    """
    computed = sum(osc_bound(0.5, 0.0, 1.0, h, z / 2, 4.9 / h).bound for z in endpoints if z != 0)
    computed = (Interval(0.0, computed) / PI).hi
    return Interval(max(fixed.lo, computed), max(fixed.hi, computed))


def certify_zeta_R(zeros: ZeroList, R: float, h: float, opts: CertifyOptions | None = None) -> CertificateReport:
    """All zeros with ordinate in (0, R]; threshold -0.56."""
    opts = opts or CertifyOptions()
    if not R >= 15:
        raise HypothesisViolation("R-range", f"need R >= 15, got {R:g}")
    _check_zeta_h(h)
    if any(g <= 0 for g in zeros.ordinates):
        raise HypothesisViolation("positive-ordinates", "every listed ordinate must be positive")
    w = TestWindow(0.0, R, h)
    warnings = _check_zeros(zeros, w, opts)
    M = opts.M or zeta_cutoff(h)
    desc = zeta_descriptor()
    prime = zeta_prime_sum(0.0, R, h, M)
    Ri = Interval.point(R)
    main = _zeta_gamma_im(R) / PI - Ri / (2.0 * PI) * PI.log()
    remainder = zeta_osc_remainder(h, (R,), 1.6 / Ri)
    zs, _, err = zero_sum(w, zeros, opts.shortcut)
    tail = max(0.0, prime_tail_bound(desc, h, M) - ZETA_TAIL_ABSORBED)
    guard = guard_report("zeta-r", 0.0, R, zeros, h=h)
    parts = {"w_f": prime, "main_term": main, "remainder": remainder}
    slack = {"w_f_tail": tail, "M": M, "shortcut_error": err}
    return _finish(Theorem.ZETA_R, w, parts, zs, slack, zeros, warnings, guard)


def certify_zeta_window(zeros: ZeroList, a: float, b: float, h: float,
                        opts: CertifyOptions | None = None) -> CertificateReport:
    """All zeros with ordinate in [a, b]; threshold 0.44."""
    opts = opts or CertifyOptions()
    _check_zeta_h(h)
    if not a > 15:
        raise HypothesisViolation("a-range", f"need a > 15, got {a:g}")
    if not a < b - 5 * h / math.pi:
        raise HypothesisViolation("window-too-narrow", f"need a < b - 5h/pi = {b - 5 * h / math.pi:g}")
    w = TestWindow(a, b, h)
    warnings = _check_zeros(zeros, w, opts)
    M = opts.M or zeta_cutoff(h)
    desc = zeta_descriptor()
    prime = zeta_prime_sum(a, b, h, M)
    width = Interval.point(b) - a
    main = (_zeta_gamma_im(b) - _zeta_gamma_im(a)) / PI - width / (2.0 * PI) * PI.log()
    remainder = zeta_osc_remainder(h, (a, b), 3.2 / Interval.point(a))
    zs, _, err = zero_sum(w, zeros, opts.shortcut)
    tail = max(0.0, prime_tail_bound(desc, h, M) - ZETA_TAIL_ABSORBED)
    guard = guard_report("zeta-ab", a, b, zeros, h=h)
    parts = {"w_f": prime, "main_term": main, "remainder": remainder}
    slack = {"w_f_tail": tail, "M": M, "shortcut_error": err}
    return _finish(Theorem.ZETA_AB, w, parts, zs, slack, zeros, warnings, guard)


# -- number fields -------------------------------------------------------------


def _inv_abs(t: float) -> Interval:
    """1/|t|, and 0 at t = 0."""
    return Interval(0.0, 0.0) if t == 0 else 1.0 / Interval.point(abs(t))


def hecke_penalty(desc: LFunctionDescriptor, a: float, b: float) -> Interval:
    """sum over places and both endpoints of weight * E0(z + phi), E0(t) = 1/|t| (0 at 0)."""
    parts = []
    for kind, phi in desc.places():
        weight = HECKE_REAL_WEIGHT if kind == "real" else HECKE_COMPLEX_WEIGHT
        for z in (a, b):
            parts.append(weight * _inv_abs(z + phi))
    return isum(parts)


def certify_hecke(desc: LFunctionDescriptor, zeros: ZeroList, a: float, b: float,
                  opts: CertifyOptions | None = None) -> CertificateReport:
    """Number-field certificate with h = pi and threshold 0.44."""
    opts = opts or CertifyOptions()
    h = math.pi
    if not b - a > 5:
        raise HypothesisViolation("window-too-narrow", f"need b - a > 5, got {b - a:g}")
    N = desc.degree
    for _, phi in desc.places():
        for z in (a, b):
            s = z + phi
            if s != 0 and not abs(s) > 20 * N:
                raise HypothesisViolation(
                    "endpoint-range", f"z + phi = {s:g} must be 0 or exceed 20N = {20 * N} in absolute value"
                )
    w = TestWindow(a, b, h)
    warnings = _check_zeros(zeros, w, opts)
    M = opts.M or 20 * N
    wf, tail = w_f_eval(desc, w, M, enclosure=True)
    main = gamma_main_term(desc, a, b, enclosure=True)
    penalty = hecke_penalty(desc, a, b)
    poles = _pole_term(desc, w)
    zs, _, err = zero_sum(w, zeros, opts.shortcut)
    tail = max(0.0, tail - HECKE_TAIL_ABSORBED)
    guard = guard_report("hecke", a, b, zeros, **hecke_cutoff_params(desc))
    parts = {"w_f": wf, "main_term": main, "penalty": penalty, "pole_term": poles}
    slack = {"w_f_tail": tail, "M": M, "shortcut_error": err}
    return _finish(Theorem.HECKE, w, parts, zs, slack, zeros, warnings, guard)


def elliptic_penalty(t: float) -> Interval:
    """5.57/|t|, and 0 at t = 0."""
    return ELLIPTIC_WEIGHT * _inv_abs(t)


def certify_elliptic(desc: LFunctionDescriptor, zeros: ZeroList, a: float, b: float,
                     opts: CertifyOptions | None = None) -> CertificateReport:
    """Elliptic-curve certificate with h = pi and threshold 0.42."""
    opts = opts or CertifyOptions()
    if not isinstance(desc.coeffs, EllipticCoefficients):
        raise DomainError("descriptor does not carry elliptic-curve coefficients")
    h = math.pi
    if not b - a > 5:
        raise HypothesisViolation("window-too-narrow", f"need b - a > 5, got {b - a:g}")
    for z in (a, b):
        if z != 0 and not abs(z) > 15:
            raise HypothesisViolation("endpoint-range", f"endpoint {z:g} must be 0 or exceed 15 in absolute value")
    w = TestWindow(a, b, h)
    warnings = _check_zeros(zeros, w, opts)
    N = desc.coeffs.curve.conductor
    M = opts.M or ELLIPTIC_CUTOFF
    wf, tail = w_f_eval(desc, w, M, enclosure=True)
    width = Interval.point(b) - a
    lg = [log_gamma_branch(complex(1.0, t), enclosure=True).im for t in (b, a)]
    main = width / (2.0 * PI) * (Interval.from_value(N) / (4.0 * PI.sqr())).log() + (lg[0] - lg[1]) / PI
    penalty = elliptic_penalty(a) + elliptic_penalty(b)
    zs, _, err = zero_sum(w, zeros, opts.shortcut)
    tail = max(0.0, tail - ELLIPTIC_TAIL_ABSORBED)
    guard = guard_report("elliptic", a, b, zeros, N=N)
    parts = {"w_f": wf, "main_term": main, "penalty": penalty}
    slack = {"w_f_tail": tail, "M": M, "shortcut_error": err}
    return _finish(Theorem.ELLIPTIC, w, parts, zs, slack, zeros, warnings, guard)


# -- dispatch ------------------------------------------------------------------


def certify(desc: LFunctionDescriptor, zeros: ZeroList, a: float | None = None, b: float | None = None,
            h: float | None = None, R: float | None = None, theorem: str = "auto",
            opts: CertifyOptions | None = None) -> CertificateReport:
    """Run the named certificate, or pick one from the family when theorem is 'auto'.

    'auto' tries the family form whose hypotheses hold and otherwise falls back
    to the general certificate.
    """
    opts = opts or CertifyOptions()
    if R is not None and theorem in ("auto", "zeta-r"):
        if desc.family is not Family.ZETA:
            raise HypothesisViolation("family", "the (0, R] form is only available for zeta")
        return certify_zeta_R(zeros, R, 2.5 if h is None else h, opts)
    if theorem == "zeta-r":
        raise HypothesisViolation("missing-R", "the zeta-r form needs R")
    if a is None or b is None:
        raise HypothesisViolation("missing-window", "need both a and b")
    if theorem == "general":
        return certify_general(desc, zeros, TestWindow(a, b, _need_h(h)), opts)
    if theorem == "zeta-ab":
        return certify_zeta_window(zeros, a, b, _need_h(h), opts)
    if theorem == "hecke":
        return certify_hecke(desc, zeros, a, b, opts)
    if theorem == "elliptic":
        return certify_elliptic(desc, zeros, a, b, opts)
    if theorem != "auto":
        raise HypothesisViolation("theorem", f"unknown theorem {theorem!r}")
    try:
        if desc.family is Family.ZETA and h is not None:
            return certify_zeta_window(zeros, a, b, h, opts)
        if desc.family is Family.HECKE and h in (None, math.pi):
            return certify_hecke(desc, zeros, a, b, opts)
        if desc.family is Family.ELLIPTIC and h in (None, math.pi):
            return certify_elliptic(desc, zeros, a, b, opts)
    except HypothesisViolation as exc:
        if exc.name in ("close-ordinates", "precision-too-coarse"):
            raise
    return certify_general(desc, zeros, TestWindow(a, b, math.pi if h is None else h), opts)


def _need_h(h):
    if h is None:
        raise HypothesisViolation("missing-h", "need h")
    return h


__all__ = [
    "THRESHOLDS",
    "zeta_osc_remainder",
    "CertificateReport",
    "CertifyOptions",
    "Theorem",
    "Verdict",
    "certify",
    "certify_elliptic",
    "certify_general",
    "certify_hecke",
    "certify_zeta_R",
    "certify_zeta_window",
    "elliptic_penalty",
    "hecke_penalty",
    "zero_sum",
    "zeta_cutoff",
    "zeta_prime_sum",
]
