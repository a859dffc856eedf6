"""The finite-prime term w_f(f_{a,b,h}) of the explicit formula.

    w_f = -2 sum_{p^m} (m log p / p^{m sigma0/2}) Re(c(p^m) f(m log p))

The weight m log p c(p^m) is the coefficient of p^{-ms} in -L'/L(s). The sum
is cut at p^m <= M; the remainder is at most

    (8C/pi) M^{sigma1 - (h + sigma0)/2} / (sigma0 + h - 2 sigma1).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .interval import PI, Interval, isum
from .testfn import TestWindow, f_eval

CHUNK = 256  # fixed chunk boundaries keep enclosure sums reproducible
DEFAULT_BUDGET = 0.05


class PrimePowerSieve:
    """All prime powers p^m <= limit as parallel arrays, sorted by p^m."""

    def __init__(self, limit: int):
        limit = int(limit)
        if limit < 0:
            raise ValueError("limit must be non-negative")
        self.limit = limit
        if limit < 2:
            empty = np.zeros(0, dtype=np.int64)
            self.p, self.m, self.pm = empty, empty, empty
            return
        mark = np.ones(limit + 1, dtype=bool)
        mark[:2] = False
        for q in range(2, math.isqrt(limit) + 1):
            if mark[q]:
                mark[q * q::q] = False
        primes = np.nonzero(mark)[0].astype(np.int64)
        ps, ms, pms = [primes], [np.ones_like(primes)], [primes]
        for q in primes[primes <= math.isqrt(limit)].tolist():
            m, qm = 2, q * q
            while qm <= limit:
                ps.append(np.array([q]))
                ms.append(np.array([m]))
                pms.append(np.array([qm]))
                m, qm = m + 1, qm * q
        p, m_arr, pm = np.concatenate(ps), np.concatenate(ms), np.concatenate(pms)
        order = np.argsort(pm, kind="stable")
        self.p, self.m, self.pm = p[order], m_arr[order], pm[order]

    def __len__(self) -> int:
        return int(self.pm.size)

    @property
    def entries(self) -> list[tuple[int, int, int]]:
        return list(zip(self.p.tolist(), self.m.tolist(), self.pm.tolist()))


@lru_cache(maxsize=16)
def sieve(limit: int) -> PrimePowerSieve:
    return PrimePowerSieve(limit)


def _tail_exponent(desc, h: float) -> float:
    e = (h + desc.sigma0) / 2 - desc.sigma1
    if not e > 0:
        raise DomainError(
            f"need h > 2 sigma1 - sigma0 = {2 * desc.sigma1 - desc.sigma0:g} for a convergent prime sum, got h = {h:g}"
        )
    return e


def prime_tail_bound(desc, h: float, M: float, enclosure: bool = False):
    """Bound on |w_f - (partial sum over p^m <= M)|; an Interval if enclosure."""
    e = _tail_exponent(desc, h)
    C = Interval.from_value(desc.coeff_bound_C)
    Mi = Interval.from_value(M)
    den = Interval.from_value(desc.sigma0) + h - 2.0 * Interval.from_value(desc.sigma1)
    val = 8.0 * C / PI * Mi.rpow(-Interval.from_value(e)) / den
    return val if enclosure else val.hi


def choose_cutoff(desc, h: float, budget: float = DEFAULT_BUDGET) -> int:
    """Smallest integer M whose tail bound is <= budget."""
    if not budget > 0:
        raise ValueError("budget must be positive")
    e = _tail_exponent(desc, h)
    k = 8.0 * desc.coeff_bound_C / math.pi / (desc.sigma0 + h - 2 * desc.sigma1)
    guess = max(1, int((k / budget) ** (1.0 / e)) - 2)
    M = guess
    while M > 1 and prime_tail_bound(desc, h, M - 1) <= budget:
        M -= 1
    while prime_tail_bound(desc, h, M) > budget:
        M += 1
    return M


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("ZEROCERT_THREADS", "1")))
    except ValueError:
        return 1


def _coeff_enclosure(desc, p: int, m: int):
    exact = getattr(desc.coeffs, "exact", None)
    if exact is not None:
        return Interval.from_value(Fraction(exact(p, m))), Interval(0.0, 0.0)
    c = complex(desc.coeff(p, m))
    return Interval.point(c.real), Interval.point(c.imag)


def _term_enclosure(desc, w: TestWindow, p: int, m: int) -> Interval:
    logp = Interval.from_value(p).log()
    t = logp * m
    weight = t / Interval.from_value(p ** m).rpow(Interval.from_value(desc.sigma0) / 2.0)
    cre, cim = _coeff_enclosure(desc, p, m)
    if cre.lo == cre.hi == 0.0 and cim.lo == cim.hi == 0.0:
        return Interval(0.0, 0.0)
    f = f_eval(w, t, enclosure=True)
    return -2.0 * weight * (cre * f.re - cim * f.im)


def _term_fast(desc, w: TestWindow, p: int, m: int) -> float:
    c = complex(desc.coeff(p, m))
    if c == 0:
        return 0.0
    t = m * math.log(p)
    weight = t / float(p ** m) ** (desc.sigma0 / 2)
    return -2.0 * weight * (c * f_eval(w, t)).real


def w_f_terms(desc, w: TestWindow, M: int) -> list[tuple[int, int, complex, float]]:
    """(p, m, c(p^m), term) for every prime power p^m <= M."""
    out = []
    for p, m, _ in sieve(int(M)).entries:
        out.append((p, m, complex(desc.coeff(p, m)), _term_fast(desc, w, p, m)))
    return out


def w_f_eval(desc, w: TestWindow, M: int, enclosure: bool = False):
    """Partial sum of w_f over p^m <= M and the tail bound for the rest.

    Returns (value, tail) where value is an Interval in enclosure mode and a
    float otherwise.
    """
    M = int(M)
    if M < 1:
        raise ValueError("M must be positive")
    tail = prime_tail_bound(desc, w.h, M)
    entries = sieve(M).entries
    chunks = [entries[i:i + CHUNK] for i in range(0, len(entries), CHUNK)]
    if enclosure:
        def run(chunk):
            return isum(_term_enclosure(desc, w, p, m) for p, m, _ in chunk)
    else:
        def run(chunk):
            return math.fsum(_term_fast(desc, w, p, m) for p, m, _ in chunk)
    n = _threads()
    if n > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=n) as ex:
            parts = list(ex.map(run, chunks))
    else:
        parts = [run(c) for c in chunks]
    if enclosure:
        return isum(parts) if parts else Interval(0.0, 0.0), tail
    return math.fsum(parts), tail


__all__ = [
    "CHUNK",
    "DEFAULT_BUDGET",
    "PrimePowerSieve",
    "sieve",
    "prime_tail_bound",
    "choose_cutoff",
    "w_f_terms",
    "w_f_eval",
]
