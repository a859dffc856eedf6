"""L-function descriptors, Euler-product coefficients and zero lists.

A descriptor carries the data of the completed function

    Lambda(s) = Q^s prod_k Gamma(lambda_k s + mu_k) L(s),
    Lambda(s) = w conj(Lambda(sigma0 - conj(s))),
    L(s) = exp(sum c(p^m) p^{-ms}),  |c(p^m)| <= C p^{(sigma1 - 1) m},

together with the poles of Lambda and a provider for c(p^m).
"""

from __future__ import annotations

import enum
import json
import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from .errors import AxiomViolation, BudgetError, DomainError, ParseError


class Family(enum.Enum):
    ZETA = "zeta"
    HECKE = "hecke_gaussian"
    ELLIPTIC = "elliptic"
    GENERIC = "generic"


@dataclass(frozen=True)
class GammaFactor:
    """Gamma(lam * s + mu)."""

    lam: float
    mu: complex = 0j

    @property
    def u(self) -> float:
        return self.mu.real

    @property
    def v(self) -> float:
        return self.mu.imag


@dataclass(frozen=True)
class Pole:
    """Pole of Lambda at s = location with order multiplicity."""

    location: complex
    multiplicity: int = 1


def factor_prime_power(n: int) -> tuple[int, int] | None:
    """(p, m) with n = p^m, or None if n is not a prime power."""
    if n < 2:
        return None
    d = 2
    while d * d <= n:
        if n % d == 0:
            m = 0
            while n % d == 0:
                n //= d
                m += 1
            return (d, m) if n == 1 else None
        d += 1 if d == 2 else 2
    return n, 1


def is_prime(n: int) -> bool:
    pm = factor_prime_power(n)
    return pm is not None and pm[1] == 1


# -- coefficient providers -------------------------------------------------


@dataclass(frozen=True)
class ZetaCoefficients:
    """c(p^m) = 1/m."""

    def coeff(self, p: int, m: int) -> complex:
        return complex(1.0 / m)

    def exact(self, p: int, m: int) -> Fraction:
        return Fraction(1, m)


def gaussian_dedekind_coeff(p: int, m: int) -> Fraction:
    """c(p^m) for the Dedekind zeta function of Q(i).

    Sum of 1/k over prime ideals P of Z[i] and k >= 1 with N(P)^k = p^m.
    2 ramifies (one prime of norm 2), p = 1 mod 4 splits (two primes of
    norm p), p = 3 mod 4 stays inert (one prime of norm p^2).
    """
    if p == 2:
        return Fraction(1, m)
    if p % 4 == 1:
        return Fraction(2, m)
    if m % 2 == 0:
        return Fraction(1, m // 2)
    return Fraction(0)


@dataclass(frozen=True)
class GaussianDedekindCoefficients:
    def coeff(self, p: int, m: int) -> complex:
        return complex(gaussian_dedekind_coeff(p, m))

    def exact(self, p: int, m: int) -> Fraction:
        return gaussian_dedekind_coeff(p, m)


@dataclass(frozen=True)
class EllipticCurve:
    """Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.

    bad_primes maps each prime dividing the conductor to the local sign eps:
    1 split multiplicative, -1 non-split multiplicative, 0 additive.
    """

    ainvs: tuple[int, int, int, int, int]
    conductor: int
    bad_primes: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "ainvs", tuple(int(a) for a in self.ainvs))
        object.__setattr__(
            self, "bad_primes", tuple(sorted((int(p), int(e)) for p, e in self.bad_primes))
        )
        if len(self.ainvs) != 5:
            raise ValueError("need five a-invariants")

    @property
    def eps(self) -> dict[int, int]:
        return dict(self.bad_primes)

    def discriminant(self) -> int:
        a1, a2, a3, a4, a6 = self.ainvs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def count_trace(ainvs, p: int) -> int:
    """p + 1 - #E(F_p) by naive point counting (affine points plus infinity).

    At a prime of bad reduction for a minimal model this returns the local
    sign eps (the singular point counted once).
    """
    a1, a2, a3, a4, a6 = (a % p for a in ainvs)
    if p == 2:
        n = 0
        for x in range(2):
            for y in range(2):
                if (y * y + a1 * x * y + a3 * y - (x ** 3 + a2 * x * x + a4 * x + a6)) % 2 == 0:
                    n += 1
        return 2 + 1 - (n + 1)
    x = np.arange(p, dtype=np.int64)
    rhs = (((x + a2) * x % p + a4) * x % p + a6) % p
    lin = (a1 * x + a3) % p
    disc = (4 * rhs + lin * lin) % p
    squares = np.zeros(p, dtype=bool)
    squares[(x * x) % p] = True
    chi = np.where(disc == 0, 0, np.where(squares[disc], 1, -1))
    return -int(chi.sum())


@dataclass(eq=False)
class EllipticCoefficients:
    """c(p^m) = (alpha^m + conj(alpha)^m)/m at good p, eps(p)^m/m at bad p."""

    curve: EllipticCurve
    budget: int = 10 ** 8
    _traces: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __eq__(self, other):
        return isinstance(other, EllipticCoefficients) and other.curve == self.curve

    def __hash__(self):
        return hash(self.curve)

    def a_p(self, p: int) -> int:
        eps = self.curve.eps
        if p in eps:
            return eps[p]
        with self._lock:
            cached = self._traces.get(p)
        if cached is not None:
            return cached
        t = count_trace(self.curve.ainvs, p)
        with self._lock:
            self._traces[p] = t
        return t

    def power_trace(self, p: int, m: int) -> int:
        """alpha^m + conj(alpha)^m, or eps^m at a bad prime."""
        if p ** m > self.budget:
            raise BudgetError(f"p^m = {p}^{m} exceeds the point-counting budget {self.budget}")
        eps = self.curve.eps
        if p in eps:
            return eps[p] ** m
        ap = self.a_p(p)
        prev, cur = 2, ap
        for _ in range(m - 1):
            prev, cur = cur, ap * cur - p * prev
        return cur

    def exact(self, p: int, m: int) -> Fraction:
        return Fraction(self.power_trace(p, m), m)

    def coeff(self, p: int, m: int) -> complex:
        return complex(self.power_trace(p, m) / m)

    def check_reduction(self) -> list[tuple[int, int, int]]:
        """Bad primes whose declared eps disagrees with point counting.

        Meaningful for a model that is minimal at every bad prime.
        """
        out = []
        for p, e in self.curve.bad_primes:
            t = count_trace(self.curve.ainvs, p)
            if t != e:
                out.append((p, e, t))
        return out


def elliptic_coeff(curve: EllipticCurve, p: int, m: int) -> Fraction:
    return EllipticCoefficients(curve).exact(p, m)


@dataclass(eq=False)
class TableCoefficients:
    """Coefficients read from a table; absent entries up to ``limit`` are 0."""

    table: dict
    limit: int
    path: str | None = None

    def __eq__(self, other):
        return isinstance(other, TableCoefficients) and (self.table, self.limit) == (
            other.table,
            other.limit,
        )

    def coeff(self, p: int, m: int) -> complex:
        if p ** m > self.limit:
            raise DomainError(f"coefficient table covers p^m <= {self.limit}, asked for {p}^{m}")
        return self.table.get((p, m), 0j)

    @classmethod
    def load(cls, path) -> TableCoefficients:
        """Text lines 'p m re im'; '# limit=N' declares coverage (default: largest entry)."""
        table = {}
        limit = None
        with open(path) as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.strip()
                if not line:
                    continue
                if line.startswith("#"):
                    key, _, val = line[1:].strip().partition("=")
                    if key.strip() == "limit":
                        try:
                            limit = int(val)
                        except ValueError:
                            raise ParseError(path, lineno, f"bad limit {val!r}") from None
                    continue
                parts = line.split()
                if len(parts) != 4:
                    raise ParseError(path, lineno, "expected 'p m re im'")
                try:
                    p, m = int(parts[0]), int(parts[1])
                    c = complex(float(parts[2]), float(parts[3]))
                except ValueError:
                    raise ParseError(path, lineno, f"malformed entry {line!r}") from None
                if not is_prime(p) or m < 1:
                    raise ParseError(path, lineno, f"{p}^{m} is not a prime power")
                table[(p, m)] = c
        if limit is None:
            limit = max((p ** m for p, m in table), default=0)
        return cls(table, limit, str(path))

    def save(self, path) -> None:
        with open(path, "w") as fh:
            fh.write(f"# limit={self.limit}\n")
            for (p, m), c in sorted(self.table.items(), key=lambda kv: kv[0][0] ** kv[0][1]):
                fh.write(f"{p} {m} {c.real!r} {c.imag!r}\n")


# -- descriptor --------------------------------------------------------------


@dataclass(frozen=True)
class LFunctionDescriptor:
    sigma0: float
    sigma1: float
    Q: float
    gamma_factors: tuple[GammaFactor, ...]
    root_number: complex
    poles: tuple[Pole, ...]
    coeff_bound_C: float
    coeffs: object
    family: Family = Family.GENERIC
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "gamma_factors", tuple(self.gamma_factors))
        object.__setattr__(self, "poles", tuple(self.poles))
        object.__setattr__(self, "root_number", complex(self.root_number))
        self.validate()

    def validate(self) -> None:
        for name in ("sigma0", "sigma1", "Q", "coeff_bound_C"):
            if not math.isfinite(getattr(self, name)):
                raise AxiomViolation("L4" if name != "coeff_bound_C" else "L3", f"{name} must be finite")
        if not self.coeff_bound_C > 0:
            raise AxiomViolation("L3", "coefficient bound C must be positive")
        if not self.sigma0 < 2 * self.sigma1:
            raise AxiomViolation("L4", f"need sigma0 < 2 sigma1, got {self.sigma0} and {self.sigma1}")
        if not self.Q > 0:
            raise AxiomViolation("L4", "Q must be positive")
        if abs(abs(self.root_number) - 1.0) > 1e-12:
            raise AxiomViolation("L4", f"root number must have modulus 1, got {self.root_number}")
        if not self.gamma_factors:
            raise AxiomViolation("L4", "at least one gamma factor is required")
        for g in self.gamma_factors:
            if not g.lam > 0:
                raise AxiomViolation("L4", f"lambda must be positive, got {g.lam}")
            if not g.u > -g.lam * self.sigma0 / 2:
                raise AxiomViolation(
                    "L4", f"Re(mu) = {g.u} must exceed -lambda sigma0/2 = {-g.lam * self.sigma0 / 2}"
                )
        for pl in self.poles:
            if int(pl.multiplicity) != pl.multiplicity or pl.multiplicity < 1:
                raise AxiomViolation("L2", f"pole multiplicity must be a positive integer: {pl}")
        if isinstance(self.coeffs, EllipticCoefficients):
            curve = self.coeffs.curve
            divisors = {p for p in _prime_factors(curve.conductor)}
            if divisors != {p for p, _ in curve.bad_primes}:
                raise AxiomViolation("L3", "bad primes must be exactly the primes dividing the conductor")
            if any(e not in (-1, 0, 1) for _, e in curve.bad_primes):
                raise AxiomViolation("L3", "local signs must be -1, 0 or 1")

    def coeff(self, p: int, m: int) -> complex:
        return self.coeffs.coeff(p, m)

    @property
    def degree(self) -> int:
        """Number of archimedean places counted with degree (r1 + 2 r2)."""
        return sum(1 if kind == "real" else 2 for kind, _ in self.places())

    def places(self) -> list[tuple[str, float]]:
        """Archimedean places (kind, phi) read off the gamma factors.

        Gamma((s + i phi + n)/2) is a real place, Gamma(s + i phi + |n|/2) a
        complex one.
        """
        out = []
        for g in self.gamma_factors:
            if g.lam == 0.5:
                out.append(("real", 2.0 * g.v))
            elif g.lam == 1.0:
                out.append(("complex", g.v))
            else:
                raise DomainError(f"gamma factor with lambda = {g.lam} is not a number-field place")
        return out

    def pole_offsets(self) -> list[tuple[complex, int]]:
        """(rho - sigma0/2)/i and |n| for each pole rho."""
        return [((p.location - self.sigma0 / 2) / 1j, p.multiplicity) for p in self.poles]


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def zeta_descriptor() -> LFunctionDescriptor:
    """pi^{-s/2} Gamma(s/2) zeta(s), poles at 0 and 1."""
    return LFunctionDescriptor(
        sigma0=1.0,
        sigma1=1.0,
        Q=1.0 / math.sqrt(math.pi),
        gamma_factors=(GammaFactor(0.5, 0j),),
        root_number=1.0,
        poles=(Pole(1.0 + 0j, 1), Pole(0j, 1)),
        coeff_bound_C=1.0,
        coeffs=ZetaCoefficients(),
        family=Family.ZETA,
        label="zeta",
    )


def gaussian_descriptor() -> LFunctionDescriptor:
    """Dedekind zeta of Q(i): pi^{-s} Gamma(s) zeta_K(s), poles at 0 and 1."""
    return LFunctionDescriptor(
        sigma0=1.0,
        sigma1=1.0,
        Q=1.0 / math.pi,
        gamma_factors=(GammaFactor(1.0, 0j),),
        root_number=1.0,
        poles=(Pole(1.0 + 0j, 1), Pole(0j, 1)),
        coeff_bound_C=2.0,
        coeffs=GaussianDedekindCoefficients(),
        family=Family.HECKE,
        label="dedekind Q(i)",
    )


CURVE_11A1 = EllipticCurve((0, -1, 1, -10, -20), 11, ((11, 1),))


def elliptic_descriptor(curve: EllipticCurve = CURVE_11A1, root_number: int = 1, label: str = "11a1"):
    """(sqrt(N)/2pi)^s Gamma(s) L(E, s), centre s = 1."""
    return LFunctionDescriptor(
        sigma0=2.0,
        sigma1=1.5,
        Q=math.sqrt(curve.conductor) / (2.0 * math.pi),
        gamma_factors=(GammaFactor(1.0, 0j),),
        root_number=root_number,
        poles=(),
        coeff_bound_C=2.0,
        coeffs=EllipticCoefficients(curve),
        family=Family.ELLIPTIC,
        label=label,
    )


def audit_coefficient_bound(desc: LFunctionDescriptor, limit: int, sieve=None) -> list[tuple]:
    """Prime powers p^m <= limit where |c(p^m)| > C p^{(sigma1-1)m}."""
    from .primesum import PrimePowerSieve

    sieve = sieve or PrimePowerSieve(limit)
    bad = []
    for p, m, pm in sieve.entries:
        c = abs(desc.coeff(int(p), int(m)))
        bound = desc.coeff_bound_C * float(pm) ** (desc.sigma1 - 1.0)
        if c > bound * (1 + 1e-12):
            bad.append((int(p), int(m), c, bound))
    return bad


# -- descriptor files ----------------------------------------------------------


def descriptor_to_dict(desc: LFunctionDescriptor, table_path: str | None = None) -> dict:
    d = {
        "sigma0": desc.sigma0,
        "sigma1": desc.sigma1,
        "Q": desc.Q,
        "gamma_factors": [[g.lam, g.mu.real, g.mu.imag] for g in desc.gamma_factors],
        "root_number": [desc.root_number.real, desc.root_number.imag],
        "poles": [[p.location.real, p.location.imag, p.multiplicity] for p in desc.poles],
        "coeff_bound_C": desc.coeff_bound_C,
        "family": desc.family.value,
    }
    if desc.label:
        d["label"] = desc.label
    if desc.family is Family.ELLIPTIC:
        c = desc.coeffs.curve
        d["elliptic"] = {
            "ainvs": list(c.ainvs),
            "conductor": c.conductor,
            "bad_primes": [list(bp) for bp in c.bad_primes],
        }
    elif desc.family is Family.GENERIC:
        path = table_path or getattr(desc.coeffs, "path", None)
        if path is None:
            raise ValueError("generic descriptor needs a coefficient table path")
        d["generic"] = {"coeff_table": str(path)}
    return d


def save_descriptor(desc: LFunctionDescriptor, path, table_path: str | None = None) -> None:
    with open(path, "w") as fh:
        json.dump(descriptor_to_dict(desc, table_path), fh, indent=2)
        fh.write("\n")


def descriptor_from_dict(d: dict, base_dir: Path | None = None, source="<dict>") -> LFunctionDescriptor:
    def need(key):
        if key not in d:
            raise ParseError(source, None, f"missing field {key!r}")
        return d[key]

    try:
        family = Family(need("family"))
    except ValueError:
        raise ParseError(source, None, f"unknown family {d.get('family')!r}") from None
    try:
        gammas = tuple(GammaFactor(float(l), complex(float(ur), float(ui))) for l, ur, ui in need("gamma_factors"))
        rn = need("root_number")
        root = complex(float(rn[0]), float(rn[1]))
        poles = tuple(Pole(complex(float(r), float(i)), int(m)) for r, i, m in need("poles"))
        sigma0, sigma1 = float(need("sigma0")), float(need("sigma1"))
        Q, C = float(need("Q")), float(need("coeff_bound_C"))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(source, None, f"malformed descriptor: {exc}") from None

    if family is Family.ZETA:
        coeffs = ZetaCoefficients()
    elif family is Family.HECKE:
        coeffs = GaussianDedekindCoefficients()
    elif family is Family.ELLIPTIC:
        e = need("elliptic")
        try:
            curve = EllipticCurve(tuple(e["ainvs"]), int(e["conductor"]), tuple(tuple(x) for x in e["bad_primes"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(source, None, f"malformed elliptic block: {exc}") from None
        coeffs = EllipticCoefficients(curve)
    else:
        g = need("generic")
        table = Path(g["coeff_table"])
        if not table.is_absolute() and base_dir is not None:
            table = base_dir / table
        coeffs = TableCoefficients.load(table)
    return LFunctionDescriptor(
        sigma0=sigma0,
        sigma1=sigma1,
        Q=Q,
        gamma_factors=gammas,
        root_number=root,
        poles=poles,
        coeff_bound_C=C,
        coeffs=coeffs,
        family=family,
        label=str(d.get("label", "")),
    )


def descriptor_from_file(path) -> LFunctionDescriptor:
    path = Path(path)
    try:
        with open(path) as fh:
            d = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(path, exc.lineno, exc.msg) from None
    if not isinstance(d, dict):
        raise ParseError(path, None, "descriptor must be a JSON object")
    return descriptor_from_dict(d, path.parent, path)


# -- zero lists ----------------------------------------------------------------


@dataclass(frozen=True)
class ZeroList:
    """Ordinates gamma_j of zeros sigma0/2 + i gamma_j, each within delta of the truth.

    A repeated ordinate stands for a zero listed with multiplicity.
    """

    ordinates: tuple[float, ...]
    delta: float
    source: str = ""
    multiplicity_asserted: bool = False

    def __post_init__(self):
        ords = tuple(float(x) for x in self.ordinates)
        object.__setattr__(self, "ordinates", ords)
        if any(not math.isfinite(x) for x in ords):
            raise ValueError("ordinates must be finite")
        if any(b < a for a, b in zip(ords, ords[1:])):
            raise ValueError("ordinates must be non-decreasing")
        if not (self.delta >= 0 and math.isfinite(self.delta)):
            raise ValueError("delta must be a finite non-negative number")

    def __len__(self):
        return len(self.ordinates)

    def __iter__(self):
        return iter(self.ordinates)

    def between(self, lo: float, hi: float) -> ZeroList:
        return ZeroList(tuple(x for x in self.ordinates if lo <= x <= hi), self.delta, self.source,
                        self.multiplicity_asserted)

    def count_between(self, lo: float, hi: float) -> int:
        return sum(1 for x in self.ordinates if lo <= x <= hi)

    def without_index(self, i: int) -> ZeroList:
        ords = self.ordinates[:i] + self.ordinates[i + 1:]
        return ZeroList(ords, self.delta, self.source, self.multiplicity_asserted)

    def with_ordinate(self, x: float) -> ZeroList:
        ords = tuple(sorted(self.ordinates + (float(x),)))
        return ZeroList(ords, self.delta, self.source, self.multiplicity_asserted)

    def close_pairs(self, gap: float) -> list[tuple[int, float, float]]:
        """Adjacent ordinates closer than ``gap``."""
        o = self.ordinates
        return [(i, o[i], o[i + 1]) for i in range(len(o) - 1) if o[i + 1] - o[i] < gap]

    @classmethod
    def load(cls, path) -> ZeroList:
        delta = None
        source = ""
        mult = False
        ords = []
        with open(path) as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.strip()
                if not line:
                    continue
                if line.startswith("#"):
                    key, eq, val = line[1:].strip().partition("=")
                    key = key.strip()
                    if not eq:
                        continue
                    if key == "delta":
                        try:
                            delta = float(val)
                        except ValueError:
                            raise ParseError(path, lineno, f"bad delta {val.strip()!r}") from None
                        if not (math.isfinite(delta) and delta >= 0):
                            raise ParseError(path, lineno, "delta must be finite and non-negative")
                    elif key == "source":
                        source = val.strip()
                    elif key == "multiplicity":
                        mult = val.strip() == "asserted"
                    continue
                try:
                    x = float(line)
                except ValueError:
                    raise ParseError(path, lineno, f"not a decimal ordinate: {line!r}") from None
                if not math.isfinite(x):
                    raise ParseError(path, lineno, "ordinate must be finite")
                if ords and x < ords[-1]:
                    raise ParseError(path, lineno, f"ordinates not sorted ({x!r} after {ords[-1]!r})")
                ords.append(x)
        if delta is None:
            raise ParseError(path, None, "missing '# delta=' header")
        return cls(tuple(ords), delta, source, mult)

    def save(self, path) -> None:
        with open(path, "w") as fh:
            fh.write(f"# delta={self.delta!r}\n")
            if self.source:
                fh.write(f"# source={self.source}\n")
            if self.multiplicity_asserted:
                fh.write("# multiplicity=asserted\n")
            for x in self.ordinates:
                fh.write(f"{x!r}\n")

