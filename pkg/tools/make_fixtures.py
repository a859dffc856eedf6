"""Regenerate the zero lists and descriptors under tests/fixtures.

Everything here is computed with mpmath and plain Python, without importing
the package, so the fixtures act as an independent oracle.

    python3 tools/make_fixtures.py
"""

from __future__ import annotations

import argparse
import json
import math
from pathlib import Path

import mpmath as mp

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
DELTA = 1e-10


def write_zeros(path: Path, ords, source: str, delta: float = DELTA) -> None:
    ords = sorted(float(x) for x in ords)
    with open(path, "w") as fh:
        fh.write(f"# delta={delta!r}\n# source={source}\n")
        for x in ords:
            fh.write(f"{x!r}\n")
    print(f"{path.name}: {len(ords)} ordinates")


def zeta_zeros_between(lo: float, hi: float) -> list:
    mp.mp.dps = 30
    n = int(mp.nzeros(lo)) + 1 if lo > 14 else 1
    out = []
    while True:
        g = mp.zetazero(n).imag
        if g > hi:
            return out
        if g >= lo:
            out.append(g)
        n += 1


def scan_real_zeros(Z, lo: float, hi: float, step: float) -> list:
    """Roots of a real function from sign changes on a grid, refined by a bracketing root finder."""
    out = []
    t0, z0 = mp.mpf(lo), Z(mp.mpf(lo))
    t = t0
    while t < hi:
        t1 = min(t + step, mp.mpf(hi))
        z1 = Z(t1)
        if z0 == 0:
            out.append(t0)
        elif z0 * z1 < 0:
            out.append(mp.findroot(Z, (t0, t1), solver="anderson"))
        t0, z0, t = t1, z1, t1
    return out


def chi4_hardy(t):
    """Real-valued Lambda(1/2 + it, chi_-4) up to a positive factor."""
    s = mp.mpc(0.5, t)
    lam = (4 / mp.pi) ** (s / 2) * mp.gamma((s + 1) / 2) * mp.dirichlet(s, [0, 1, 0, -1])
    return lam.real / abs(mp.gamma((s + 1) / 2))


def ec_ap(ainvs, p: int) -> int:
    a1, a2, a3, a4, a6 = ainvs
    count = 1
    for x in range(p):
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y - x ** 3 - a2 * x * x - a4 * x - a6) % p == 0:
                count += 1
    return p + 1 - count


def ec_an(ainvs, conductor: int, nmax: int) -> list:
    """a_n for n <= nmax by multiplicativity and the Hecke recursion."""
    primes = [p for p in range(2, nmax + 1) if all(p % q for q in range(2, int(p ** 0.5) + 1))]
    a = [0] * (nmax + 1)
    a[1] = 1
    pp = {}
    for p in primes:
        ap = ec_ap(ainvs, p)
        seq = [1, ap]
        while p ** len(seq) <= nmax:
            if conductor % p == 0:
                seq.append(seq[-1] * ap)
            else:
                seq.append(ap * seq[-1] - p * seq[-2])
        pp[p] = seq
    for n in range(2, nmax + 1):
        m, val = n, 1
        for p in primes:
            if p * p > m:
                break
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            if k:
                val *= pp[p][k]
        if m > 1:
            val *= pp[m][1]
        a[n] = val
    return a


def ec_lambda(an, conductor: int, root: int):
    """Completed L-function (sqrt N/2pi)^s Gamma(s) L(E, s) by the smoothed sum."""
    A = mp.sqrt(conductor) / (2 * mp.pi)

    def lam(s):
        tot = mp.mpf(0)
        for n in range(1, len(an)):
            if an[n] == 0:
                continue
            x = n / A
            tot += an[n] * (A ** s * mp.gammainc(s, x) * mp.power(n, -s)
                            + root * A ** (2 - s) * mp.gammainc(2 - s, x) * mp.power(n, s - 2))
        return tot

    return lam


def ec_hardy(lam):
    def Z(t):
        s = mp.mpc(1, t)
        return lam(s).real / abs(mp.gamma(s))
    return Z


def write_descriptors(out: Path) -> None:
    """Descriptor files for the built-in families plus two table-driven ones."""
    base = {"sigma0": 1.0, "sigma1": 1.0, "root_number": [1.0, 0.0], "poles": [[1.0, 0.0, 1], [0.0, 0.0, 1]]}
    descs = {
        "zeta.json": dict(base, Q=math.pi ** -0.5, gamma_factors=[[0.5, 0.0, 0.0]], coeff_bound_C=1.0,
                          family="zeta", label="zeta"),
        "gaussian.json": dict(base, Q=1 / math.pi, gamma_factors=[[1.0, 0.0, 0.0]], coeff_bound_C=2.0,
                              family="hecke_gaussian", label="dedekind Q(i)"),
        "ec11a1.json": {
            "sigma0": 2.0, "sigma1": 1.5, "Q": math.sqrt(11) / (2 * math.pi),
            "gamma_factors": [[1.0, 0.0, 0.0]], "root_number": [1.0, 0.0], "poles": [],
            "coeff_bound_C": 2.0, "family": "elliptic", "label": "11a1",
            "elliptic": {"ainvs": [0, -1, 1, -10, -20], "conductor": 11, "bad_primes": [[11, 1]]},
        },
        # zeta again, but through a coefficient table
        "zeta_table.json": dict(base, Q=math.pi ** -0.5, gamma_factors=[[0.5, 0.0, 0.0]], coeff_bound_C=1.0,
                                family="generic", label="zeta via table",
                                generic={"coeff_table": "zeta_table.txt"}),
        # no coefficients and no poles, shifted gamma factor
        "generic_empty.json": {
            "sigma0": 1.0, "sigma1": 1.0, "Q": 1.0, "gamma_factors": [[1.0, 0.5, 3.0]],
            "root_number": [1.0, 0.0], "poles": [], "coeff_bound_C": 1.0, "family": "generic",
            "label": "empty table", "generic": {"coeff_table": "empty_table.txt"},
        },
    }
    for name, d in descs.items():
        (out / name).write_text(json.dumps(d, indent=2) + "\n")
    limit = 5000
    rows = []
    for p in range(2, limit + 1):
        if all(p % q for q in range(2, int(p ** 0.5) + 1)):
            m, pm = 1, p
            while pm <= limit:
                rows.append(f"{p} {m} {1 / m!r} 0.0")
                m, pm = m + 1, pm * p
    (out / "zeta_table.txt").write_text(f"# limit={limit}\n" + "\n".join(rows) + "\n")
    (out / "empty_table.txt").write_text("# limit=100000\n")
    print("descriptors written")


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=OUT)
    ap.add_argument("--skip-elliptic", action="store_true")
    ap.add_argument("--descriptors-only", action="store_true")
    args = ap.parse_args(argv)
    out = args.out
    out.mkdir(parents=True, exist_ok=True)
    write_descriptors(out)
    if args.descriptors_only:
        return

    write_zeros(out / "zeta_0_103.txt", zeta_zeros_between(0, 103), "mpmath.zetazero")
    write_zeros(out / "zeta_990_1030.txt", zeta_zeros_between(990, 1030), "mpmath.zetazero")
    z80 = zeta_zeros_between(0, 80)
    write_zeros(out / "zeta_m80_80.txt", [-g for g in z80] + z80, "mpmath.zetazero")

    z60 = zeta_zeros_between(0, 60)
    mp.mp.dps = 30
    chi = scan_real_zeros(chi4_hardy, 0.05, 60, 0.05)
    both = [-g for g in z60] + z60 + [-g for g in chi] + chi
    write_zeros(out / "gaussian_m60_60.txt", both, "mpmath.zetazero + sign changes of Lambda(1/2+it, chi_-4)")

    if not args.skip_elliptic:
        mp.mp.dps = 50
        an = ec_an((0, -1, 1, -10, -20), 11, 45)
        Z = ec_hardy(ec_lambda(an, 11, 1))
        ec = scan_real_zeros(Z, 0.01, 25, 0.05)
        write_zeros(out / "ec11a1_m25_25.txt", [-g for g in ec] + ec,
                    "sign changes of the smoothed-sum Lambda(1+it, E) for 11a1")
        (out / "ec11a1_an.json").write_text(json.dumps(an[1:]) + "\n")


if __name__ == "__main__":
    main()
