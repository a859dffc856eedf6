"""zerocert command line.

    zerocert certify --zeros FILE [--descriptor D] (--R R | --a A --b B) [--h H] ...
    zerocert window  --family F (--R R | --T T | --a A --b B) [--h H] ...
    zerocert check   --zeros FILE [--descriptor D] --a A --b B --h H
    zerocert primes  [--descriptor D] [--h H] [--M M]

D is a descriptor JSON file or one of the built-in names zeta, gaussian, 11a1.
Exit status: 0 certified (or check within budget), 1 inconclusive, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .certify import CertifyOptions, certify
from .diagnostics import (
    FAMILIES,
    explicit_formula_check,
    hecke_cutoff_params,
    recommend_cutoff,
    zeta_counting_bounds,
)
from .errors import ZerocertError
from .lfunc import (
    Family,
    LFunctionDescriptor,
    TableCoefficients,
    ZeroList,
    descriptor_from_file,
    elliptic_descriptor,
    gaussian_descriptor,
    zeta_descriptor,
)
from .primesum import DEFAULT_BUDGET, choose_cutoff, prime_tail_bound, w_f_terms
from .testfn import TestWindow

EXIT_OK, EXIT_INCONCLUSIVE, EXIT_INPUT = 0, 1, 2

BUILTIN = {"zeta": zeta_descriptor, "gaussian": gaussian_descriptor, "11a1": elliptic_descriptor}
THEOREMS = ("auto", "general", "zeta-r", "zeta-ab", "hecke", "elliptic")
ZETA_PRIME_BUDGET = 2 / (15 * math.pi)
CHECK_BUDGET = 1e-2


@dataclass
class RunConfig:
    command: str
    descriptor_path: str = "zeta"
    zeros_path: str | None = None
    a: float | None = None
    b: float | None = None
    h: float | None = None
    R: float | None = None
    T: float | None = None
    theorem: str = "auto"
    family: str | None = None
    budget: float | None = None
    osc_budget: float | None = None
    M: int | None = None
    N: float | None = None
    Q: float | None = None
    count: int | None = None
    shortcut: bool = False
    output: str = "text"
    strict: bool = False

    def validate(self) -> None:
        if self.R is not None and (self.a is not None or self.b is not None):
            raise UsageError("--R cannot be combined with --a/--b")
        if self.R is not None and self.theorem not in ("auto", "zeta-r") and self.command == "certify":
            raise UsageError("--R is only meaningful with --theorem zeta-r")
        if (self.a is None) != (self.b is None):
            raise UsageError("--a and --b go together")
        if self.a is not None and self.a > self.b:
            raise UsageError("need a <= b")


class UsageError(ZerocertError):
    pass


def load_descriptor(name: str) -> LFunctionDescriptor:
    if name in BUILTIN:
        return BUILTIN[name]()
    return descriptor_from_file(name)


def _emit(cfg: RunConfig, payload: dict, text: str) -> None:
    if cfg.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# -- commands ------------------------------------------------------------------


def cmd_certify(cfg: RunConfig) -> int:
    if cfg.zeros_path is None:
        raise UsageError("certify needs --zeros")
    desc = load_descriptor(cfg.descriptor_path)
    zeros = ZeroList.load(cfg.zeros_path)
    opts = CertifyOptions(shortcut=cfg.shortcut, strict=cfg.strict, M=cfg.M)
    if cfg.budget is not None:
        opts.wf_budget = cfg.budget
    if cfg.osc_budget is not None:
        opts.osc_budget = cfg.osc_budget
    report = certify(desc, zeros, a=cfg.a, b=cfg.b, h=cfg.h, R=cfg.R, theorem=cfg.theorem, opts=opts)
    if cfg.output == "json":
        print(report.to_json())
    else:
        print(report.to_text())
    return EXIT_OK if report.certified else EXIT_INCONCLUSIVE


def _window_params(cfg: RunConfig) -> dict:
    fam = cfg.family
    if fam in ("zeta-r", "zeta-ab"):
        return {"h": cfg.h if cfg.h is not None else 2.5}
    if fam == "general":
        desc = load_descriptor(cfg.descriptor_path)
        return {"h": cfg.h if cfg.h is not None else math.pi, "Q": cfg.Q if cfg.Q is not None else desc.Q}
    if fam == "hecke":
        return hecke_cutoff_params(load_descriptor(cfg.descriptor_path if cfg.descriptor_path != "zeta" else "gaussian"))
    if cfg.N is not None:
        return {"N": cfg.N}
    return {"N": load_descriptor("11a1" if cfg.descriptor_path == "zeta" else cfg.descriptor_path).coeffs.curve.conductor}


def _expected_count(cfg: RunConfig, lo: float, hi: float) -> int | None:
    if cfg.count is not None:
        return cfg.count
    if cfg.zeros_path is not None:
        return ZeroList.load(cfg.zeros_path).count_between(lo, hi)
    if cfg.family in ("zeta-r", "zeta-ab") and hi >= math.e:
        g_hi, r_hi = zeta_counting_bounds(hi)
        g_lo, r_lo = zeta_counting_bounds(lo) if lo >= math.e else (0.0, 0.0)
        return max(1, math.ceil(g_hi + r_hi - max(0.0, g_lo - r_lo)))
    return None


def cmd_window(cfg: RunConfig) -> int:
    fam = cfg.family
    if fam not in FAMILIES:
        raise UsageError(f"--family must be one of {', '.join(FAMILIES)}")
    params = _window_params(cfg)
    h = params.get("h", math.pi)
    lines, payload = [], {"family": fam, "params": params}
    if cfg.T is not None:
        c = recommend_cutoff(fam, cfg.T, **params)
        payload["cutoff"] = c
        lines.append(f"C({cfg.T:g}) = {c:.6f}")
        lo = hi = None
    elif cfg.R is not None or fam == "zeta-r":
        R = cfg.R if cfg.R is not None else cfg.b
        if R is None:
            raise UsageError("zeta-r needs --R")
        c = recommend_cutoff("zeta-r", R, **params)
        lo, hi = 0.0, R + c
        payload.update(cutoff_b=c, range=[lo, hi])
        lines.append(f"C(R) = {c:.6f}")
        lines.append(f"list all zeros with ordinate in (0, {hi:.6f}]")
        if R < 1e6:
            lines.append("note: this extension is proved only for R >= 1e6; below that it is advisory")
    else:
        if cfg.a is None:
            raise UsageError("window needs --a/--b, --R or --T")
        ca = recommend_cutoff(fam, cfg.a, **params)
        cb = recommend_cutoff(fam, cfg.b, **params)
        lo, hi = cfg.a - ca, cfg.b + cb
        payload.update(cutoff_a=ca, cutoff_b=cb, range=[lo, hi])
        lines.append(f"C(a) = {ca:.6f}  C(b) = {cb:.6f}")
        lines.append(f"list all zeros with ordinate in [{lo:.6f}, {hi:.6f}]")
    if lo is not None:
        m = _expected_count(cfg, lo, hi)
        if m:
            delta = 0.01 * h / (2 * m)
            payload.update(expected_zeros=m, max_delta=delta)
            lines.append(f"about {m} zeros; ordinates accurate to {delta:.3g} keep m (2/h) delta <= 0.01")
        else:
            lines.append(f"ordinate precision: need m (2/h) delta <= 0.01, i.e. delta <= {0.005 * h:.3g}/m")
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK


def cmd_check(cfg: RunConfig) -> int:
    if cfg.zeros_path is None or cfg.a is None or cfg.h is None:
        raise UsageError("check needs --zeros, --a, --b and --h")
    desc = load_descriptor(cfg.descriptor_path)
    zeros = ZeroList.load(cfg.zeros_path)
    w = TestWindow(cfg.a, cfg.b, cfg.h)
    kw = {}
    if cfg.osc_budget is not None:
        kw["osc_budget"] = cfg.osc_budget
    r = explicit_formula_check(desc, zeros, w, **kw)
    budget = cfg.budget if cfg.budget is not None else CHECK_BUDGET
    ok = r.residual.mag() <= budget
    payload = {
        "residual": {"lo": r.residual.lo, "hi": r.residual.hi},
        "zero_side": {"lo": r.zero_side.lo, "hi": r.zero_side.hi},
        "w_f": {"lo": r.w_f.lo, "hi": r.w_f.hi},
        "w_inf": {"lo": r.w_inf.lo, "hi": r.w_inf.hi},
        "M": r.M,
        "zeros_used": r.zeros_used,
        "budget": budget,
        "within_budget": ok,
    }
    text = "\n".join([
        f"zero side   {r.zero_side.mid:+.10f}  [{r.zero_side.lo:+.12f}, {r.zero_side.hi:+.12f}]",
        f"w_f         {r.w_f.mid:+.10f}  [{r.w_f.lo:+.12f}, {r.w_f.hi:+.12f}]  (M = {r.M})",
        f"w_inf       {r.w_inf.mid:+.10f}  [{r.w_inf.lo:+.12f}, {r.w_inf.hi:+.12f}]",
        f"residual    {r.residual.mid:+.3e}  [{r.residual.lo:+.3e}, {r.residual.hi:+.3e}]",
        f"|residual| <= {r.residual.mag():.3e}  budget {budget:g}: {'ok' if ok else 'exceeded'}",
    ])
    _emit(cfg, payload, text)
    return EXIT_OK if ok else EXIT_INCONCLUSIVE


def _primes_cutoff(desc: LFunctionDescriptor, h: float, cfg: RunConfig) -> int:
    if cfg.M is not None:
        return cfg.M
    if desc.family is Family.ZETA:
        return choose_cutoff(desc, h, cfg.budget or ZETA_PRIME_BUDGET)
    if desc.family is Family.ELLIPTIC:
        return 29
    if desc.family is Family.HECKE:
        return 20 * desc.degree
    if isinstance(desc.coeffs, TableCoefficients):
        return max(1, desc.coeffs.limit)
    return choose_cutoff(desc, h, cfg.budget or DEFAULT_BUDGET)


def cmd_primes(cfg: RunConfig) -> int:
    desc = load_descriptor(cfg.descriptor_path)
    h = cfg.h if cfg.h is not None else (2.5 if desc.family is Family.ZETA else math.pi)
    a, b = (cfg.a, cfg.b) if cfg.a is not None else (0.0, 100.0)
    w = TestWindow(a, b, h)
    M = _primes_cutoff(desc, h, cfg)
    rows = [r for r in w_f_terms(desc, w, M) if r[2] != 0]
    tail = prime_tail_bound(desc, h, M)
    payload = {
        "window": {"a": a, "b": b, "h": h},
        "M": M,
        "tail_bound": tail,
        "rows": [{"p": p, "m": m, "c": [c.real, c.imag], "term": t} for p, m, c, t in rows],
    }
    lines = [f"window [{a:g}, {b:g}]  h = {h:g}  cutoff p^m <= {M}", f"{'p':>8} {'m':>3} {'c(p^m)':>22} {'term':>20}"]
    for p, m, c, t in rows:
        cs = f"{c.real:.12g}" if c.imag == 0 else f"{c.real:.6g}{c.imag:+.6g}i"
        lines.append(f"{p:>8} {m:>3} {cs:>22} {t:>+20.12e}")
    lines.append(f"{len(rows)} nonzero terms, sum {math.fsum(r[3] for r in rows):+.12f}")
    lines.append(f"tail bound {tail:.6g}")
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK


COMMANDS = {"certify": cmd_certify, "window": cmd_window, "check": cmd_check, "primes": cmd_primes}


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="zerocert", description="Certify completeness of L-function zero lists.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, zeros=True):
        p.add_argument("--descriptor", dest="descriptor_path", default="zeta",
                       help="descriptor JSON file or zeta, gaussian, 11a1 (default zeta)")
        if zeros:
            p.add_argument("--zeros", dest="zeros_path", help="zero-list file")
        p.add_argument("--a", type=float)
        p.add_argument("--b", type=float)
        p.add_argument("--h", type=float)
        p.add_argument("--output", choices=("text", "json"), default="text")

    p = sub.add_parser("certify", help="run a completeness certificate")
    common(p)
    p.add_argument("--R", type=float, help="certify (0, R] for zeta")
    p.add_argument("--theorem", choices=THEOREMS, default="auto")
    p.add_argument("--budget", type=float, help="prime-sum tail budget (general form)")
    p.add_argument("--osc-budget", dest="osc_budget", type=float)
    p.add_argument("--M", type=int, help="override the prime-power cutoff")
    p.add_argument("--shortcut", action="store_true", help="count deep interior zeros as exactly 1")
    p.add_argument("--strict", action="store_true", help="reject ordinates closer than delta")

    p = sub.add_parser("window", help="recommend the list range and precision")
    common(p)
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--R", type=float)
    p.add_argument("--T", type=float, help="report C(T) at a single height")
    p.add_argument("--N", type=float, help="conductor (elliptic)")
    p.add_argument("--Q", type=float, help="analytic conductor (general)")
    p.add_argument("--count", type=int, help="expected number of zeros in the range")

    p = sub.add_parser("check", help="explicit-formula residual of a zero list")
    common(p)
    p.add_argument("--budget", type=float, help=f"accept |residual| up to this (default {CHECK_BUDGET:g})")
    p.add_argument("--osc-budget", dest="osc_budget", type=float)

    p = sub.add_parser("primes", help="dump the prime-power terms")
    common(p, zeros=False)
    p.add_argument("--M", type=int)
    p.add_argument("--budget", type=float, help="tail budget used to pick the cutoff")
    return ap


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    fields = RunConfig.__dataclass_fields__
    cfg = RunConfig(**{k: v for k, v in vars(ns).items() if k in fields})
    cfg.validate()
    return cfg


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    except ZerocertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[cfg.command](cfg)
    except (ZerocertError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
