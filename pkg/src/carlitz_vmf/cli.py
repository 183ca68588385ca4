"""Command-line surface: compute / verify / bench.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 insufficient precision.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import serialize as ser
from .context import Context
from .errors import PrecisionError
from .forms import (gen_Delta, gen_E, gen_fs, gen_g, gen_goss_eis, gen_h,
                    para_eisenstein)
from .useries import USeries, scale_arg, trace_div
from .verify import SUITES, run_suite
from .vmf import eis1, eis_k, eis_q, hecke, legendre_fstar


def parse_prime(ctx: Context, text: str):
    """Parse a monic prime like 'theta', 'theta+1', 'theta^2+theta+1'."""
    text = text.strip().replace(" ", "").replace("θ", "theta")
    if text in ("theta", "t"):
        coeffs = {1: 1}
    else:
        coeffs = {}
        for part in text.replace("-", "+-").split("+"):
            if not part:
                continue
            neg = part.startswith("-")
            if neg:
                part = part[1:]
            if "theta" in part:
                head, _, tail = part.partition("theta")
                c = int(head.rstrip("*")) if head.rstrip("*") else 1
                e = int(tail[1:]) if tail.startswith("^") else 1
            else:
                c, e = int(part), 0
            coeffs[e] = coeffs.get(e, 0) + (-c if neg else c)
    deg = max(coeffs)
    out = tuple(ctx.base_field.from_int(coeffs.get(i, 0)) for i in range(deg + 1))
    if out[-1] != ctx.base_field.one:
        raise ValueError(f"{text!r} is not monic")
    return out


FORM_SELECTORS = ("g", "h", "Delta", "E", "goss_eis:m", "fs:s", "para:k",
                  "E1", "Ek:k", "fstar", "d2", "d3")


def compute_artifact(ctx: Context, selector: str, N: int):
    """Returns (kind, trunc, payload)."""
    name, _, arg = selector.partition(":")
    if name == "g":
        return "classical", N, ser.classical_to_json(gen_g(ctx, N))
    if name == "h":
        return "classical", N, ser.classical_to_json(gen_h(ctx, N))
    if name == "Delta":
        return "classical", N, ser.classical_to_json(gen_Delta(ctx, N))
    if name == "E":
        return "classical", N, ser.classical_to_json(gen_E(ctx, N))
    if name == "goss_eis":
        return "classical", N, ser.classical_to_json(gen_goss_eis(ctx, int(arg), N))
    if name == "fs":
        return "classical", N, ser.classical_to_json(gen_fs(ctx, int(arg), N))
    if name == "para":
        return "classical", N, ser.classical_to_json(para_eisenstein(ctx, int(arg), N))
    if name == "E1":
        return "vmform", N, ser.vmform_to_json(eis1(ctx, N))
    if name == "Ek":
        return "vmform", N, ser.vmform_to_json(eis_k(ctx, int(arg), N))
    if name in ("fstar", "d2", "d3"):
        fstar, d2, d3 = legendre_fstar(ctx, N)
        if name == "fstar":
            return "vmform", N, ser.vmform_to_json(fstar)
        return "series", N, ser.series_to_json(d2 if name == "d2" else d3)
    raise ValueError(f"unknown form selector {selector!r}; "
                     f"choose from {', '.join(FORM_SELECTORS)}")


def cache_dir_from(args) -> str:
    if getattr(args, "cache_dir", None):
        return args.cache_dir
    env = os.environ.get("CARLITZ_VMF_CACHE")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "carlitz-vmf")


def cmd_compute(args) -> int:
    try:
        ctx = Context(q=args.q) if args.q else Context(p=args.p, e=args.e)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    N = args.trunc
    selector = args.form
    vectorial = selector.split(":")[0] in ("E1", "Ek", "fstar", "d2", "d3")
    if vectorial and N < ctx.q + 2:
        print(f"error: vectorial jobs need trunc >= q+2 = {ctx.q + 2}",
              file=sys.stderr)
        return 2
    request = ser.canonical_dumps({
        "schema": ser.SCHEMA, "field": {"p": ctx.p, "e": ctx.e},
        "selector": selector, "trunc": N,
    })
    key = hashlib.sha256(request.encode()).hexdigest()
    cdir = cache_dir_from(args)
    cpath = os.path.join(cdir, key + ".json")
    if os.path.exists(cpath) and not args.no_cache:
        text = open(cpath).read()
    else:
        try:
            kind, trunc, payload = compute_artifact(ctx, selector, N)
        except PrecisionError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 3
        except (ValueError, KeyError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        text = ser.canonical_dumps(ser.envelope(ctx, kind, trunc, payload))
        if not args.no_cache:
            os.makedirs(cdir, exist_ok=True)
            tmp = cpath + ".tmp"
            with open(tmp, "w") as fh:
                fh.write(text)
            os.replace(tmp, cpath)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        print(text)
    return 0


def _run_one(item):
    name, q, N = item
    return name, run_suite(name, q) if N is None else run_suite(name, q, N)


def cmd_verify(args) -> int:
    try:
        ctx = Context(q=args.q) if args.q else Context(p=args.p, e=args.e)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    for n in names:
        if n not in SUITES:
            print(f"error: unknown suite {n!r}; choose from "
                  f"{', '.join(sorted(SUITES))} or 'all'", file=sys.stderr)
            return 2
    kw = {}
    if args.prime:
        try:
            kw["primes"] = [parse_prime(ctx, p) for p in args.prime.split(",")]
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    jobs = []
    for n in names:
        jobs.append((n, ctx.q, args.trunc))
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            results = dict(ex.map(_run_one, jobs))
        reports = [results[n] for n in names]
    else:
        reports = []
        for n in names:
            if n == "hecke-eigen" and "primes" in kw:
                reports.append(run_suite(n, ctx.q, args.trunc, **kw))
            else:
                reports.append(run_suite(n, ctx.q, args.trunc))
    failed = False
    out = []
    for rep in reports:
        status = ("PASS" if rep["ok"] else "FAIL") if rep["ok"] is not None \
            else "REPORT"
        print(f"[{status}] {rep['suite']} (q={rep['q']})")
        for c in rep["checks"]:
            mark = "ok " if c["ok"] else "FAIL"
            line = f"    {mark} {c['name']}"
            if c.get("detail") and (not c["ok"] or args.verbose):
                line += f"  -- {c['detail']}"
            print(line)
        if rep.get("verdict"):
            print(f"    verdict: {rep['verdict']}")
        if rep["ok"] is False:
            failed = True
        out.append(rep)
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(out, fh, indent=1, default=str, sort_keys=True)
    return 1 if failed else 0


def cmd_bench(args) -> int:
    grid = [(2, 128), (3, 81), (5, 50)]
    rows = []
    for q, N in grid:
        ctx = Context(q)
        t0 = time.time()
        e1 = eis1(ctx, N)
        t_build = time.time() - t0
        t0 = time.time()
        _ = e1.h1 * e1.h3
        t_mul = time.time() - t0
        t0 = time.time()
        _ = hecke(ctx, (ctx.base_field.zero, ctx.base_field.one), e1)
        t_hecke = time.time() - t0
        coeffs = len(e1.h1.c) + len(e1.h3.c)
        rows.append((q, N, t_build, t_mul, t_hecke, coeffs))
    print(f"{'q':>3} {'N':>5} {'build E1':>10} {'mult':>10} {'Hecke':>10} "
          f"{'coeffs':>7}")
    for q, N, tb, tm, th, nc in rows:
        print(f"{q:>3} {N:>5} {tb:>9.2f}s {tm:>9.2f}s {th:>9.2f}s {nc:>7}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="carlitz-vmf",
        description="Exact u-expansion engine for vectorial Drinfeld "
                    "modular forms with Tate-algebra values.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--q", type=int, help="field size q = p^e")
        p.add_argument("--p", type=int, help="characteristic (with --e)")
        p.add_argument("--e", type=int, default=1, help="extension degree")
        p.add_argument("--trunc", type=int, default=None,
                       help="series truncation order")

    pc = sub.add_parser("compute", help="compute and serialize one artifact")
    common(pc)
    pc.add_argument("--form", required=True,
                    help="selector: " + ", ".join(FORM_SELECTORS))
    pc.add_argument("--out", help="output path (default: stdout)")
    pc.add_argument("--cache-dir", help="cache directory "
                    "(or env CARLITZ_VMF_CACHE)")
    pc.add_argument("--no-cache", action="store_true")
    pc.set_defaults(fn=cmd_compute)

    pv = sub.add_parser("verify", help="run named verification suites")
    common(pv)
    pv.add_argument("--suite", default="all",
                    help="suite name or 'all': " + ", ".join(sorted(SUITES)))
    pv.add_argument("--prime", help="comma-separated primes for hecke-eigen, "
                    "e.g. 'theta,theta+1'")
    pv.add_argument("--jobs", type=int, default=1,
                    help="parallel suite evaluation")
    pv.add_argument("--report", help="write the JSON report here")
    pv.add_argument("--verbose", action="store_true")
    pv.set_defaults(fn=cmd_verify)

    pb = sub.add_parser("bench", help="timing table over a (q, N) grid")
    common(pb)
    pb.set_defaults(fn=cmd_bench)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.command in ("compute", "verify"):
        if not args.q and not args.p:
            print("error: give --q or --p/--e", file=sys.stderr)
            return 2
        if args.command == "compute" and args.trunc is None:
            print("error: compute needs --trunc", file=sys.stderr)
            return 2
    try:
        return args.fn(args)
    except PrecisionError as exc:
        print(f"error: insufficient precision: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
