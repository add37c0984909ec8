"""Command-line front end: bound queries, verification suites, constant
reproduction, and optimization runs.

Exit codes: 0 pass, 1 usage error, 2 precondition/infeasible, 3 missing data.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import time

from . import __version__
from .bounds import (
    BoundParameters,
    bound_line1,
    bound_main,
    bound_real_point,
    dedekind_residue_bound,
    family_cor10,
    zeta_cor9,
)
from .descriptors import EvaluationPoint, builtin, load_descriptor_config
from .errors import (
    EmptyFeasibleSet,
    NoCaseApplies,
    PreconditionFailed,
    SelboundsError,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_MISSING_DATA = 3

ZEROS_ENV = "SLB_ZEROS_PATH"


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on usage errors; the CLI contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    p = _Parser(prog="slbounds",
                description="Explicit conditional bounds for Selberg-class "
                            "L-functions, with verification suites.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", parents=[], help="evaluate a certified bound")
    b.add_argument("--lfun", default="zeta",
                   help="builtin spec, e.g. zeta | dirichlet(5,1) | "
                        "product(zeta,dirichlet(5,1))")
    b.add_argument("--config", help="descriptor JSON config file (overrides --lfun)")
    b.add_argument("--sigma", type=float, required=True)
    b.add_argument("--t", type=float)
    b.add_argument("--logtau", type=float)
    b.add_argument("--loglogtau", type=float)
    b.add_argument("--alpha", type=float, default=1.278)
    b.add_argument("--alpha1", type=float, default=1.3)
    b.add_argument("--alpha2", type=float, default=1.0)
    b.add_argument("--alpha3", type=float, default=1.0)
    b.add_argument("--t0", type=float)
    b.add_argument("--loglogtau0", type=float)
    b.add_argument("--case", default="auto",
                   choices=["auto", "case1", "case2", "case3", "line1",
                            "realpoint", "cor9", "cor10"])
    b.add_argument("--format", default="table", choices=["table", "json"])

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=["selberg-identity", "zero-sum",
                                     "cor9-empirical", "dominance", "majorant",
                                     "gw-residual"])
    v.add_argument("--zeros", default=os.environ.get(ZEROS_ENV))
    v.add_argument("--grid", default="default")
    v.add_argument("--tolerance", type=float)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--format", default="table", choices=["table", "json"])

    r = sub.add_parser("reproduce", help="recompute a pinned constant")
    r.add_argument("target", choices=["alpha0", "nu-cor9", "nu-cor10",
                                      "cor10-constants", "trigamma",
                                      "dedekind-example"])
    r.add_argument("--format", default="table", choices=["table", "json"])

    o = sub.add_parser("optimize", help="minimize a bound over free parameters")
    o.add_argument("--lfun", default="zeta")
    o.add_argument("--sigma", type=float)
    o.add_argument("--logtau", type=float)
    o.add_argument("--loglogtau", type=float)
    o.add_argument("--free", default="alpha",
                   help="comma list of {alpha,alpha1,nu1,nu2}, or 'nu'")
    o.add_argument("--variant", default="cor9", choices=["cor9", "cor10"])
    o.add_argument("--box", help="lo,hi[;lo,hi...] per free variable")
    o.add_argument("--t0", type=float)
    o.add_argument("--case", default="case1")

    s = sub.add_parser("stats", help="prime-coefficient statistics as CSV")
    s.add_argument("--lfun", default="zeta")
    s.add_argument("--limit", type=int, default=10 ** 6)
    s.add_argument("--grid", default="auto", help="comma list of x values")
    s.add_argument("--csv", help="output path (default stdout)")
    return p


def _resolve_descriptor(args):
    if getattr(args, "config", None):
        return load_descriptor_config(args.config)
    return builtin(args.lfun)


def _resolve_point(descriptor, args) -> EvaluationPoint:
    if args.loglogtau is not None:
        return EvaluationPoint.from_log_log_tau(descriptor, args.sigma, args.loglogtau)
    if args.logtau is not None:
        return EvaluationPoint.from_log_tau(descriptor, args.sigma, args.logtau)
    if args.t is not None:
        return EvaluationPoint.from_t(descriptor, args.sigma, args.t)
    raise SystemExit(EXIT_USAGE)


def _print_result(res, fmt):
    if fmt == "json":
        print(json.dumps(res.to_json_dict(), indent=2))
        return
    print(f"[{res.target}] case={res.case} value={res.value:.6g} "
          f"certified={res.certified}")
    for label, value in res.terms:
        print(f"  {label:<14s} {value:+.6g}")
    for text, ok in res.preconditions:
        print(f"  {'ok ' if ok else 'FAIL'} {text}")
    if res.assumptions:
        print(f"  assumes: {', '.join(res.assumptions)}")


def cmd_bound(args) -> int:
    try:
        descriptor = _resolve_descriptor(args)
    except FileNotFoundError as exc:
        print(f"missing config: {exc}", file=sys.stderr)
        return EXIT_MISSING_DATA
    params = BoundParameters(
        alpha=args.alpha, alpha1=args.alpha1, alpha2=args.alpha2,
        alpha3=args.alpha3, t0=args.t0, log_log_tau0=args.loglogtau0,
        case_hint=None if args.case == "auto" else args.case,
    )
    try:
        if args.case == "cor9":
            results = zeta_cor9(args.sigma, t=args.t,
                                log_t=args.logtau if args.t is None else None)
        elif args.case == "cor10":
            point = _resolve_point(descriptor, args)
            results = family_cor10(descriptor, point)
        elif args.case == "realpoint":
            results = bound_real_point(descriptor, params)
        elif args.case == "line1":
            results = bound_line1(descriptor, args.t, params)
        else:
            point = _resolve_point(descriptor, args)
            results = bound_main(descriptor, point, params)
    except (PreconditionFailed, NoCaseApplies, SelboundsError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    for res in results:
        _print_result(res, args.format)
    if any(not res.certified for res in results):
        for res in results:
            for cond in res.failed_preconditions():
                print(f"uncertified: {cond}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


def cmd_verify(args) -> int:
    from . import verification

    needs_zeros = args.suite in ("selberg-identity", "zero-sum", "gw-residual")
    zeros_path = args.zeros
    if needs_zeros:
        if not zeros_path or not os.path.exists(zeros_path):
            print(f"missing zeros file (--zeros or ${ZEROS_ENV})", file=sys.stderr)
            return EXIT_MISSING_DATA
    t0 = time.time()
    suite = verification.run_suite(args.suite, zeros_path=zeros_path,
                                   grid=args.grid, tolerance=args.tolerance,
                                   workers=args.workers)
    wall = time.time() - t0
    if args.format == "json":
        print(json.dumps({
            "command": f"verify {args.suite}",
            "pass": suite.passed,
            "wall_time": wall,
            "assertions": [{"name": n, "pass": ok, "detail": d}
                           for n, ok, d in suite.rows],
        }, indent=2))
    else:
        for name, ok, detail in suite.rows:
            print(f"{'ok ' if ok else 'FAIL'} {name}: {detail}")
        print(f"{'PASS' if suite.passed else 'FAIL'} ({len(suite.rows)} assertions, "
              f"{wall:.1f}s)")
    return EXIT_OK if suite.passed else EXIT_PRECONDITION


def cmd_reproduce(args) -> int:
    from .kernel import frak_a, frak_b, trigamma_quarter_bound
    from .optimize import optimize_nu, solve_alpha0

    rows = []
    if args.target == "alpha0":
        a0 = solve_alpha0()
        rows.append(("alpha0", a0, abs(a0 - 1.278) < 5e-4, "reference 1.278"))
    elif args.target == "nu-cor9":
        n1, n2, obj = optimize_nu("cor9")
        rows.append(("nu1", n1, abs(n1 - 3.378) < 1e-2, "reference 3.378"))
        rows.append(("nu2", n2, abs(n2 - 1.182) < 1e-2, "reference 1.182"))
    elif args.target == "nu-cor10":
        n1, n2, obj = optimize_nu("cor10")
        rows.append(("nu1", n1, abs(n1 - 3.049) < 1e-2, "reference 3.049"))
        rows.append(("nu2", n2, abs(n2 - 1.244) < 1e-2, "reference 1.244"))
    elif args.target == "cor10-constants":
        a = frak_a(1, 1.3, 2000.0)
        b = frak_b(1.0, 1.0, 1, 1.3, 2000.0, math.exp(13.0))
        rows.append(("frak_a", a, a <= 1.1, "ceiling 1.1"))
        rows.append(("frak_b", b, b < 0.0, "must be negative"))
    elif args.target == "trigamma":
        v = trigamma_quarter_bound()
        rows.append(("trigamma/4", v, v <= 4.3, "ceiling 4.3"))
    elif args.target == "dedekind-example":
        v = dedekind_residue_bound(2, 5.4e6)
        rows.append(("residue bound", v, abs(v - 24.10) < 0.05, "reference 24.10"))
    ok = all(r[2] for r in rows)
    if args.format == "json":
        print(json.dumps({"target": args.target, "pass": ok,
                          "rows": [{"name": n, "value": v, "pass": p, "note": d}
                                   for n, v, p, d in rows]}, indent=2))
    else:
        for name, value, passed, note in rows:
            print(f"{'ok ' if passed else 'FAIL'} {name} = {value:.6g} ({note})")
    return EXIT_OK if ok else EXIT_PRECONDITION


def cmd_optimize(args) -> int:
    from .optimize import minimize_bound, optimize_nu

    if args.free == "nu":
        n1, n2, obj = optimize_nu(args.variant)
        print(json.dumps({"variables": ["nu1", "nu2"], "optimum": [n1, n2],
                          "objective": obj, "variant": args.variant}, indent=2))
        return EXIT_OK
    try:
        descriptor = builtin(args.lfun)
        if args.sigma is None or (args.logtau is None and args.loglogtau is None):
            print("error: --sigma and one of --logtau/--loglogtau are required",
                  file=sys.stderr)
            return EXIT_USAGE
        if args.loglogtau is not None:
            point = EvaluationPoint.from_log_log_tau(descriptor, args.sigma,
                                                     args.loglogtau)
        else:
            point = EvaluationPoint.from_log_tau(descriptor, args.sigma, args.logtau)
        free = tuple(args.free.split(","))
        box = None
        if args.box:
            parts = [tuple(float(x) for x in chunk.split(","))
                     for chunk in args.box.split(";")]
            box = dict(zip(free, parts))
        params = BoundParameters(t0=args.t0, case_hint=args.case)
        report = minimize_bound(descriptor, point, free_vars=free, box=box,
                                params=params)
    except EmptyFeasibleSet as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except SelboundsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    print(json.dumps(report.to_json_dict(), indent=2))
    return EXIT_OK


def cmd_stats(args) -> int:
    from .arithmetic import build_tables, prime_coefficient_stats

    descriptor = builtin(args.lfun)
    tables = build_tables(descriptor, args.limit)
    if args.grid == "auto":
        grid = [10 ** k for k in range(2, int(math.log10(args.limit)) + 1)]
    else:
        grid = [float(x) for x in args.grid.split(",")]
    stats = prime_coefficient_stats(tables, grid)
    out = open(args.csv, "w", newline="") if args.csv else sys.stdout
    try:
        w = csv.writer(out)
        w.writerow(["x", "sum_abs_ap", "sum_sq_ap", "kappa_abs", "kappa_sq"])
        for x, sa, sq in zip(stats.grid, stats.sum_abs, stats.sum_sq):
            w.writerow([x, sa, sq, stats.kappa_abs, stats.kappa_sq])
    finally:
        if args.csv:
            out.close()
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    handlers = {
        "bound": cmd_bound,
        "verify": cmd_verify,
        "reproduce": cmd_reproduce,
        "optimize": cmd_optimize,
        "stats": cmd_stats,
    }
    try:
        return handlers[args.command](args)
    except SelboundsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
