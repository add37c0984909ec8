"""Named verification suites behind `slbounds verify`: each runs a battery of
assertions tying the certified bounds to independent evaluation, and returns
a deterministic per-assertion table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import lfunc
from .arithmetic import build_tables
from .bounds import BoundParameters, bound_line1, bound_main, family_cor10, zeta_cor9
from .descriptors import EvaluationPoint, zeta_descriptor
from .explicit_formula import (
    MajorantSpec,
    ZeroDataset,
    f_a,
    guinand_weil_residual,
    h_hat,
    h_hat0,
    majorant_h,
    selberg_rhs,
    zero_sum,
)

IDENTITY_ZERO_SUM = 1.0 + 0.5772156649015328606 / 2.0 - 0.5 * math.log(4.0 * math.pi)


@dataclass
class SuiteResult:
    suite: str
    rows: list          # (name, passed, detail)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.rows)


def run_suite(name: str, zeros_path=None, grid="default", tolerance=None,
              workers: int = 1) -> SuiteResult:
    if name == "zero-sum":
        return suite_zero_sum(zeros_path, tolerance or 1e-4)
    if name == "selberg-identity":
        return suite_selberg_identity(zeros_path, tolerance or 1e-3)
    if name == "majorant":
        return suite_majorant()
    if name == "gw-residual":
        return suite_gw_residual(zeros_path, tolerance or 1e-2)
    if name == "dominance":
        return suite_dominance(grid)
    if name == "cor9-empirical":
        return suite_cor9_empirical(workers=workers)
    raise ValueError(f"unknown suite {name!r}")


def suite_zero_sum(zeros_path, tol: float) -> SuiteResult:
    ds = lfunc.load_zeros(zeros_path)
    trunc, tail = zero_sum(ds, 0.5, 0.0)
    rows = [
        ("truncated sum vs classical identity",
         abs(trunc - IDENTITY_ZERO_SUM) < tol,
         f"truncated {trunc:.7f}, identity {IDENTITY_ZERO_SUM:.7f}, "
         f"tail estimate {tail:.2e}"),
        ("tail estimate covers the gap",
         0.0 < IDENTITY_ZERO_SUM - trunc <= tail,
         f"gap {IDENTITY_ZERO_SUM - trunc:.2e} <= tail {tail:.2e}"),
    ]
    return SuiteResult("zero-sum", rows)


SELBERG_POINTS = (
    (1.2, 100.0), (1.35, 300.0), (1.5, 1000.0), (1.65, 2500.0), (1.8, 5000.0),
    (2.0, 10000.0), (1.25, 20000.0), (1.45, 30000.0), (1.7, 40000.0),
    (1.9, 49000.0),
)


def suite_selberg_identity(zeros_path, tol: float) -> SuiteResult:
    ds = lfunc.load_zeros(zeros_path)
    z = zeta_descriptor()
    tables = build_tables(z, 1000)
    rows = []
    worst = 0.0
    for sig, t in SELBERG_POINTS:
        _, resid = selberg_rhs(z, complex(sig, t), 10.0, 10.0, ds, tables,
                               min_clearance=2e4)
        worst = max(worst, resid)
        rows.append((f"residual at s = {sig} + {t:g}i", resid < tol,
                     f"{resid:.3e} < {tol:g}"))
    # halving under doubled truncation height, on the low-t subset
    low = [(s, t) for s, t in SELBERG_POINTS if t <= 1000.0]
    maxima = []
    for height in (2000.0, 4000.0):
        g = ds.ordinates[ds.ordinates <= height]
        sub = ZeroDataset(ordinates=g, max_height=float(g[-1]), source_tag="zeta")
        maxima.append(max(
            selberg_rhs(z, complex(s, t), 10.0, 10.0, sub, tables,
                        min_clearance=500)[1]
            for s, t in low))
    rows.append(("residual halves when height doubles (2000 -> 4000)",
                 maxima[1] <= 0.5 * maxima[0],
                 f"max {maxima[0]:.3e} -> {maxima[1]:.3e}"))
    return SuiteResult("selberg-identity", rows)


def suite_majorant(pairs=10, samples=10_000, seed=20260810) -> SuiteResult:
    rng = np.random.default_rng(seed)
    rows = []
    for i in range(pairs):
        a = float(rng.uniform(0.05, 1.0))
        delta = float(rng.uniform(0.3, 3.0))
        spec = MajorantSpec(a=a, delta=delta)
        u = rng.uniform(-100.0, 100.0, size=samples)
        gap = majorant_h(spec, u) - f_a(a, u)
        rows.append((f"h >= f_a for (a, Delta) = ({a:.3f}, {delta:.3f})",
                     bool(gap.min() >= -1e-14), f"min gap {gap.min():.2e}"))
        err = abs(h_hat(spec, 0.0) - h_hat0(spec))
        rows.append((f"transform at 0 matches pi coth(pi a Delta) ({i})",
                     err < 1e-8, f"difference {err:.2e}"))
    return SuiteResult("majorant", rows)


def suite_gw_residual(zeros_path, tol: float) -> SuiteResult:
    ds = lfunc.load_zeros(zeros_path)
    z = zeta_descriptor()
    tables = build_tables(z, 10 ** 6)
    rows = []
    for a, delta, t in ((0.25, 1.0, 100.0), (0.5, 0.8, 500.0), (0.4, 1.2, 2000.0)):
        resid = guinand_weil_residual(z, MajorantSpec(a=a, delta=delta), t, ds, tables)
        rows.append((f"exact-formula residual (a={a}, Delta={delta}, t={t:g})",
                     resid < tol, f"{resid:.3e} < {tol:g}"))
    return SuiteResult("gw-residual", rows)


def suite_dominance(grid="default") -> SuiteResult:
    """Re-proves the simplification step of the family corollary numerically:
    the sharp three-case bound is dominated by the simplified displays on the
    corollary's parameter grid, and likewise on the 1-line."""
    n = 20 if grid == "default" else int(grid.split("x")[0])
    z = zeta_descriptor()
    sigmas = np.linspace(0.6, 0.999, n)
    llts = np.linspace(13.0, 14.0, n)
    params = BoundParameters(alpha=1.278, alpha1=1.3, log_log_tau0=13.0,
                             t0=2001.0, case_hint="case1")
    bad = []
    worst_margin = math.inf
    for llt in llts:
        for sig in sigmas:
            point = EvaluationPoint.from_log_log_tau(z, float(sig), float(llt))
            sharp_d, sharp_l = bound_main(z, point, params)
            simple_d, simple_l, _, _ = family_cor10(z, point)
            if not (sharp_d.certified and simple_d.certified):
                bad.append((sig, llt, "uncertified"))
                continue
            md = simple_d.value - sharp_d.value
            ml = simple_l.value - sharp_l.value
            worst_margin = min(worst_margin, md / simple_d.value, ml / simple_l.value)
            if md < 0 or ml < 0:
                bad.append((float(sig), float(llt), f"md={md:.3g}, ml={ml:.3g}"))
    rows = [(f"three-case bound <= simplified family bound on {n}x{n} grid",
             not bad, f"worst relative margin {worst_margin:.4f}"
             + (f"; failures: {bad[:3]}" if bad else ""))]

    bad1 = []
    worst1 = math.inf
    for llt in llts:
        point = EvaluationPoint.from_log_log_tau(z, 1.0, float(llt))
        _, _, simple_d1, simple_l1 = family_cor10(z, point)
        sharp_d1, _ = bound_line1(z, None, BoundParameters(
            alpha=2.186, log_log_tau0=13.0, t0=2001.0), point=point)
        _, sharp_l1 = bound_line1(z, None, BoundParameters(
            alpha=1.278, log_log_tau0=13.0, t0=2001.0), point=point)
        md = simple_d1.value - sharp_d1.value
        ml = simple_l1.value - sharp_l1.value
        worst1 = min(worst1, md / simple_d1.value, ml / simple_l1.value)
        if md < 0 or ml < 0:
            bad1.append((float(llt), f"md={md:.3g}, ml={ml:.3g}"))
    rows.append((f"1-line bound <= simplified 1-line family bound ({n} points)",
                 not bad1, f"worst relative margin {worst1:.4f}"
                 + (f"; failures: {bad1[:3]}" if bad1 else "")))
    return SuiteResult("dominance", rows)


def cor9_sample_points(per_t: int = 10):
    """Deterministic admissible sample: per t in {1e6, 2e6, 1e7}, sigma spread
    over [1/2 + 1/loglog t, 0.999]."""
    points = []
    for t in (1e6, 2e6, 1e7):
        lo = 0.5 + 1.0 / math.log(math.log(t))
        for sig in np.linspace(lo + 1e-6, 0.999, per_t):
            points.append((float(sig), float(t)))
    return points


def _cor9_check_one(args):
    sig, t = args
    bound_d, bound_l = zeta_cor9(sig, t=t, strict=True)
    actual_d = abs(lfunc.zeta_logderiv(complex(sig, t)))
    actual_l = abs(lfunc.log_zeta_tracked(sig, t))
    return sig, t, actual_d, bound_d.value, actual_l, bound_l.value


def suite_cor9_empirical(per_t: int = 10, workers: int = 1) -> SuiteResult:
    points = cor9_sample_points(per_t)
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_cor9_check_one, points))
    else:
        outcomes = [_cor9_check_one(p) for p in points]
    outcomes.sort(key=lambda r: (r[1], r[0]))
    rows = []
    for sig, t, ad, bd, al, bl in outcomes:
        rows.append((f"|zeta'/zeta| <= bound at sigma={sig:.4f}, t={t:g}",
                     ad <= bd, f"{ad:.4f} <= {bd:.4f}"))
        rows.append((f"|log zeta| <= bound at sigma={sig:.4f}, t={t:g}",
                     al <= bl, f"{al:.4f} <= {bl:.4f}"))
    return SuiteResult("cor9-empirical", rows)
