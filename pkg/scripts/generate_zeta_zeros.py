#!/usr/bin/env python3
"""One-time generator for the test fixture data/zeros_zeta_100k.txt:
ordinates of the first 100000 nontrivial zeta zeros, one per line.

The library itself only ingests zero tables (computing zeros is out of its
scope); this dev script exists because the sandbox has no network access to
fetch a published table.

Method:
 1. bracket sign changes of the Riemann-Siegel Z (main sum + leading
    correction term) on a fine grid, vectorized;
 2. vectorized bisection on the same cheap Z;
 3. per-zero Newton polish against the package's Euler-Maclaurin zeta
    (exact remainder control) on the critical line;
 4. consistency checks: strict monotonicity, Backlund count
    |theta(g_i)/pi + 1 - i| <= 2.5 for every i, and spot agreement with
    mpmath.mp.zetazero at scattered indices.

Runtime: a few minutes. Usage: python scripts/generate_zeta_zeros.py [out]
"""

import math
import sys
import time

import numpy as np
from scipy.special import loggamma

sys.path.insert(0, __file__.rsplit("/scripts/", 1)[0] + "/src")

from selbounds.lfunc import _newton_zero, DEFAULT_CONFIG  # noqa: E402

TWO_PI = 2.0 * math.pi
COUNT = 100_000
T_LO = 10.0
T_HI = 74_940.0      # RvM predicts ~100025 zeros below this
STEP = 0.015


def theta(t):
    """Riemann-Siegel theta, exact via loggamma."""
    t = np.asarray(t, dtype=float)
    return np.imag(loggamma(0.25 + 0.5j * t)) - 0.5 * t * math.log(math.pi)


def rs_z(t):
    """Riemann-Siegel Z with the leading (C0) correction, vectorized."""
    t = np.asarray(t, dtype=float)
    a = np.sqrt(t / TWO_PI)
    nu = np.floor(a).astype(int)
    p = a - nu
    th = theta(t)
    n_max = int(nu.max())
    n = np.arange(1, n_max + 1, dtype=float)
    # main sum with mask n <= nu
    ang = th[:, None] - t[:, None] * np.log(n)[None, :]
    terms = np.cos(ang) / np.sqrt(n)[None, :]
    terms[n[None, :] > nu[:, None]] = 0.0
    main = 2.0 * terms.sum(axis=1)
    # C0 correction with removable singularities at p = 1/4, 3/4
    cosden = np.cos(TWO_PI * p)
    psi = np.where(
        np.abs(cosden) < 1e-8,
        0.5,
        np.cos(TWO_PI * (p * p - p - 1.0 / 16.0)) / np.where(np.abs(cosden) < 1e-8, 1.0, cosden),
    )
    corr = np.where(nu % 2 == 1, 1.0, -1.0) * (TWO_PI / t) ** 0.25 * psi
    return main + corr


def rs_z_chunked(t, chunk=40_000):
    out = np.empty_like(t)
    for i in range(0, len(t), chunk):
        out[i:i + chunk] = rs_z(t[i:i + chunk])
    return out


def main(out_path="data/zeros_zeta_100k.txt"):
    t0 = time.time()
    grid = np.arange(T_LO, T_HI, STEP)
    print(f"grid: {len(grid)} points, evaluating Z ...", flush=True)
    z = rs_z_chunked(grid)
    sign = np.sign(z)
    flips = np.nonzero(sign[:-1] * sign[1:] < 0)[0]
    print(f"{len(flips)} sign changes in {time.time()-t0:.1f}s", flush=True)

    lo = grid[flips].copy()
    hi = grid[flips + 1].copy()
    zlo = z[flips].copy()
    for it in range(44):
        mid = 0.5 * (lo + hi)
        zm = rs_z_chunked(mid)
        left = zlo * zm > 0
        lo = np.where(left, mid, lo)
        zlo = np.where(left, zm, zlo)
        hi = np.where(left, hi, mid)
    zeros = 0.5 * (lo + hi)
    print(f"bisection done at {time.time()-t0:.1f}s", flush=True)

    # Newton polish against Euler-Maclaurin zeta
    polished = np.empty_like(zeros)
    for i, g in enumerate(zeros):
        r = _newton_zero(float(g), DEFAULT_CONFIG, steps=3)
        # legitimate polish shifts scale like the RS truncation error t^{-3/4};
        # anything far beyond that fell toward a neighboring zero
        if abs(r - g) > max(0.004, 2.0 * float(g) ** -0.75):
            r = g
        polished[i] = r
        if (i + 1) % 20000 == 0:
            print(f"  polished {i+1} at {time.time()-t0:.1f}s", flush=True)
    polished.sort()

    # dedupe (spurious double brackets collapse to the same root)
    keep = np.concatenate(([True], np.diff(polished) > 1e-6))
    polished = polished[keep]
    print(f"{len(polished)} distinct zeros after polish", flush=True)

    if len(polished) < COUNT:
        raise SystemExit(f"only {len(polished)} zeros found; need {COUNT}")
    polished = polished[:COUNT]

    # Backlund count consistency: theta(g_i)/pi + 1 ~ i within |S(T)| < 2.5
    idx = np.arange(1, COUNT + 1)
    backlund = theta(polished) / math.pi + 1.0
    dev = np.abs(backlund - idx)
    print(f"max Backlund deviation: {dev.max():.3f}", flush=True)
    if dev.max() > 2.5:
        bad = int(np.argmax(dev))
        raise SystemExit(f"count inconsistency near zero #{bad+1} (t={polished[bad]:.6f})")

    # spot validation against mpmath
    import mpmath
    mpmath.mp.dps = 20
    worst = 0.0
    for k in (1, 2, 3, 10, 100, 1000, 10000, 50000, 99999, 100000):
        ref = float(mpmath.im(mpmath.zetazero(k)))
        err = abs(ref - polished[k - 1])
        worst = max(worst, err)
        print(f"  zero #{k}: ours {polished[k-1]:.10f} ref {ref:.10f} err {err:.2e}",
              flush=True)
    if worst > 5e-9:
        raise SystemExit("spot validation failed")

    with open(out_path, "w") as fh:
        for g in polished:
            fh.write(f"{g:.10f}\n")
    print(f"wrote {out_path} in {time.time()-t0:.1f}s total", flush=True)


if __name__ == "__main__":
    main(*sys.argv[1:])
