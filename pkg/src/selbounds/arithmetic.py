"""Exact sieve-based arithmetic: the von Mangoldt function, its generalized
absolute sums, the truncated prime sums feeding the moment-formula checks,
and coefficient statistics on primes.

Tables are immutable after build; every query is reentrant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import exp1

from .errors import LimitTooLarge, MissingEulerOrder, OutOfTableRange, XBelowTwo, YBelowTwo

DEFAULT_SIEVE_LIMIT = 10_000_000
MAX_SIEVE_LIMIT = 200_000_000


def primes_up_to(n: int) -> np.ndarray:
    """Primes <= n by a plain boolean sieve."""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(math.isqrt(n)) + 1):
        if sieve[p]:
            sieve[p * p:: p] = False
    return np.nonzero(sieve)[0].astype(np.int64)


def von_mangoldt_sieve(n: int) -> np.ndarray:
    """Lambda(n) for n <= limit: log p at prime powers p^k, 0 elsewhere."""
    lam = np.zeros(n + 1)
    primes = primes_up_to(n)
    lam[primes] = np.log(primes.astype(float))
    for p in primes[primes <= math.isqrt(n)]:
        logp = math.log(p)
        pk = int(p) * int(p)
        while pk <= n:
            lam[pk] = logp
            pk *= int(p)
    return lam


@dataclass(frozen=True)
class ArithmeticTables:
    """Sieved coefficient tables for one descriptor up to n = limit."""

    limit: int
    von_mangoldt: np.ndarray      # Lambda(n), float
    lambda_l: np.ndarray          # Lambda_L(n), complex (or float for zeta)
    lambda_l_abs: np.ndarray      # |Lambda_L(n)|
    primes: np.ndarray
    ap_abs: np.ndarray            # |a(p)| aligned with primes

    def __len__(self) -> int:
        return self.limit


def build_tables(descriptor, limit: int = DEFAULT_SIEVE_LIMIT) -> ArithmeticTables:
    """Sieve Lambda and fill Lambda_L / |a(p)| from the descriptor's provider."""
    if limit < 2:
        raise LimitTooLarge(f"limit {limit} must be >= 2")
    if limit > MAX_SIEVE_LIMIT:
        raise LimitTooLarge(f"limit {limit} exceeds the configured budget {MAX_SIEVE_LIMIT}")
    if descriptor.coefficient_provider is None:
        raise MissingEulerOrder(
            "descriptor has no coefficient provider; cannot build tables"
        )
    lam = von_mangoldt_sieve(limit)
    lam_l = descriptor.coefficient_provider.fill(lam)
    primes = primes_up_to(limit)
    ap = descriptor.coefficient_provider.ap(primes)
    for arr in (lam, primes):
        arr.flags.writeable = False
    lam_l = np.asarray(lam_l)
    lam_abs = np.abs(lam_l) if np.iscomplexobj(lam_l) else np.abs(lam_l)
    ap_abs = np.abs(ap)
    for arr in (lam_l, lam_abs, ap_abs):
        arr.flags.writeable = False
    return ArithmeticTables(
        limit=int(limit),
        von_mangoldt=lam,
        lambda_l=lam_l,
        lambda_l_abs=lam_abs,
        primes=primes,
        ap_abs=ap_abs,
    )


def psi(tables: ArithmeticTables, x: float) -> float:
    """Chebyshev psi(x) = sum of Lambda(n) over n <= x."""
    _check_range(tables, x)
    n = int(math.floor(x + 1e-12))
    return float(tables.von_mangoldt[: n + 1].sum())


def psi_tilde(tables: ArithmeticTables, x: float) -> float:
    """sum of |Lambda_L(n)| over n <= x; equals psi(x) for zeta."""
    _check_range(tables, x)
    n = int(math.floor(x + 1e-12))
    return float(tables.lambda_l_abs[: n + 1].sum())


def _check_range(tables: ArithmeticTables, x: float):
    if not (2.0 <= x <= tables.limit):
        raise OutOfTableRange(f"x = {x} outside [2, {tables.limit}]")


def select_xy(sigma: float, alpha: float, log_tau: float) -> tuple[float, float]:
    """The substitution y = exp(alpha/(sigma - 1/2)), x = (log tau)^2 / y.

    Requires sigma in (1/2, 3/2] and alpha >= log 2; signals when tau is too
    small for the pair (sigma, alpha) to give x, y >= 2. The real-point
    variant is the same formula with log(conductor) in place of log tau.
    """
    if not (0.5 < sigma <= 1.5):
        raise ValueError(f"sigma = {sigma} outside (1/2, 3/2]")
    if alpha < math.log(2.0) - 1e-12:
        raise ValueError(f"alpha = {alpha} below log 2")
    y = math.exp(alpha / (sigma - 0.5))
    if y < 2.0:
        raise YBelowTwo(f"y = {y:.6g} < 2")
    x = log_tau * log_tau / y
    if x < 2.0:
        raise XBelowTwo(f"x = {x:.6g} < 2 (tau too small for sigma={sigma}, alpha={alpha})")
    return x, y


def s_exact(tables: ArithmeticTables, sigma: float, x: float, y: float) -> float:
    """The truncated weighted prime sum

        S(sigma) = sum_{n<=x} |Lambda_L(n)| n^-sigma
                 + (1/log y) sum_{x<n<=xy} |Lambda_L(n)| log(xy/n) n^-sigma,

    exact to floating precision over the sieve tables.
    """
    if x < 2.0 or y < 2.0:
        raise ValueError("x and y must both be >= 2")
    xy = x * y
    if xy > tables.limit:
        raise OutOfTableRange(f"xy = {xy:.1f} beyond table limit {tables.limit}")
    hi = int(math.floor(xy + 1e-9))
    n = np.arange(2, hi + 1, dtype=float)
    lam = tables.lambda_l_abs[2: hi + 1]
    npow = n ** (-sigma)
    inner = lam * npow
    head = inner[n <= x].sum()
    mask = n > x
    tail = (inner[mask] * np.log(xy / n[mask])).sum() / math.log(y)
    return float(head + tail)


@dataclass(frozen=True)
class SHatResult:
    """Exact log-weighted prime sum plus the tail-certified remainder sum."""

    s_hat: float
    ex_partial: float
    ex_tail_bound: float

    @property
    def ex_upper(self) -> float:
        return self.ex_partial + self.ex_tail_bound


def s_hat_and_ex_exact(tables: ArithmeticTables, sigma: float, x: float,
                       y: float, cutoff: int | None = None) -> SHatResult:
    """The log-weighted analogue of s_exact together with the remainder

        E_x = sum_{n>x} |Lambda_L(n)| / (n^{3/2} log n),

    summed exactly to `cutoff` and closed with the analytic upper estimate
    m * int_cutoff^infty du/(u^{3/2} log u) (an upper estimate, reported
    separately from the exact partial sum).
    """
    if x < 2.0 or y < 2.0:
        raise ValueError("x and y must both be >= 2")
    xy = x * y
    if xy > tables.limit:
        raise OutOfTableRange(f"xy = {xy:.1f} beyond table limit {tables.limit}")
    cutoff = tables.limit if cutoff is None else int(cutoff)
    if cutoff > tables.limit:
        raise OutOfTableRange(f"cutoff {cutoff} beyond table limit {tables.limit}")

    hi = int(math.floor(xy + 1e-9))
    n = np.arange(2, hi + 1, dtype=float)
    lam = tables.lambda_l_abs[2: hi + 1]
    logn = np.log(n)
    inner = lam * n ** (-sigma) / logn
    head = inner[n <= x].sum()
    mask = n > x
    tail = (inner[mask] * np.log(xy / n[mask])).sum() / math.log(y)
    s_hat = float(head + tail)

    lo = int(math.floor(x + 1e-9)) + 1
    m = np.arange(lo, cutoff + 1, dtype=float)
    lam_m = tables.lambda_l_abs[lo: cutoff + 1]
    ex_partial = float((lam_m / (m ** 1.5 * np.log(m))).sum())
    # analytic tail: |Lambda_L| <= m_euler * log n, so the remainder is at most
    # m_euler * int_cutoff^inf u^{-3/2}/log u du = m_euler * E_1(log(cutoff)/2)
    m_euler = _euler_order_of(tables)
    ex_tail = float(m_euler * exp1(math.log(cutoff) / 2.0))
    return SHatResult(s_hat=s_hat, ex_partial=ex_partial, ex_tail_bound=ex_tail)


def _euler_order_of(tables: ArithmeticTables) -> float:
    """Effective polynomial order from the table itself: sup |Lambda_L|/Lambda."""
    lam = tables.von_mangoldt
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(lam > 0, tables.lambda_l_abs / np.where(lam > 0, lam, 1.0), 0.0)
    return float(np.ceil(ratio.max() - 1e-9)) if ratio.size else 1.0


def logarithmic_integral(x: float) -> float:
    """li(x), principal value, via li(x) = Ei(log x)."""
    from scipy.special import expi
    return float(expi(math.log(x)))


@dataclass(frozen=True)
class CoefficientStats:
    """Diagnostic prime-coefficient statistics along an x grid."""

    grid: np.ndarray
    sum_abs: np.ndarray       # sum_{p<=x} |a(p)|
    sum_sq: np.ndarray        # sum_{p<=x} |a(p)|^2
    kappa_abs: float          # least-squares slope of sum_abs against li(x)
    kappa_sq: float           # same for sum_sq


def prime_coefficient_stats(tables: ArithmeticTables, grid) -> CoefficientStats:
    """Empirical sums of |a(p)| and |a(p)|^2 up to each grid point, with a
    least-squares growth constant fitted against li(x) (the x/log x main term
    is a poor regressor at desk scale). Purely diagnostic.
    """
    grid = np.asarray(sorted(grid), dtype=float)
    if grid[-1] > tables.limit:
        raise OutOfTableRange(f"grid maximum {grid[-1]} beyond limit {tables.limit}")
    cum_abs = np.cumsum(tables.ap_abs)
    cum_sq = np.cumsum(tables.ap_abs ** 2)
    idx = np.searchsorted(tables.primes, grid, side="right") - 1
    sum_abs = np.where(idx >= 0, cum_abs[np.maximum(idx, 0)], 0.0)
    sum_sq = np.where(idx >= 0, cum_sq[np.maximum(idx, 0)], 0.0)
    li = np.array([logarithmic_integral(x) if x > 2 else 0.0 for x in grid])
    denom = float(np.dot(li, li))
    kappa_abs = float(np.dot(sum_abs, li) / denom) if denom > 0 else 0.0
    kappa_sq = float(np.dot(sum_sq, li) / denom) if denom > 0 else 0.0
    return CoefficientStats(grid=grid, sum_abs=sum_abs, sum_sq=sum_sq,
                            kappa_abs=kappa_abs, kappa_sq=kappa_sq)
