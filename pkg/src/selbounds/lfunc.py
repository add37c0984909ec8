"""High-precision evaluation of zeta, Dirichlet L, their log-derivatives,
and branch-tracked log zeta.

Everything here is Euler-Maclaurin based and works off the critical line
(sigma > 0). This module is the empirical oracle that the certified bounds
are verified against, so it deliberately shares no code with the bound
assembly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import bernoulli as _bernoulli_row
from scipy.special import loggamma

from .errors import (
    AccuracyNotReached,
    DomainViolation,
    NonPrimitiveCharacter,
    PoleAtOne,
    ZeroOnPath,
)

_CHUNK = 1_000_000

# log n cache shared by every evaluation (read-only after growth)
_logn_cache = np.zeros(0)


def _logn(n_max: int) -> np.ndarray:
    """log n for n = 0..n_max (index 0 unused), grown on demand."""
    global _logn_cache
    if _logn_cache.size < n_max + 1:
        size = max(n_max + 1, 2 * _logn_cache.size, 4096)
        arr = np.empty(size)
        arr[0] = 0.0
        np.log(np.arange(1, size, dtype=float), out=arr[1:])
        _logn_cache = arr
    return _logn_cache


@dataclass(frozen=True)
class EvalConfig:
    """Accuracy knobs for the Euler-Maclaurin evaluations.

    target_abs_error is the claimed absolute error; evaluation raises
    AccuracyNotReached when the standard remainder estimate exceeds it.
    bernoulli_depth is the number of B_{2k} correction terms (even, >= 2).
    em_factor scales the truncation point N = max(floor, em_factor*|t|).
    """

    target_abs_error: float = 1e-10
    max_terms: int = 60_000_000
    bernoulli_depth: int = 12
    em_factor: float = 1.0
    min_terms: int = 50

    def __post_init__(self):
        if self.target_abs_error <= 0:
            raise ValueError("target_abs_error must be positive")
        if self.bernoulli_depth < 2 or self.bernoulli_depth % 2 != 0:
            raise ValueError("bernoulli_depth must be even and >= 2")


DEFAULT_CONFIG = EvalConfig()


def _truncation(t: float, config: EvalConfig) -> int:
    n = max(config.min_terms, int(math.ceil(config.em_factor * abs(t))))
    if n > config.max_terms:
        raise AccuracyNotReached(
            f"Euler-Maclaurin truncation {n} exceeds max_terms={config.max_terms}"
        )
    return n


def _bernoulli_over_fact(depth: int) -> np.ndarray:
    """B_{2k}/(2k)! for k = 1..depth (plus one extra for the error estimate)."""
    row = _bernoulli_row(2 * depth + 2)
    out = np.empty(depth + 1)
    f = 1.0
    for k in range(1, depth + 2):
        f = math.factorial(2 * k)
        out[k - 1] = row[2 * k] / f
    return out


def _em_tail(s: complex, base: float, config: EvalConfig,
             deflate: bool = False) -> tuple[complex, complex, float]:
    """Euler-Maclaurin tail beyond the main sum: value, d/ds value, error estimate.

    base is N for zeta (sum over n <= N) or N + a for Hurwitz zeta. With
    deflate=True the polar part 1/(s-1) is subtracted, leaving the entire
    function (base^{1-s} - 1)/(s-1) + ... that is stable through s = 1.
    """
    logb = math.log(base)
    pow_b = np.exp(-s * logb)          # base^{-s}
    if deflate:
        t1, t1_d = _deflated_polar(s, logb)
    else:
        t1 = pow_b * base / (s - 1.0)  # base^{1-s}/(s-1)
        t1_d = t1 * (-logb - 1.0 / (s - 1.0))
    t2 = -0.5 * pow_b
    t2_d = 0.5 * logb * pow_b

    coeffs = _bernoulli_over_fact(config.bernoulli_depth)
    val = t1 + t2
    der = t1_d + t2_d

    rising = s                       # (s)_1
    harm = 1.0 / s                   # sum of 1/(s+j) over the factors
    scale = pow_b / base             # base^{-s-1}
    inv_b2 = 1.0 / (base * base)
    for k in range(1, config.bernoulli_depth + 1):
        term = coeffs[k - 1] * rising * scale
        val += term
        der += term * (harm - logb)
        rising *= (s + (2 * k - 1)) * (s + 2 * k)
        harm += 1.0 / (s + (2 * k - 1)) + 1.0 / (s + 2 * k)
        scale *= inv_b2
    # first omitted term, with the standard |s+2K+1|/(sigma+2K+1) factor
    k1 = config.bernoulli_depth + 1
    err = abs(coeffs[k1 - 1] * rising * scale)
    err *= abs(s + 2 * k1 - 1) / (s.real + 2 * k1 - 1)
    return val, der, err


def _deflated_polar(s: complex, logb: float) -> tuple[complex, complex]:
    """(base^{1-s} - 1)/(s-1) and its s-derivative, stable through s = 1."""
    w = (1.0 - s) * logb
    if abs(w) > 1e-4:
        val = np.expm1(w) / (s - 1.0)
        der = val * (-logb - 1.0 / (s - 1.0)) - logb / (s - 1.0)
        return complex(val), complex(der)
    # val = -L sum_{k>=0} w^k/(k+1)!,  d/ds val = L^2 sum_{k>=1} k w^{k-1}/(k+1)!
    val = 0.0 + 0.0j
    der = 0.0 + 0.0j
    wk = 1.0 + 0.0j
    for k in range(8):
        fact = math.factorial(k + 1)
        val += wk / fact
        if k >= 1:
            der += k * (wk / w if w != 0 else (1.0 if k == 1 else 0.0)) / fact
        wk *= w
    return -logb * val, logb * logb * der


def _zeta_and_deriv(s: complex, config: EvalConfig) -> tuple[complex, complex]:
    if abs(s - 1.0) < 1e-12:
        raise PoleAtOne("zeta has a pole at s = 1")
    if s.real <= 0.0:
        raise DomainViolation("Euler-Maclaurin region requires Re s > 0")
    n_terms = _truncation(s.imag, config)
    logs = _logn(n_terms)
    sigma, t = s.real, s.imag
    total = 0.0 + 0.0j
    total_d = 0.0 + 0.0j
    for a in range(1, n_terms + 1, _CHUNK):
        b = min(a + _CHUNK, n_terms + 1)
        l = logs[a:b]
        r = np.exp(-sigma * l)
        ang = t * l
        re = r * np.cos(ang)
        im = -r * np.sin(ang)
        total += complex(re.sum(), im.sum())
        total_d -= complex((l * re).sum(), (l * im).sum())
    tail, tail_d, err = _em_tail(s, float(n_terms), config)
    if err > config.target_abs_error:
        raise AccuracyNotReached(
            f"remainder estimate {err:.3e} exceeds target {config.target_abs_error:.3e}"
        )
    return total + tail, total_d + tail_d


def zeta_value(s: complex, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """zeta(s) for Re s > 0, s != 1."""
    return _zeta_and_deriv(complex(s), config)[0]


def zeta_deriv(s: complex, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """zeta'(s) by differentiated Euler-Maclaurin (not finite differences)."""
    return _zeta_and_deriv(complex(s), config)[1]


def zeta_logderiv(s: complex, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """(zeta'/zeta)(s)."""
    v, d = _zeta_and_deriv(complex(s), config)
    return d / v


def _hurwitz_and_deriv(s: complex, a: float, config: EvalConfig,
                       deflate: bool = False) -> tuple[complex, complex]:
    """Hurwitz zeta(s, a) and its s-derivative, 0 < a <= 1. With deflate=True
    the polar part 1/(s-1) is removed, which is what a character sum needs
    to stay finite through s = 1."""
    if abs(s - 1.0) < 1e-12 and not deflate:
        raise PoleAtOne("Hurwitz zeta has a pole at s = 1")
    if s.real <= 0.0:
        raise DomainViolation("Euler-Maclaurin region requires Re s > 0")
    n_terms = _truncation(s.imag, config)
    sigma, t = s.real, s.imag
    total = 0.0 + 0.0j
    total_d = 0.0 + 0.0j
    for start in range(0, n_terms + 1, _CHUNK):
        stop = min(start + _CHUNK, n_terms + 1)
        l = np.log(np.arange(start, stop, dtype=float) + a)
        r = np.exp(-sigma * l)
        ang = t * l
        re = r * np.cos(ang)
        im = -r * np.sin(ang)
        total += complex(re.sum(), im.sum())
        total_d -= complex((l * re).sum(), (l * im).sum())
    tail, tail_d, err = _em_tail(s, n_terms + a, config, deflate=deflate)
    if err > config.target_abs_error:
        raise AccuracyNotReached(
            f"remainder estimate {err:.3e} exceeds target {config.target_abs_error:.3e}"
        )
    return total + tail, total_d + tail_d


def hurwitz_zeta(s: complex, a: float, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    return _hurwitz_and_deriv(complex(s), a, config)[0]


def _dirichlet_pair(s, character, config) -> tuple[complex, complex]:
    """(L(s, chi), L'(s, chi)) via L = q^{-s} sum_a chi(a) zeta(s, a/q)."""
    if not character.is_primitive:
        raise NonPrimitiveCharacter(
            f"character mod {character.modulus} is not primitive"
        )
    s = complex(s)
    q = character.modulus
    logq = math.log(q)
    qs = np.exp(-s * logq)
    acc = 0.0 + 0.0j
    acc_d = 0.0 + 0.0j
    for a in range(1, q + 1):
        chi = character(a)
        if chi == 0:
            continue
        h, hd = _hurwitz_and_deriv(s, a / q, config, deflate=True)
        acc += chi * h
        acc_d += chi * hd
    value = qs * acc
    deriv = qs * acc_d - logq * value
    return value, deriv


def dirichlet_value(s, character, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """L(s, chi) for a primitive character chi, Re s > 0."""
    return _dirichlet_pair(s, character, config)[0]


def dirichlet_logderiv(s, character, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """(L'/L)(s, chi)."""
    v, d = _dirichlet_pair(s, character, config)
    return d / v


ZERO_ON_PATH_THRESHOLD = 1e-6


def log_zeta_tracked(
    sigma: float,
    t: float,
    config: EvalConfig = DEFAULT_CONFIG,
    zero_threshold: float = ZERO_ON_PATH_THRESHOLD,
) -> complex:
    """log zeta(sigma + it), branch fixed by continuation along the
    horizontal segment from 2 + it.

    At 2 + it the principal logarithm agrees with the Dirichlet-series
    branch (|log zeta(2+it)| < log zeta(2) < pi). Walking toward sigma the
    step is bisected whenever the argument would jump by pi/2 or more.
    """
    if t == 0.0:
        raise DomainViolation("log_zeta_tracked requires t != 0; use real-axis formulas")
    z = zeta_value(complex(2.0, t), config)
    w = complex(math.log(abs(z)), math.atan2(z.imag, z.real))

    cur = 2.0
    target = float(sigma)
    direction = -1.0 if target < cur else 1.0
    step = 0.25
    min_step = 1e-6
    two_pi = 2.0 * math.pi
    while (cur - target) * direction < 0 or abs(cur - target) > 1e-15:
        nxt = cur + direction * min(step, abs(target - cur))
        z = zeta_value(complex(nxt, t), config)
        az = abs(z)
        if az < zero_threshold:
            raise ZeroOnPath(f"|zeta| = {az:.2e} at sigma = {nxt:.6f} on the path")
        principal = complex(math.log(az), math.atan2(z.imag, z.real))
        # choose the branch closest to the previous point
        k = round((w.imag - principal.imag) / two_pi)
        cand = principal + complex(0.0, two_pi * k)
        if abs(cand.imag - w.imag) >= math.pi / 2:
            if min(step, abs(target - cur)) <= min_step:
                raise ZeroOnPath(
                    f"argument jump {abs(cand.imag - w.imag):.3f} persists at minimal "
                    f"step near sigma = {nxt:.6f}; zero suspected on path"
                )
            step /= 2.0
            continue
        w = cand
        cur = nxt
        step = min(0.25, step * 1.6)
        if abs(cur - target) < 1e-15:
            break
    return w


def functional_equation_factor(s: complex) -> complex:
    """chi(s) in zeta(s) = chi(s) zeta(1-s): 2^s pi^{s-1} sin(pi s/2) Gamma(1-s).

    Evaluated in log form through scipy's complex loggamma.
    """
    s = complex(s)
    log_chi = (
        s * math.log(2.0)
        + (s - 1.0) * math.log(math.pi)
        + np.log(np.sin(math.pi * s / 2.0) + 0j)
        + loggamma(1.0 - s)
    )
    return complex(np.exp(log_chi))


# --- zeros-file ingestion -----------------------------------------------------

def riemann_vonmangoldt_count(height: float) -> float:
    """Main term of the zero-counting function: (T/2pi) log(T/2pi e) + 7/8."""
    return height / (2.0 * math.pi) * math.log(height / (2.0 * math.pi * math.e)) + 7.0 / 8.0


def load_zeros(path, source_tag: str = "zeta", refine_first: int = 0,
               config: EvalConfig = DEFAULT_CONFIG):
    """Read a plain-text table of positive zero ordinates (one per line,
    strictly increasing, Odlyzko-table compatible) into a ZeroDataset.

    refine_first > 0 Newton-refines that many leading ordinates against
    zeta_value on the critical line as a cross-check; a shift above 1e-6
    fails the load.
    """
    from .explicit_formula import ZeroDataset
    from .errors import DensityImplausible, NotMonotone, ParseError

    values = []
    try:
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                values.append(float(line))
    except OSError as exc:
        raise ParseError(f"cannot read zeros file {path}: {exc}") from exc
    except ValueError as exc:
        raise ParseError(f"malformed ordinate in {path}: {exc}") from exc
    if not values:
        raise ParseError(f"zeros file {path} contains no ordinates")
    arr = np.asarray(values, dtype=float)
    if not np.all(np.diff(arr) > 0):
        raise NotMonotone("ordinates are not strictly increasing")
    if arr[0] <= 0:
        raise NotMonotone("ordinates must be positive")
    expected = riemann_vonmangoldt_count(float(arr[-1]))
    if expected > 20 and abs(len(arr) - expected) > 0.05 * expected:
        raise DensityImplausible(
            f"{len(arr)} ordinates up to {arr[-1]:.2f}, Riemann-von Mangoldt "
            f"main term predicts {expected:.1f}"
        )
    if refine_first:
        for i in range(min(refine_first, len(arr))):
            g = arr[i]
            refined = _newton_zero(g, config)
            if abs(refined - g) > 1e-6:
                raise DensityImplausible(
                    f"ordinate {g} moved by {abs(refined - g):.2e} under Newton "
                    "refinement; table suspect"
                )
            arr[i] = refined
    arr.flags.writeable = False
    return ZeroDataset(ordinates=arr, max_height=float(arr[-1]), source_tag=source_tag)


def write_eval_csv(rows, path):
    """Dump evaluation results as CSV with columns sigma, t, re, im, abs;
    rows are (sigma, t, value) triples."""
    import csv

    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["sigma", "t", "re", "im", "abs"])
        for sigma, t, value in rows:
            value = complex(value)
            w.writerow([sigma, t, value.real, value.imag, abs(value)])


def hardy_z(t: float, config: EvalConfig = DEFAULT_CONFIG) -> float:
    """Hardy's Z(t) = exp(i theta(t)) zeta(1/2 + it), real for real t."""
    theta = float(np.imag(loggamma(0.25 + 0.5j * t))) - 0.5 * t * math.log(math.pi)
    z = zeta_value(complex(0.5, t), config)
    return float((np.exp(1j * theta) * z).real)


def _newton_zero(t0: float, config: EvalConfig, steps: int = 4) -> float:
    """Newton refinement of a critical-line zero ordinate near t0."""
    t = float(t0)
    for _ in range(steps):
        theta = float(np.imag(loggamma(0.25 + 0.5j * t))) - 0.5 * t * math.log(math.pi)
        theta_d = 0.5 * float(np.real(_digamma_quarter(t))) - 0.5 * math.log(math.pi)
        v, d = _zeta_and_deriv(complex(0.5, t), config)
        rot = np.exp(1j * theta)
        z = rot * v
        # dZ/dt = Re[i e^{i theta} (theta' zeta + zeta')]
        zp = (1j * rot * (theta_d * v + d)).real
        if zp == 0:
            break
        t -= float(z.real) / float(zp)
    return t


def _digamma_quarter(t: float) -> complex:
    from scipy.special import digamma
    return digamma(0.25 + 0.5j * t)
