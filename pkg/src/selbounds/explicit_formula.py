"""Numerical Selberg-moment and Guinand-Weil machinery: the bandlimited
majorant, truncated zero sums with tail control, and identity-residual checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DatasetTooShort,
    EmptyDataset,
    NearSingularity,
)


@dataclass(frozen=True)
class ZeroDataset:
    """Ordered positive zero ordinates; zeros are 1/2 +- i gamma under GRH."""

    ordinates: np.ndarray
    max_height: float
    source_tag: str = ""

    def __post_init__(self):
        if len(self.ordinates) == 0:
            raise EmptyDataset("dataset has no ordinates")

    def __len__(self) -> int:
        return len(self.ordinates)


@dataclass(frozen=True)
class MajorantSpec:
    """Parameters of the bandlimited majorant h: a = sigma - 1/2, Delta the
    exponential type over 2 pi (the natural choice is log log tau / pi)."""

    a: float
    delta: float

    def __post_init__(self):
        if not (0.0 < self.a <= 1.0):
            raise ValueError("a must lie in (0, 1]")
        if self.delta <= 0.0:
            raise ValueError("delta must be positive")


def f_a(a: float, x) -> float:
    """Poisson kernel a / (a^2 + x^2)."""
    return a / (a * a + np.square(x))


def majorant_h(spec: MajorantSpec, u):
    """Bandlimited majorant of f_a: entire of exponential type 2 pi Delta,
    h >= f_a on the real line, Fourier transform supported in [-Delta, Delta].
    """
    a, d = spec.a, spec.delta
    u = np.asarray(u) if np.ndim(u) else u
    num = math.exp(2 * math.pi * a * d) + math.exp(-2 * math.pi * a * d) \
        - 2.0 * np.cos(2 * math.pi * d * u)
    den = (math.exp(math.pi * a * d) - math.exp(-math.pi * a * d)) ** 2
    return f_a(a, u) * num / den


def majorant_h_complex(spec: MajorantSpec, z: complex) -> complex:
    """h at a complex argument (needed for the pole term of the exact formula)."""
    a, d = spec.a, spec.delta
    z = complex(z)
    denom = a * a + z * z
    if abs(denom) < 1e-12:
        raise NearSingularity("majorant evaluated at a removable singularity +-ia")
    num = math.exp(2 * math.pi * a * d) + math.exp(-2 * math.pi * a * d) \
        - 2.0 * np.cos(2 * math.pi * d * z)
    den = (math.exp(math.pi * a * d) - math.exp(-math.pi * a * d)) ** 2
    return (a / denom) * num / den


def h_hat0(spec: MajorantSpec) -> float:
    """Fourier transform of the majorant at 0: pi coth(pi a Delta)."""
    return math.pi / math.tanh(math.pi * spec.a * spec.delta)


def h_hat(spec: MajorantSpec, xi: float, abs_tol: float = 2e-7) -> float:
    """hat h(xi) = int h(u) e^{-2 pi i u xi} du by adaptive quadrature.

    h is even and real, so the transform is a cosine transform; it vanishes
    for |xi| > Delta. h = f_a * (C1 - C2 cos(2 pi Delta u)), so by linearity
    the integral splits into cosine transforms of the smooth kernel f_a at
    frequencies xi and Delta -+ xi, each handled by the Fourier-weight rule.
    """
    from scipy.integrate import quad
    from .errors import QuadratureFailure

    xi = abs(float(xi))
    if xi > spec.delta:
        return 0.0
    a, d = spec.a, spec.delta
    den = (math.exp(math.pi * a * d) - math.exp(-math.pi * a * d)) ** 2
    c1 = (math.exp(2 * math.pi * a * d) + math.exp(-2 * math.pi * a * d)) / den
    c2 = 2.0 / den

    def fa(u):
        return f_a(a, u)

    def cosine_transform(freq: float) -> float:
        omega = 2.0 * math.pi * freq
        try:
            if omega == 0.0:
                val, err = quad(fa, 0.0, np.inf, limit=400)
            else:
                val, err = quad(fa, 0.0, np.inf, weight="cos", wvar=omega,
                                limlst=400, limit=400)
        except Exception as exc:  # pragma: no cover
            raise QuadratureFailure(str(exc)) from exc
        if err > abs_tol:
            raise QuadratureFailure(f"transform quadrature error {err:.2e} too large")
        return val

    # cos(2 pi D u) cos(2 pi xi u) = (cos(2 pi (D+xi) u) + cos(2 pi (D-xi) u))/2
    val = c1 * cosine_transform(xi) \
        - 0.5 * c2 * (cosine_transform(d + xi) + cosine_transform(abs(d - xi)))
    return 2.0 * val


def zero_sum(dataset: ZeroDataset, a: float, t: float,
             safety: float = 2.0) -> tuple[float, float]:
    """Truncated sum of f_a(t - gamma) over all zeros (both signs of gamma)
    in the dataset, plus a heuristic density tail beyond max_height.

    The tail integrates the Riemann-von Mangoldt density log(u/2pi)/2pi against
    f_a(t -+ u) above the covered height and multiplies by the safety factor;
    it is reported separately and is not certified.
    """
    if len(dataset) == 0:
        raise EmptyDataset("no ordinates")
    g = dataset.ordinates
    truncated = float(np.sum(f_a(a, t - g)) + np.sum(f_a(a, t + g)))

    from scipy.integrate import quad

    height = dataset.max_height

    def density_weight(u):
        return (f_a(a, t - u) + f_a(a, t + u)) * math.log(u / (2 * math.pi)) / (2 * math.pi)

    # substitute u = height / w to map [height, inf) onto (0, 1]
    def transformed(w):
        u = height / w
        return density_weight(u) * height / (w * w)

    tail, _ = quad(transformed, 0.0, 1.0, limit=200)
    return truncated, safety * float(tail)


def selberg_rhs(descriptor, s: complex, x: float, y: float,
                dataset: ZeroDataset, tables,
                min_clearance: float = 2e4,
                lfunc_config=None) -> tuple[complex, float]:
    """Right-hand side of the truncated-Dirichlet-series decomposition of
    L'/L: weighted prime sum, pole term, trivial-zero double sum, and the
    sum over nontrivial zeros from the dataset. Returns (rhs, residual)
    where residual = |lhs - rhs| with the lhs evaluated independently.
    """

    s = complex(s)
    logy = math.log(y)
    xy = x * y
    if descriptor.pole_order > 0 and (abs(s - 1.0) < 0.05 or abs(s) < 0.05):
        raise NearSingularity("pole term blows up near s = 1 (or its reflection s = 0)")
    if dataset.max_height < abs(s.imag) + min_clearance:
        raise DatasetTooShort(
            f"dataset height {dataset.max_height:.0f} does not cover "
            f"|t| + {min_clearance:.0f}"
        )

    n_max = int(math.floor(xy + 1e-9))
    if n_max > tables.limit:
        from .errors import OutOfTableRange
        raise OutOfTableRange(f"xy = {xy:.1f} beyond table limit {tables.limit}")

    # weighted prime sum: full weight below x, log(xy/n)/log(y) taper above
    n = np.arange(2, n_max + 1, dtype=float)
    lam = np.asarray(tables.lambda_l[2: n_max + 1])
    weight = np.where(n <= x, 1.0, np.log(xy / n) / logy)
    npow = np.exp(-s * np.log(n))
    prime_sum = -np.sum(lam * weight * npow)

    # pole terms: the completed function has poles of order m_L at both s = 1
    # and (by the functional equation) s = 0, so the pole of L at 1 enters
    # through both reflection points
    pole = 0.0 + 0.0j
    if descriptor.pole_order > 0:
        pole = descriptor.pole_order * (
            (xy ** (1.0 - s) - x ** (1.0 - s)) / ((1.0 - s) ** 2 * logy)
            + (xy ** (-s) - x ** (-s)) / (s ** 2 * logy)
        )

    # trivial zeros: q_j(k) = (k + mu_j)/lambda_j, truncated geometrically
    trivial = 0.0 + 0.0j
    for lam_j, mu_j in descriptor.gamma_factors:
        k = 0
        while True:
            q = (k + mu_j) / lam_j
            term = (x ** (-q - s) - xy ** (-q - s)) / ((q + s) ** 2 * logy)
            trivial += term
            if abs(term) < 1e-16 and k > 2:
                break
            k += 1
            if k > 400:
                break

    # nontrivial zeros at 1/2 +- i gamma
    g = dataset.ordinates
    logx = math.log(x)
    logxy = math.log(xy)
    zsum = 0.0 + 0.0j
    for sign in (1.0, -1.0):
        rho_minus_s = (0.5 - s.real) + 1j * (sign * g - s.imag)
        zsum += np.sum(
            (np.exp(rho_minus_s * logx) - np.exp(rho_minus_s * logxy))
            / (rho_minus_s ** 2)
        )
    zsum /= logy

    rhs = prime_sum + pole + trivial + zsum
    lhs = _logderiv_oracle(descriptor, s, lfunc_config)
    return rhs, abs(lhs - rhs)


def _logderiv_oracle(descriptor, s: complex, config=None):
    """(L'/L)(s) from the independent evaluator, by descriptor structure."""
    from . import lfunc

    cfg = config or lfunc.DEFAULT_CONFIG
    total = 0.0 + 0.0j
    for kind, payload in descriptor.structure:
        if kind == "zeta":
            total += lfunc.zeta_logderiv(s, cfg)
        elif kind == "dirichlet":
            total += lfunc.dirichlet_logderiv(s, payload, cfg)
        else:  # pragma: no cover
            raise ValueError(f"no independent evaluator for component {kind!r}")
    return total


def guinand_weil_residual(descriptor, spec: MajorantSpec, t: float,
                          dataset: ZeroDataset, tables,
                          quad_tol: float = 1e-9) -> float:
    """Residual of the exact test-function formula for h(t - gamma):

        sum_gamma h(t-gamma) = pole side + conductor term + archimedean
        integral - prime side,

    with hat h by quadrature (compact support makes the prime sum finite:
    n <= e^{2 pi Delta}) and the digamma integral by quadrature.
    """
    from scipy.integrate import quad
    from scipy.special import digamma
    from .errors import OutOfTableRange

    g = dataset.ordinates
    lhs = float(np.sum(majorant_h(spec, t - g)) + np.sum(majorant_h(spec, t + g)))

    n_cap = int(math.floor(math.exp(2 * math.pi * spec.delta))) + 1
    if n_cap > tables.limit:
        raise OutOfTableRange(
            f"prime side needs coefficients to {n_cap}, table limit {tables.limit}"
        )

    # pole side
    rhs = 0.0
    if descriptor.pole_order > 0:
        rhs += 2.0 * descriptor.pole_order * majorant_h_complex(
            spec, complex(t, 0.5)).real

    # conductor term
    rhs += math.log(descriptor.q_factor) / math.pi * h_hat0(spec)

    # archimedean integral, one per gamma factor: fold to [0, inf) and split
    # h = f_a (c1 - c2 cos(2 pi Delta v)) so the oscillation goes through the
    # Fourier-weight rule while the smooth part uses plain adaptive quadrature
    a, d = spec.a, spec.delta
    den = (math.exp(math.pi * a * d) - math.exp(-math.pi * a * d)) ** 2
    c1 = (math.exp(2 * math.pi * a * d) + math.exp(-2 * math.pi * a * d)) / den
    c2 = 2.0 / den
    for lam_j, mu_j in descriptor.gamma_factors:
        def folded(v, lam_j=lam_j, mu_j=mu_j):
            gp = np.real(digamma(lam_j / 2.0 + mu_j + 1j * lam_j * (t - v)))
            gm = np.real(digamma(lam_j / 2.0 + mu_j + 1j * lam_j * (t + v)))
            return f_a(a, v) * (gp + gm)

        split = max(10.0 / a, abs(t) + 10.0)
        smooth = quad(folded, 0.0, split, limit=800,
                      points=[1.0 / a, min(abs(t) + 1.0, split)])[0]
        smooth += quad(folded, split, np.inf, limit=400)[0]
        osc = quad(folded, 0.0, np.inf, weight="cos", wvar=2.0 * math.pi * d,
                   limlst=400, limit=400)[0]
        rhs += lam_j / math.pi * (c1 * smooth - c2 * osc)

    # prime side: -(1/pi) sum_n n^{-1/2} Re{Lambda_L(n) n^{-it}} hat h(log n / 2 pi)
    lam = np.asarray(tables.lambda_l[: n_cap + 1])
    nz = np.nonzero(np.abs(lam[2:]) > 0)[0] + 2
    prime_side = 0.0
    for n in nz:
        xi = math.log(n) / (2 * math.pi)
        hh = h_hat(spec, xi)
        if hh == 0.0:
            continue
        prime_side += hh / math.sqrt(n) * float(
            np.real(lam[n] * np.exp(-1j * t * math.log(n))))
    rhs -= prime_side / math.pi

    return abs(lhs - rhs)
