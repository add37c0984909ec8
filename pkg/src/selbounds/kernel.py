"""Closed-form evaluation of every named constant-function appearing in the
bound statements. Everything is a stateless pure function of its arguments;
powers of log tau are always formed as exp(k * loglog tau) so that only
logarithmic coordinates are ever needed.
"""

from __future__ import annotations

import math

import numpy as np

from .constants import EULER_GAMMA
from .errors import (
    DomainViolation,
    NegativeArgument,
    QuadratureFailure,
    SingularAtUEqualsOne,
)


def log_tau_power(log_log_tau: float, exponent: float) -> float:
    """(log tau)^exponent evaluated from loglog tau; overflows to inf."""
    z = exponent * log_log_tau
    if z > 709.0:
        return math.inf
    return math.exp(z)


def coef_A(a: float, alpha: float, u: float, sigma: float) -> float:
    """a (2 sigma - 1)(1 - exp(-2 alpha (1-u)/(2 sigma - 1))) / (2 alpha (1-u)^2)."""
    if alpha <= 0:
        raise DomainViolation("alpha must be positive")
    if sigma <= 0.5:
        raise DomainViolation("sigma must exceed 1/2")
    if u == 1.0:
        raise SingularAtUEqualsOne("u = 1 is a pole of the coefficient")
    two_s = 2.0 * sigma - 1.0
    return a * two_s * (1.0 - math.exp(-2.0 * alpha * (1.0 - u) / two_s)) \
        / (2.0 * alpha * (1.0 - u) ** 2)


def eta(alpha: float, sigma: float, log_log_tau: float) -> float:
    """(1/2) (1 - alpha/((2 sigma - 1) loglog tau))^{-1}; always >= 1/2 on its domain."""
    denom = (2.0 * sigma - 1.0) * log_log_tau
    if denom <= alpha:
        raise DomainViolation(
            f"(2 sigma - 1) loglog tau = {denom:.6g} must exceed alpha = {alpha:.6g}"
        )
    return 0.5 / (1.0 - alpha / denom)


def a_hat(m: float, alpha: float, sigma: float) -> float:
    """Leading log-derivative coefficient: A(m, alpha, sigma, sigma) + (e^a + 1)/(2a)."""
    base = (math.exp(alpha) + 1.0) / (2.0 * alpha)
    if m == 0:
        return base
    return coef_A(m, alpha, sigma, sigma) + base


def a_tilde(m: float, alpha: float, sigma: float, log_log_tau: float) -> float:
    """Leading log-L coefficient: eta * A(m, alpha, sigma, sigma) + (e^a + 1)/(4a)."""
    base = (math.exp(alpha) + 1.0) / (4.0 * alpha)
    if m == 0:
        return base
    return eta(alpha, sigma, log_log_tau) * coef_A(m, alpha, sigma, sigma) + base


# --------------------------------------------------------------------------
# the exponential-ratio helpers
# --------------------------------------------------------------------------

def theta1(u: float) -> float:
    """(e^u - u - 1)/u^2, extended by its limit 1/2 at u = 0."""
    if u < 0:
        raise NegativeArgument("theta1 requires u >= 0")
    if u < 1e-5:
        return 0.5 + u / 6.0 + u * u / 24.0
    return (math.exp(u) - u - 1.0) / (u * u)


def theta2(u: float) -> float:
    """(e^u - 1)/u, extended by its limit 1 at u = 0."""
    if u < 0:
        raise NegativeArgument("theta2 requires u >= 0")
    if u < 1e-5:
        return 1.0 + u / 2.0 + u * u / 6.0
    return math.expm1(u) / u


def theta_funcs(u: float) -> tuple[float, float]:
    return theta1(u), theta2(u)


def big_M(alpha2: float, alpha3: float) -> float:
    return 2.0 * max(alpha2, alpha3)


def integral_theta1(nu1: float) -> float:
    """int_0^nu1 theta1(u) du: Taylor series on [0, 1/4], quadrature above."""
    if nu1 < 0:
        raise NegativeArgument("nu1 must be >= 0")
    split = min(nu1, 0.25)
    head = _integral_theta1_series(split)
    if nu1 <= 0.25:
        return head
    from scipy.integrate import quad
    val, err = quad(theta1, 0.25, nu1, limit=200, epsabs=1e-12, epsrel=1e-12)
    if err > 1e-9:
        raise QuadratureFailure(f"theta1 integral error estimate {err:.2e}")
    return head + val


def _integral_theta1_series(nu: float) -> float:
    """sum_k nu^{k+1} / ((k+1) (k+2)!), the exact antiderivative series."""
    total = 0.0
    power = nu
    fact = 2.0  # (k+2)! at k = 0
    k = 0
    while True:
        term = power / ((k + 1) * fact)
        total += term
        if term < 1e-17 * max(total, 1.0) and k > 3:
            return total
        k += 1
        power *= nu
        fact *= k + 2


# --------------------------------------------------------------------------
# generic error-term functions (diagnostics for the non-explicit statements)
# --------------------------------------------------------------------------

def cap_theta(theta: float, eps: float, sigma: float) -> float:
    """1/2 + max(theta, eps) - sigma."""
    return 0.5 + max(theta, eps) - sigma


def a1_term(a: float, k: float, eps: float, theta: float, sigma: float,
            log_log_tau: float) -> float:
    cap = cap_theta(theta, eps, sigma)
    acap = abs(cap)
    if acap == 0.0:
        minpart = log_log_tau ** (k + 1)
    else:
        minpart = min(acap ** (-(k + 1)), log_log_tau ** (k + 1))
    return a * (1.0 + acap ** k * log_tau_power(log_log_tau, 2.0 * cap)
                * log_log_tau ** k) * minpart


def a2_term(a: float, b: float, eps: float, theta: float, log_log_tau: float) -> float:
    first = a * log_tau_power(log_log_tau, 2.0 * eps)
    first *= log_log_tau if eps == 0.0 else min(1.0 / eps, log_log_tau)
    cap1 = abs(cap_theta(theta, eps, 1.0))
    second = b * (log_log_tau ** 3 if cap1 == 0.0 else min(cap1 ** -3, log_log_tau ** 3))
    return first + second


def a3_term(a: float, b: float, eps: float, theta: float, log_log_tau: float) -> float:
    first = a / (log_tau_power(log_log_tau, 1.0 - 2.0 * eps) * log_log_tau)
    cap32 = cap_theta(theta, eps, 1.5)
    second = b * log_log_tau * log_tau_power(log_log_tau, 2.0 * cap32)
    return first + second


def a4_term(sigma: float, log_log_tau: float, m3: float) -> float:
    if sigma >= 1.0:
        raise DomainViolation("a4_term requires sigma < 1")
    one_ms = 1.0 - sigma
    lll = math.log(log_log_tau)
    return m3 * (
        (1.0 + 1.0 / (one_ms * log_log_tau)) / one_ms
        + log_log_tau * lll / log_tau_power(log_log_tau, 2.0 - 2.0 * sigma)
    )


def a5_term(sigma: float, log_log_tau: float, m1: float, m3: float) -> float:
    if sigma >= 1.0:
        raise DomainViolation("a5_term requires sigma < 1")
    one_ms = 1.0 - sigma
    lll = math.log(log_log_tau)
    return m1 / (one_ms ** 2 * log_log_tau) + m3 * (
        1.0 / one_ms
        + (one_ms * lll + 1.0) * log_log_tau ** 2
        / log_tau_power(log_log_tau, 2.0 - 2.0 * sigma)
    )


def general_error_terms(selector: str, **kw) -> float:
    """Dispatch on {A1, A2, A3, A4, A5, Theta}; used only by the non-certified
    diagnostics of the asymptotic statements."""
    sel = selector.upper()
    if sel == "THETA":
        return cap_theta(kw["theta"], kw["eps"], kw["sigma"])
    if sel == "A1":
        return a1_term(kw["a"], kw["k"], kw["eps"], kw["theta"], kw["sigma"],
                       kw["log_log_tau"])
    if sel == "A2":
        return a2_term(kw["a"], kw["b"], kw["eps"], kw["theta"], kw["log_log_tau"])
    if sel == "A3":
        return a3_term(kw["a"], kw["b"], kw["eps"], kw["theta"], kw["log_log_tau"])
    if sel == "A4":
        return a4_term(kw["sigma"], kw["log_log_tau"], kw["m3"])
    if sel == "A5":
        return a5_term(kw["sigma"], kw["log_log_tau"], kw["m1"], kw["m3"])
    raise ValueError(f"unknown selector {selector!r}")


# --------------------------------------------------------------------------
# zero-sum constants
# --------------------------------------------------------------------------

QUAD_PAD = 1e-8  # added to quadrature-backed constants entering certified bounds


def frak_a(m_l: int, alpha1: float, t0: float) -> float:
    """(1 - e^{-2 a1})^{-1} (1 + 4 mL / ((t0^2 - 3/4)(1 - e^{-2 a1})))."""
    if alpha1 <= 0:
        raise DomainViolation("alpha1 must be positive")
    if t0 * t0 <= 0.75:
        raise DomainViolation("t0^2 must exceed 3/4")
    shrink = -math.expm1(-2.0 * alpha1)  # 1 - e^{-2 alpha1}
    return (1.0 + 4.0 * m_l / ((t0 * t0 - 0.75) * shrink)) / shrink


def _log_kernel_integral(c: float, offset: float = 1.0) -> float:
    """int_0^inf log(offset + y/c)/(1 + y^2) dy via the y = tan(theta) substitution."""
    from scipy.integrate import quad

    def integrand(th):
        return math.log(offset + math.tan(th) / c)

    val, err = quad(integrand, 0.0, math.pi / 2.0, limit=400,
                    epsabs=1e-12, epsrel=1e-12,
                    points=[math.pi / 2.0 - 1e-6])
    if err > 1e-10:
        raise QuadratureFailure(f"log-kernel integral error estimate {err:.2e}")
    return val


def _pole_penalty(m: float, log_tau0: float) -> float:
    """m(-1 - gamma + (4 loglog tau0/log tau0 + 2.24/(log tau0 - 1))/(1 - 1/log tau0))."""
    if log_tau0 <= 1.0:
        raise DomainViolation("log tau0 must exceed 1")
    num = 4.0 * math.log(log_tau0) / log_tau0 + 2.24 / (log_tau0 - 1.0)
    return m * (-1.0 - EULER_GAMMA + num / (1.0 - 1.0 / log_tau0))


def frak_b(d: float, m: float, m_l: int, alpha1: float, t0: float,
           log_tau0: float) -> float:
    """Constant term of the zero-sum bound: archimedean log-kernel integral,
    pole contribution, and the prime-side constant. Quadrature is padded by
    +1e-8 since this enters certified bounds."""
    if alpha1 <= 0:
        raise DomainViolation("alpha1 must be positive")
    if t0 * t0 <= 0.75:
        raise DomainViolation("t0^2 must exceed 3/4")
    coth = 1.0 / math.tanh(alpha1)
    arch = d / math.pi * coth * coth * _log_kernel_integral(2.0 * math.pi * t0)
    shrink = -math.expm1(-2.0 * alpha1)
    pole = 2.0 * m_l * (1.0 + math.exp(-4.0 * alpha1)) / ((t0 * t0 - 0.75) * shrink ** 2)
    return arch + pole + _pole_penalty(m, log_tau0) + QUAD_PAD


def frak_b3(d: float, m: float, log_q0: float, mu_plus: float) -> float:
    """Real-point variant: mu-shifted logarithm in the archimedean integral,
    no pole contribution, alpha1 = loglog(q0)/2."""
    if log_q0 <= 1.0:
        raise DomainViolation("log q0 must exceed 1")
    alpha1 = 0.5 * math.log(log_q0)
    coth = 1.0 / math.tanh(alpha1)
    from scipy.integrate import quad

    c0 = 1.0 / (4.0 * math.pi) + mu_plus / math.pi

    def integrand(th):
        return math.log(c0 + math.tan(th) / (2.0 * math.pi))

    val, err = quad(integrand, 0.0, math.pi / 2.0, limit=400,
                    epsabs=1e-12, epsrel=1e-12,
                    points=[math.pi / 2.0 - 1e-6])
    if err > 1e-10:
        raise QuadratureFailure(f"log-kernel integral error estimate {err:.2e}")
    return d / math.pi * coth * coth * val + _pole_penalty(m, log_q0) + QUAD_PAD


def trigamma_quarter_bound(terms: int = 200_000) -> float:
    """(1/4) * trigamma(1/4) by direct series sum with an integral tail;
    the value sits just below the 4.3 ceiling used in the bounds."""
    n = np.arange(terms, dtype=float)
    series = float(np.sum((n + 0.25) ** -2))
    base = terms + 0.25
    tail = 1.0 / base + 1.0 / (2.0 * base * base) + 1.0 / (6.0 * base ** 3)
    value = 0.25 * (series + tail)
    assert value <= 4.3, "trigamma quarter bound exceeded its certified ceiling"
    return value
