"""Assembly of the fully explicit conditional bounds for |L'/L| and |log L|,
with per-term breakdowns and precondition certification.

Conventions used throughout:
  * everything is evaluated in logarithmic coordinates; powers of log tau are
    exp(k * loglog tau), so tau up to exp(exp(700)) stays representable;
  * "certified" means every checkable numeric range condition holds; the
    unverifiable analytic hypotheses (GRH, RH, strong lambda availability)
    are recorded in the result's assumptions list instead;
  * a bound value is always the exact sum of its labeled terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import EULER_GAMMA, LOG2
from .descriptors import EvaluationPoint, LFunctionDescriptor
from .errors import (
    EulerOrderMismatch,
    MissingEulerOrder,
    NoCaseApplies,
    NotEntire,
    ConductorTooSmall,
    PreconditionFailed,
    StrongLambdaRequired,
)
from .kernel import (
    a_hat,
    a_tilde,
    big_M,
    coef_A,
    eta,
    frak_a,
    frak_b,
    frak_b3,
    integral_theta1,
    log_tau_power,
    theta1,
    theta2,
)
from . import kernel

SQRT60 = math.sqrt(60.0)


# --------------------------------------------------------------------------
# parameter / result containers
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundParameters:
    """Free parameters the explicit bounds are conditioned on. Defaults are
    the optimized choices used by the simplified corollaries."""

    alpha: float = 1.278
    alpha1: float = 1.3
    alpha2: float = 1.0
    alpha3: float = 1.0
    nu1: float = 3.378
    nu2: float = 1.182
    log_log_tau0: float | None = None     # defaults to the point's loglog tau
    t0: float | None = None               # defaults to max(2 mu+, 1)
    case_hint: str | None = None

    def __post_init__(self):
        if self.alpha < LOG2 - 1e-12:
            raise ValueError("alpha must be >= log 2")
        if not (1.0 < self.nu2 < 2.0):
            raise ValueError("nu2 must lie in (1, 2)")
        if self.nu1 <= 0:
            raise ValueError("nu1 must be positive")

    def resolved_t0(self, descriptor: LFunctionDescriptor) -> float:
        if self.t0 is not None:
            return self.t0
        return max(2.0 * descriptor.mu_plus, 1.0)

    def resolved_llt0(self, point: EvaluationPoint) -> float:
        return self.log_log_tau0 if self.log_log_tau0 is not None else point.log_log_tau


DEFAULT_PARAMETERS = BoundParameters()


@dataclass(frozen=True)
class BoundResult:
    """A certified upper-bound value with its full term breakdown."""

    target: str                      # "logDeriv" | "logL"
    case: str
    value: float
    terms: tuple                     # ((label, value), ...)
    preconditions: tuple             # ((text, passed), ...)
    assumptions: tuple = ()          # analytic hypotheses the bound rides on

    def __post_init__(self):
        total = math.fsum(v for _, v in self.terms)
        scale = max(abs(self.value), 1.0)
        if not (math.isinf(total) and math.isinf(self.value)):
            if abs(total - self.value) > 1e-12 * scale:
                raise ValueError("value does not match the sum of its terms")

    @property
    def certified(self) -> bool:
        return all(ok for _, ok in self.preconditions)

    def failed_preconditions(self) -> list[str]:
        return [text for text, ok in self.preconditions if not ok]

    def to_json_dict(self) -> dict:
        return {
            "target": self.target,
            "case": self.case,
            "value": self.value,
            "certified": self.certified,
            "terms": [{"label": k, "value": v} for k, v in self.terms],
            "preconditions": [{"text": t, "pass": ok} for t, ok in self.preconditions],
            "assumptions": list(self.assumptions),
        }


class _Checks:
    """Collects (description, passed) pairs; raises on failure when strict."""

    def __init__(self, strict: bool):
        self.strict = strict
        self.items: list[tuple[str, bool]] = []

    def require(self, ok: bool, text: str):
        ok = bool(ok)
        self.items.append((text, ok))
        if self.strict and not ok:
            raise PreconditionFailed(text)

    def as_tuple(self) -> tuple:
        return tuple(self.items)


def _require_euler(descriptor: LFunctionDescriptor) -> int:
    if descriptor.euler_order is None:
        raise MissingEulerOrder("bound requires a polynomial Euler product order")
    return descriptor.euler_order


def _require_strong_lambda(descriptor: LFunctionDescriptor):
    if not descriptor.strong_lambda:
        raise StrongLambdaRequired("bound is stated under the strong lambda hypothesis")


def _q_over_tau(descriptor: LFunctionDescriptor, log_tau: float) -> float:
    """(conductor / tau)^{2/degree} = exp((2/d)(log q - log tau))."""
    z = 2.0 / descriptor.degree * (math.log(descriptor.conductor) - log_tau)
    return math.exp(z) if z < 709.0 else math.inf


def _t_condition(checks: _Checks, point: EvaluationPoint, t0: float, mu_plus: float):
    checks.require(t0 >= max(2.0 * mu_plus, 1.0),
                   f"t0 = {t0:.6g} >= max(2 mu+, 1) = {max(2.0 * mu_plus, 1.0):.6g}")
    if point.log_abs_t is None:
        checks.require(False, "point carries no |t| information for the t0 condition")
    else:
        checks.require(point.log_abs_t >= math.log(t0) - 1e-12,
                       f"|t| >= t0 = {t0:.6g}")


# --------------------------------------------------------------------------
# lemma-level pieces
# --------------------------------------------------------------------------

def prime_term_bound(descriptor: LFunctionDescriptor, sigma: float, log_tau: float,
                     params: BoundParameters = DEFAULT_PARAMETERS,
                     which: str = "S_case1or2", strict: bool = True) -> float:
    """Upper bound for the truncated prime sums, by selector:

    S_case1or2 / S_near1 / S_at1 for the plain weighted sum, Shat_case1 /
    Shat_case2 / Shat_at1 for the log-weighted one, and Ex for the remainder
    sum. All are the stated right-hand sides times the Euler order.
    """
    m = _require_euler(descriptor)
    alpha = params.alpha
    llt = math.log(log_tau)
    P = lambda k: log_tau_power(llt, k)

    if which == "S_case1or2":
        _check_sigma_not_one(sigma, strict)
        return m * (
            coef_A(1.0, alpha, sigma, sigma) * P(2 - 2 * sigma)
            - sigma * 2.0 ** (1 - sigma) / (1 - sigma)
            + _s_poly_const(sigma)
            + _s_decay(sigma, alpha, llt)
        )
    if which == "S_near1":
        llt0 = params.log_log_tau0 if params.log_log_tau0 is not None else llt
        M = big_M(params.alpha2, params.alpha3)
        return m * (
            2.0 * llt + 1.0 - sigma * LOG2
            + 4.0 * theta1(M) * abs(1 - sigma) * llt ** 2
            + LOG2 ** 2 * theta1(M * LOG2 / (2.0 * llt0)) * sigma * abs(1 - sigma)
            + _s_poly_const(sigma)
            + _s_decay(sigma, alpha, llt)
        )
    if which == "S_at1":
        if strict and math.exp(llt) < math.exp(alpha) * SQRT60 - 1e-9:
            raise PreconditionFailed("log tau >= e^alpha sqrt(60) needed so that x >= 60")
        return m * (
            2.0 * llt - EULER_GAMMA - alpha
            + (math.expm1(alpha)) * (2 * alpha + 1) * llt ** 2 / (2 * math.pi * alpha * P(1))
            + 0.24 * math.exp(alpha) / P(1)
        )
    if which == "Shat_case1":
        _check_sigma_not_one(sigma, strict)
        et = eta(alpha, sigma, llt)
        return m * (
            et * (coef_A(1.0, alpha, sigma, sigma) * P(2 - 2 * sigma) / llt
                  - 1.0 / ((1 - sigma) * llt))
            + (params.nu2 * et) ** 2
            * math.exp(-2 * alpha * (1 - sigma) / (2 * sigma - 1))
            * P(2 - 2 * sigma) / ((1 - sigma) ** 2 * llt ** 2)
            + math.exp(-2 * alpha * (1 - sigma) / ((2 * sigma - 1) * params.nu2))
            / params.nu1 ** 2 * P(2 * (1 - sigma) / params.nu2)
            + math.log(2.0 * llt)
            + (1.0 - sigma * 2.0 ** (1 - sigma)) / ((1 - sigma) * LOG2)
            - math.log(LOG2)
            + integral_theta1(params.nu1)
            + _shat_poly_const(sigma)
            + math.expm1(alpha) * llt / (4 * math.pi * alpha * P(2 * sigma - 1))
        )
    if which == "Shat_case2":
        _check_sigma_not_one(sigma, strict)
        llt0 = params.log_log_tau0 if params.log_log_tau0 is not None else llt
        M = big_M(params.alpha2, params.alpha3)
        et = eta(alpha, sigma, llt)
        return m * (
            math.log(2.0 * llt)
            + 2.0 * (2.0 * et * theta1(M) + theta1(2 * params.alpha2)) * abs(1 - sigma) * llt
            + 1.0 / LOG2 - math.log(LOG2) - sigma
            + LOG2 * theta1(M * LOG2 / (2.0 * llt0)) * sigma * abs(1 - sigma)
            + 2.0 * et
            + _shat_poly_const(sigma)
            + math.expm1(alpha) * llt / (4 * math.pi * alpha * P(2 * sigma - 1))
        )
    if which == "Shat_at1":
        if strict and llt <= alpha:
            raise PreconditionFailed("loglog tau must exceed alpha at sigma = 1")
        return m * (
            math.log(2.0 * llt) + EULER_GAMMA
            + (1.0 - llt / alpha) * math.log1p(-alpha / llt) - 1.0
            + ((1.0 + math.exp(alpha) * (4 * alpha - 1)) * llt
               + math.exp(alpha) * (7 * alpha - 4 * (alpha ** 2 + 1)) + 4.0)
            / (4 * math.pi * alpha * P(1))
        )
    if which == "Ex":
        et = eta(alpha, sigma, llt)
        two_s = 2 * sigma - 1
        return m * (
            2.0 * et * math.exp(alpha / two_s) / (P(1) * llt)
            + 5.0 * math.exp(2 * alpha / two_s) * (1.0 + llt / et) / (16 * math.pi * P(2))
        )
    raise ValueError(f"unknown selector {which!r}")


def _check_sigma_not_one(sigma: float, strict: bool):
    if strict and sigma == 1.0:
        raise PreconditionFailed("sigma = 1 needs the dedicated sigma=1 selector")


def _s_poly_const(sigma: float) -> float:
    """sigma 2^{3/2-sigma}(4 + (2 + (2 sigma - 1) log 2)^2) / (8 pi (2 sigma - 1)^3)."""
    two_s = 2 * sigma - 1
    return sigma * 2.0 ** (1.5 - sigma) * (4.0 + (2.0 + two_s * LOG2) ** 2) \
        / (8 * math.pi * two_s ** 3)


def _shat_poly_const(sigma: float) -> float:
    """2^{3/2-sigma}(-1 + sigma(4 - log 2) + sigma^2 log 4) / (8 pi (2 sigma - 1)^2)."""
    two_s = 2 * sigma - 1
    return 2.0 ** (1.5 - sigma) * (-1.0 + sigma * (4.0 - LOG2) + sigma * sigma * 2 * LOG2) \
        / (8 * math.pi * two_s ** 2)


def _s_decay(sigma: float, alpha: float, llt: float) -> float:
    """((2(alpha+1) sigma - 1)(e^alpha - 1)/(2 pi alpha)) llt^2/((2s-1)(log tau)^{2s-1})."""
    two_s = 2 * sigma - 1
    return (2 * (alpha + 1) * sigma - 1) * math.expm1(alpha) / (2 * math.pi * alpha) \
        * llt ** 2 / (two_s * log_tau_power(llt, two_s))


def zero_sum_bound(descriptor: LFunctionDescriptor, sigma: float,
                   t: float | None, log_tau: float, alpha1: float,
                   t0: float, log_log_tau0: float, strict: bool = True) -> float:
    """Certified upper bound for the Poisson-kernel sum over nontrivial zeros:

        log tau / 2 + a_frak (log tau)^{2-2 sigma} + 2 m loglog tau + b_frak.
    """
    _require_strong_lambda(descriptor)
    m = _require_euler(descriptor)
    llt = math.log(log_tau)
    checks = _Checks(strict)
    checks.require(0.5 + alpha1 / llt <= sigma <= 1.5,
                   f"sigma in [1/2 + alpha1/loglog tau, 3/2] (= [{0.5 + alpha1 / llt:.4f}, 1.5])")
    log_tau0 = math.exp(log_log_tau0)
    checks.require(log_tau >= log_tau0 - 1e-9, "tau >= tau0")
    checks.require(log_tau0 >= max(SQRT60, math.exp(alpha1)) - 1e-12,
                   "tau0 >= max(e^sqrt(60), exp(e^alpha1))")
    t0_floor = max(2.0 * descriptor.mu_plus, 1.0)
    checks.require(t0 >= t0_floor, f"t0 >= max(2 mu+, 1) = {t0_floor:.6g}")
    if t is not None:
        checks.require(abs(t) >= t0, "|t| >= t0")
    a = frak_a(descriptor.pole_order, alpha1, t0)
    b = frak_b(descriptor.degree, m, descriptor.pole_order, alpha1, t0, log_tau0)
    return log_tau / 2.0 + a * log_tau_power(llt, 2 - 2 * sigma) + 2.0 * m * llt + b


def r_terms(descriptor: LFunctionDescriptor, sigma: float, log_tau: float,
            alpha: float, integrated: bool = False, alpha1: float | None = None,
            log_tau0: float | None = None) -> tuple[float, float]:
    """The gamma-factor term R1 (via the trigamma quarter constant, under
    strong lambda) and the pole term R2; integrated=True returns the
    integral-from-sigma-to-3/2 forms used by the log-L assemblies.
    """
    _require_strong_lambda(descriptor)
    llt = math.log(log_tau)
    d = descriptor.degree
    m_l = descriptor.pole_order
    two_s = 2 * sigma - 1
    qt = _q_over_tau(descriptor, log_tau)
    trig = kernel.trigamma_quarter_bound()
    if not integrated:
        r1 = (sigma - 0.5) * (1.0 + math.exp(2 * alpha * sigma / two_s)) \
            / (alpha * log_tau_power(llt, 2 * sigma)) * d * trig
        r2 = m_l * (sigma - 0.5) * (1.0 + math.exp(2 * alpha * (sigma - 1) / two_s)) \
            / alpha * qt * log_tau_power(llt, 2 - 2 * sigma)
        return r1, r2
    if sigma == 1.0:
        r1 = 4.3 * d * (math.exp(2 * alpha) + 1.0) \
            / (2 * alpha * log_tau_power(llt, 2.0) * llt)
    else:
        if alpha1 is None or log_tau0 is None:
            raise ValueError("integrated R1 away from sigma=1 needs alpha1 and log_tau0")
        llt0 = math.log(log_tau0)
        r1 = 4.3 * d * alpha1 * (1.0 + math.exp(-alpha / (2 * alpha1) * llt0)) \
            / (alpha * (2 * alpha1 - alpha)
               * log_tau_power(llt, (2.0 - alpha / alpha1) * sigma) * llt)
    r2 = m_l * (1.0 + math.exp(alpha / 2.0)) / (2 * alpha) * qt \
        * log_tau_power(llt, 2 - 2 * sigma) / llt
    return r1, r2


# --------------------------------------------------------------------------
# Theorem-level assemblies
# --------------------------------------------------------------------------

ASSUMPTIONS_EXPLICIT = ("GRH for L", "RH for zeta", "strong lambda-conjecture")


def bound_main(descriptor: LFunctionDescriptor, point: EvaluationPoint,
               params: BoundParameters = DEFAULT_PARAMETERS,
               strict: bool = False) -> tuple[BoundResult, BoundResult]:
    """The three-case explicit bound pair (|L'/L|, |log L|).

    The case is taken from params.case_hint when present, otherwise from the
    sigma ranges. Checkable range conditions land in the result's
    preconditions (raised instead when strict=True).
    """
    case = params.case_hint
    if case in (None, "auto"):
        case = _select_case(point, params)
    if case == "case1":
        return _case1(descriptor, point, params, strict)
    if case == "case2":
        return _case2(descriptor, point, params, strict)
    if case == "case3":
        return _case3(descriptor, point, params, strict)
    if case == "line1":
        return bound_line1(descriptor, None, params, point=point, strict=strict)
    raise NoCaseApplies(f"no assembly for case {case!r}")


def _select_case(point: EvaluationPoint, params: BoundParameters) -> str:
    s, llt = point.sigma, point.log_log_tau
    if s >= 1.0 + params.alpha3 / llt:
        return "case3"
    if 0.5 + params.alpha1 / llt <= s < 1.0:
        return "case1"
    if 1.0 - params.alpha2 / llt <= s <= 1.0 + params.alpha3 / llt:
        return "case2"
    raise NoCaseApplies(
        f"sigma = {s} lies in no admissible range at loglog tau = {llt:.3f}"
    )


def _case1(descriptor, point, params, strict):
    m = _require_euler(descriptor)
    _require_strong_lambda(descriptor)
    s = point.sigma
    llt = point.log_log_tau
    alpha, alpha1 = params.alpha, params.alpha1
    llt0 = params.resolved_llt0(point)
    t0 = params.resolved_t0(descriptor)
    log_tau0 = math.exp(llt0)

    checks = _Checks(strict)
    checks.require(2 * alpha1 > alpha >= LOG2 - 1e-12, "2 alpha1 > alpha >= log 2")
    checks.require(0.5 + alpha1 / llt <= s < 1.0,
                   f"sigma in [1/2 + alpha1/loglog tau, 1) = [{0.5 + alpha1 / llt:.4f}, 1)")
    checks.require(point.log_tau >= log_tau0 - 1e-9, "tau >= tau0")
    floor = max(SQRT60, 2.0 ** (1.0 / (2.0 - alpha / alpha1)), math.exp(2 * alpha1))
    checks.require(log_tau0 > floor,
                   "tau0 > max(e^sqrt(60), exp(2^{1/(2-alpha/alpha1)}), exp(e^{2 alpha1}))")
    _t_condition(checks, point, t0, descriptor.mu_plus)

    P = lambda k: log_tau_power(llt, k)
    d = descriptor.degree
    m_l = descriptor.pole_order
    a = frak_a(m_l, alpha1, t0)
    b = frak_b(d, m, m_l, alpha1, t0, log_tau0)
    ea = math.exp(alpha)
    qt = _q_over_tau(descriptor, point.log_tau)
    two_s = 2 * s - 1

    terms_d = (
        ("leading", a_hat(m, alpha, s) * P(2 - 2 * s)),
        ("secondary", -m * s * 2.0 ** (1 - s) / (1 - s)),
        ("zero_sum_a", a * (ea + 1) / alpha * P(3 - 4 * s)),
        ("prime_const", m * _s_poly_const(s)),
        ("prime_decay", m * _s_decay(s, alpha, llt)),
        ("zero_sum_llt", 2 * m * (ea + 1) / alpha * llt / P(two_s)),
        ("zero_sum_b", b * (ea + 1) / (alpha * P(two_s))),
        ("gamma_factor", 4.3 * d * (s - 0.5) * (1.0 + math.exp(-alpha / alpha1 * s * llt0))
         / (alpha * P((2.0 - alpha / alpha1) * s))),
        ("pole", m_l / alpha * qt * P(2 - 2 * s)),
    )

    et = eta(alpha, s, llt)
    terms_l = (
        ("leading", a_tilde(m, alpha, s, llt) * P(2 - 2 * s) / llt),
        ("secondary", -m * et / ((1 - s) * llt)),
        ("loglog", m * math.log(2 * llt)),
        ("nu2_window", m * (params.nu2 * et) ** 2 * math.exp(-2 * alpha * (1 - s) / two_s)
         * P(2 - 2 * s) / ((1 - s) ** 2 * llt ** 2)),
        ("zero_sum_a", a * (ea + 1) * P(3 - 4 * s) / (4 * alpha * llt)),
        ("prime_const2", m * _shat_poly_const(s)),
        ("nu1_window", m / params.nu1 ** 2
         * math.exp(-2 * alpha * (1 - s) / (two_s * params.nu2)) * P(2 * (1 - s) / params.nu2)),
        ("prime_const1", m * ((1.0 - s * 2.0 ** (1 - s)) / ((1 - s) * LOG2)
                              - math.log(LOG2) + integral_theta1(params.nu1))),
        ("prime_decay", m * math.expm1(alpha) * llt / (4 * math.pi * alpha * P(two_s))),
        ("zero_sum_llt", m * (ea + 1) / (alpha * P(two_s))),
        ("zero_sum_b", max(0.0, b) * (ea + 1) / (2 * alpha * P(two_s) * llt)),
        ("remainder1", 2 * m * et * math.exp(alpha / two_s) / (P(1) * llt)),
        ("remainder2", 5 * m * math.exp(2 * alpha / two_s) * (1 + llt / et)
         / (16 * math.pi * P(2))),
        ("gamma_factor", 4.3 * d * alpha1 * (1.0 + math.exp(-alpha / (2 * alpha1) * llt0))
         / (alpha * (2 * alpha1 - alpha) * P((2.0 - alpha / alpha1) * s) * llt)),
        ("pole", m_l * (1.0 + math.exp(alpha / 2)) / (2 * alpha) * qt * P(2 - 2 * s) / llt),
    )
    pre = checks.as_tuple()
    return (
        _result("logDeriv", "case1", terms_d, pre),
        _result("logL", "case1", terms_l, pre),
    )


def _case2(descriptor, point, params, strict):
    m = _require_euler(descriptor)
    _require_strong_lambda(descriptor)
    s = point.sigma
    llt = point.log_log_tau
    alpha, a2, a3 = params.alpha, params.alpha2, params.alpha3
    llt0 = params.resolved_llt0(point)
    t0 = params.resolved_t0(descriptor)
    log_tau0 = math.exp(llt0)
    M = big_M(a2, a3)

    checks = _Checks(strict)
    checks.require(a2 > 0 and a3 > 0, "alpha2, alpha3 > 0")
    checks.require(1.0 - a2 / llt <= s <= 1.0 + a3 / llt,
                   f"sigma in [1 - alpha2/loglog tau, 1 + alpha3/loglog tau]")
    checks.require(point.log_tau >= log_tau0 - 1e-9, "tau >= tau0")
    two_s = 2 * s - 1
    floor = max(
        SQRT60,
        math.sqrt(2.0) * math.exp(alpha / two_s),
        math.exp(alpha + 2 * a2),
        math.exp(4 * a2),
        math.exp(2 * a3),
    )
    checks.require(log_tau0 > floor,
                   "tau0 > max(e^sqrt(60), exp(sqrt2 e^{alpha/(2s-1)}), exp(e^{alpha+2a2}), "
                   "exp(e^{4a2}), exp(e^{2a3}))")
    _t_condition(checks, point, t0, descriptor.mu_plus)

    alpha1_eff = 0.5 * llt0 - a2
    a1_frak = frak_a(descriptor.pole_order, alpha1_eff, t0)
    b1_frak = frak_b(descriptor.degree, m, descriptor.pole_order, alpha1_eff, t0, log_tau0)
    P = lambda k: log_tau_power(llt, k)
    d = descriptor.degree
    m_l = descriptor.pole_order
    ea = math.exp(alpha)
    qt = _q_over_tau(descriptor, point.log_tau)
    eta_cap = 1.0 / (1.0 - alpha / (llt0 - 2 * a2))

    terms_d = (
        ("leading", 2.0 * m * llt),
        ("const", m * (1.0 - s * LOG2)),
        ("zero_window", (ea + 1) / (2 * alpha)),
        ("near1", (4 * m * theta1(M) + (ea + 1) * theta2(M) / (alpha * llt0)
                   + m * s * LOG2 ** 2 * theta1(M * LOG2 / (2 * llt0)) / llt0 ** 2)
         * abs(1 - s) * llt ** 2),
        ("prime_const", m * _s_poly_const(s)),
        ("prime_decay", m * _s_decay(s, alpha, llt)),
        ("zero_sum_llt", 2 * m * (ea + 1) / alpha * llt / P(two_s)),
        ("zero_sum_ab", (ea + 1) / alpha * (a1_frak * P(3 - 4 * s) + b1_frak * P(1 - 2 * s))),
        ("gamma_factor", 4.3 * d * math.exp(2 * a2) * (0.5 + a3 / llt0)
         * (1.0 + math.exp(2 * alpha * (llt0 - a2) / (llt0 - 2 * a2))) / (alpha * P(2))),
        ("pole", m_l * math.exp(2 * a2) / alpha * (0.5 + a3 / llt0)
         * (1.0 + math.exp(2 * alpha * a3 / (llt0 + 2 * a3))) * qt),
    )

    terms_l = (
        ("loglog", m * math.log(2 * llt)),
        ("const", m * (1.0 / LOG2 - math.log(LOG2) - s + eta_cap)),
        ("near1", (2 * m * theta1(M) * eta_cap + 2 * m * theta1(2 * a2)
                   + m * s * LOG2 * theta1(M * LOG2 / (2 * llt0)) / llt0)
         * abs(1 - s) * llt),
        ("prime_const2", m * _shat_poly_const(s)),
        ("prime_decay", m * math.expm1(alpha) * llt / (4 * math.pi * alpha * P(two_s))),
        ("zero_window", (ea + 1) * P(2 - 2 * s) / (4 * alpha * llt)),
        ("zero_sum_ab", (ea + 1) / (4 * alpha * llt)
         * (a1_frak * P(3 - 4 * s) + 2.0 * max(0.0, b1_frak) * P(1 - 2 * s))),
        ("zero_sum_llt", m * (ea + 1) / (alpha * P(two_s))),
        ("remainder1", m * math.exp(alpha * llt0 / (llt0 - 2 * a2)) * eta_cap / (P(1) * llt)),
        ("remainder2", 5 * m * math.exp(2 * alpha * llt0 / (llt0 - 2 * a2))
         * (1 + 2 * llt) / (16 * math.pi * P(2))),
        ("gamma_factor", 4.3 * d
         * (1.0 + math.exp(2 * alpha * (llt0 - a2) / (llt0 - 2 * a2)))
         / (2 * alpha * P(2 * s) * llt)),
        ("pole", m_l * math.exp(2 * a2) * (1.0 + math.exp(alpha / 2)) / (2 * alpha * llt) * qt),
    )
    pre = checks.as_tuple()
    return (
        _result("logDeriv", "case2", terms_d, pre),
        _result("logL", "case2", terms_l, pre),
    )


def _case3(descriptor, point, params, strict):
    m = _require_euler(descriptor)
    s, llt = point.sigma, point.log_log_tau
    a3 = params.alpha3
    checks = _Checks(strict)
    checks.require(a3 > 0, "alpha3 > 0")
    checks.require(s >= 1.0 + a3 / llt, "sigma >= 1 + alpha3/loglog tau")
    checks.require(point.log_tau > 1.0, "tau > e")
    pre = checks.as_tuple()
    terms_d = (("leading", m / a3 * llt),)
    terms_l = (
        ("leading", m * math.log(llt / a3)),
        ("const", m * EULER_GAMMA * a3 / llt),
    )
    return (
        _result("logDeriv", "case3", terms_d, pre, assumptions=()),
        _result("logL", "case3", terms_l, pre, assumptions=()),
    )


def bound_line1(descriptor: LFunctionDescriptor, t: float | None,
                params: BoundParameters = DEFAULT_PARAMETERS,
                point: EvaluationPoint | None = None,
                strict: bool = False) -> tuple[BoundResult, BoundResult]:
    """The sigma = 1 explicit bound pair, sharper than the case-2 specialization."""
    m = _require_euler(descriptor)
    _require_strong_lambda(descriptor)
    if point is None:
        if t is None:
            raise ValueError("either t or point is required")
        point = EvaluationPoint.from_t(descriptor, 1.0, t)
    llt = point.log_log_tau
    alpha = params.alpha
    llt0 = params.resolved_llt0(point)
    t0 = params.resolved_t0(descriptor)
    log_tau0 = math.exp(llt0)

    checks = _Checks(strict)
    checks.require(alpha >= LOG2 - 1e-12, "alpha >= log 2")
    checks.require(point.log_tau >= log_tau0 - 1e-9, "tau >= tau0")
    checks.require(log_tau0 >= math.exp(alpha) * SQRT60 - 1e-9,
                   "tau0 >= exp(e^alpha sqrt(60))")
    _t_condition(checks, point, t0, descriptor.mu_plus)

    a2_frak = frak_a(descriptor.pole_order, 0.5 * llt0, t0)
    b2_frak = frak_b(descriptor.degree, m, descriptor.pole_order, 0.5 * llt0, t0, log_tau0)
    return _line1_terms(descriptor, point, params, a2_frak, b2_frak, llt0,
                        checks.as_tuple(), case="line1")


def _line1_terms(descriptor, point, params, a_frak_val, b_frak_val, llt0, pre,
                 case, real_point=False):
    m = descriptor.euler_order
    d = descriptor.degree
    m_l = descriptor.pole_order
    alpha = params.alpha
    llt = point.log_log_tau
    P = lambda k: log_tau_power(llt, k)
    ea = math.exp(alpha)
    qt = 0.0 if real_point else _q_over_tau(descriptor, point.log_tau)

    terms_d = (
        ("leading", 2.0 * m * llt),
        ("const", -m * (EULER_GAMMA + alpha)),
        ("zero_window", (ea + 1) / (2 * alpha)),
        ("prime_decay", m * math.expm1(alpha) * (2 * alpha + 1) / (2 * math.pi * alpha)
         * llt ** 2 / P(1)),
        ("zero_sum_llt", 2 * m * (ea + 1) / alpha * llt / P(1)),
        ("const_decay", (0.24 * m * ea + (ea + 1) / alpha * (a_frak_val + b_frak_val)) / P(1)),
        ("gamma_factor", 2.15 * d * (math.exp(2 * alpha) + 1.0) / (alpha * P(2))),
        ("pole", m_l / alpha * qt),
    )
    terms_l = (
        ("loglog", m * math.log(2 * llt)),
        ("const", m * EULER_GAMMA),
        ("zero_window", (ea + 1) / (4 * alpha * llt)),
        ("prime_decay", m * (1.0 + ea * (4 * alpha - 1)) / (4 * math.pi * alpha) * llt / P(1)),
        ("const_decay", m / alpha * (ea + 1 + (ea * (7 * alpha - 4 * (alpha ** 2 + 1)) + 4)
                                     / (4 * math.pi)) / P(1)),
        ("zero_sum_ab", ((ea + 1) * (a_frak_val + 2 * max(0.0, b_frak_val)) / (4 * alpha)
                         + m * ea * llt0 / (llt0 - alpha)) / (P(1) * llt)),
        ("remainder1", 5 * m * math.exp(2 * alpha) * llt / (8 * math.pi * P(2))),
        ("remainder2", 5 * m * math.exp(2 * alpha) * (1 - 2 * alpha) / (16 * math.pi * P(2))),
        ("gamma_factor", 2.15 * d * (math.exp(2 * alpha) + 1.0) / (alpha * P(2) * llt)),
        ("pole", m_l * (1.0 + math.exp(alpha / 2)) / (2 * alpha * llt) * qt),
    )
    return (
        _result("logDeriv", case, terms_d, pre),
        _result("logL", case, terms_l, pre),
    )


def bound_real_point(descriptor: LFunctionDescriptor,
                     params: BoundParameters = DEFAULT_PARAMETERS,
                     log_q0: float | None = None,
                     strict: bool = False) -> tuple[BoundResult, BoundResult]:
    """The s = 1 bound pair for entire L, with the conductor replacing tau."""
    m = _require_euler(descriptor)
    _require_strong_lambda(descriptor)
    if descriptor.pole_order != 0:
        raise NotEntire("real-point bound requires an entire L (pole order 0)")
    alpha = params.alpha
    log_q = math.log(descriptor.conductor)
    if log_q0 is None:
        log_q0 = log_q
    if log_q0 < math.exp(alpha) * SQRT60 - 1e-9 or log_q < log_q0 - 1e-9:
        raise ConductorTooSmall(
            f"need q >= q0 >= exp(e^alpha sqrt(60)); log q = {log_q:.4g}, "
            f"log q0 = {log_q0:.4g}, floor = {math.exp(alpha) * SQRT60:.4g}"
        )
    llt0 = math.log(log_q0)
    point = EvaluationPoint(sigma=1.0, t=0.0, log_abs_t=None,
                            log_tau=log_q, log_log_tau=math.log(log_q))
    checks = _Checks(strict)
    checks.require(True, "q >= q0 >= exp(e^alpha sqrt(60))")
    a3_frak = frak_a(0, 0.5 * llt0, 1.0)
    b3_frak = frak_b3(descriptor.degree, m, log_q0, descriptor.mu_plus)
    return _line1_terms(descriptor, point, params, a3_frak, b3_frak, llt0,
                        checks.as_tuple(), case="realPoint", real_point=True)


# --------------------------------------------------------------------------
# simplified corollaries
# --------------------------------------------------------------------------

def zeta_cor9(sigma: float, t: float | None = None, log_t: float | None = None,
              strict: bool = False) -> tuple[BoundResult, BoundResult]:
    """The zeta specialization at alpha = 1.278 for t >= 10^6 and
    1/2 + 1/loglog t <= sigma < 1 (RH only)."""
    if log_t is None:
        if t is None:
            raise ValueError("either t or log_t is required")
        if t < 1e6:
            raise PreconditionFailed(f"t = {t:.6g} < 10^6")
        log_t = math.log(t)
    elif log_t < math.log(1e6) - 1e-12:
        raise PreconditionFailed(f"log t = {log_t:.6g} < log 10^6")
    alpha = 1.278
    llt = math.log(log_t)
    checks = _Checks(strict)
    checks.require(0.5 + 1.0 / llt <= sigma < 1.0,
                   f"sigma in [1/2 + 1/loglog t, 1) = [{0.5 + 1.0 / llt:.4f}, 1)")
    pre = checks.as_tuple()
    P = lambda k: log_tau_power(llt, k)

    terms_d = (
        ("leading", a_hat(1, alpha, sigma) * P(2 - 2 * sigma)),
        ("secondary", -sigma * 2.0 ** (1 - sigma) / (1 - sigma)),
        ("zero_sum_a", 4.2 * P(3 - 4 * sigma)),
        ("prime_const", 0.64 / (2 * sigma - 1) ** 3),
        ("zero_sum_llt", 4.0 * llt ** 2 / ((2 * sigma - 1) * P(2 * sigma - 1))),
        ("gamma_factor", 2.0 / P(1.0 / 3.0)),
    )
    et = eta(alpha, sigma, llt)
    terms_l = (
        ("leading", a_tilde(1, alpha, sigma, llt) * P(2 - 2 * sigma) / llt),
        ("secondary", -et / ((1 - sigma) * llt)),
        ("loglog", math.log(2 * llt)),
        ("nu_window", 3.24 * P(2 - 2 * sigma) / ((1 - sigma) ** 2 * llt ** 2)),
        ("zero_sum_a", 1.04 * P(3 - 4 * sigma) / llt),
        ("prime_const", 4.7 / (2 * sigma - 1) ** 2),
        ("zero_sum_llt", 1.53 * llt / P(2 * sigma - 1)),
        ("gamma_decay1", 7.75 / (P(1.0 / 3.0) * llt)),
        ("gamma_decay2", 0.21 * llt / P(2.0 / 3.0)),
    )
    return (
        _result("logDeriv", "cor9", terms_d, pre, assumptions=("RH",)),
        _result("logL", "cor9", terms_l, pre, assumptions=("RH",)),
    )


def family_cor10(descriptor: LFunctionDescriptor, point: EvaluationPoint,
                 strict: bool = False) -> tuple[BoundResult, BoundResult,
                                                BoundResult, BoundResult]:
    """The simplified family bounds (m = degree): the pair at the point's
    sigma in [0.6, 1) and the pair on the 1-line."""
    m = _require_euler(descriptor)
    _require_strong_lambda(descriptor)
    d = descriptor.degree
    if m != d:
        raise EulerOrderMismatch(f"requires m = degree, got m = {m}, d = {d}")
    s, llt = point.sigma, point.log_log_tau
    checks = _Checks(strict)
    checks.require(llt >= 13.0, "loglog tau >= 13")
    t_floor = max(2.0 * descriptor.mu_plus, descriptor.pole_order + 2e3)
    if point.log_abs_t is None:
        checks.require(False, "point carries no |t| information")
    else:
        checks.require(point.log_abs_t >= math.log(t_floor) - 1e-12,
                       f"|t| >= max(2 mu+, mL + 2000) = {t_floor:.6g}")
    checks_s = _Checks(strict)
    checks_s.items = list(checks.items)
    checks_s.require(0.6 <= s < 1.0, "sigma in [0.6, 1)")
    P = lambda k: log_tau_power(llt, k)

    if s < 1.0:
        terms_d = (
            ("leading", d * (P(2 - 2 * s) - s * 2.0 ** (1 - s)) / (1 - s)),
            ("alpha_window", (1.796 - 1.278 * d) * P(2 - 2 * s)),
            ("zero_sum_a", 4.0 * P(3 - 4 * s)),
            ("const", 90.0 * d),
        )
        terms_l = (
            ("leading", d * (P(2 - 2 * s) - 1.0) / (2 * (1 - s) * llt)),
            ("alpha_window", (0.898 - 0.639 * d) * P(2 - 2 * s) / llt),
            ("const", d * (math.log(llt) + 8.0)),
            ("nu_window", 3.4 * d * P(2 - 2 * s) / ((1 - s) ** 2 * llt ** 2)),
        )
    else:
        # the fixed-sigma pair is only stated for sigma < 1; the 1-line pair
        # below is the applicable display there
        terms_d = (("leading", math.inf),)
        terms_l = (("leading", math.inf),)
    terms_d1 = (
        ("leading", 2.0 * d * llt),
        ("const", 2.265 - 2.763 * d),
        ("decay", 4.0 * d * llt ** 2 / P(1)),
    )
    terms_l1 = (
        ("leading", d * math.log(llt)),
        ("const", d * math.log(2.0 * math.exp(EULER_GAMMA))),
        ("decay", d / llt),
    )
    return (
        _result("logDeriv", "cor10", terms_d, checks_s.as_tuple()),
        _result("logL", "cor10", terms_l, checks_s.as_tuple()),
        _result("logDeriv", "cor10_line1", terms_d1, checks.as_tuple()),
        _result("logL", "cor10_line1", terms_l1, checks.as_tuple()),
    )


def dedekind_residue_bound(n_k: int, abs_disc: float) -> float:
    """Upper bound for the Dedekind zeta residue under GRH + the Dedekind
    conjecture: (exp(1.271 + 2.475/loglog|D|) loglog|D|)^{n_K - 1}."""
    if n_k < 2:
        raise PreconditionFailed(f"n_K = {n_k} must be >= 2")
    if abs_disc < 5.4e6:
        raise PreconditionFailed(f"|Delta| = {abs_disc:.4g} below 5.4e6")
    ll = math.log(math.log(abs_disc))
    return (math.exp(1.271 + 2.475 / ll) * ll) ** (n_k - 1)


# --------------------------------------------------------------------------
# non-certified diagnostics for the asymptotic statements
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ConjectureConstants:
    """Inputs for the prime mean-square style hypotheses: variant 1 carries
    the square-sum constants, variant 2 the absolute-sum ones. cp1 may be a
    constant or a callable of x."""

    variant: int
    cp1: object = 1.0
    cp2: float = 0.0

    def m_values(self, llt: float) -> tuple[float, float, float, float]:
        x = math.exp(2.0 * llt) if 2.0 * llt < 700 else math.inf
        c1 = self.cp1(x) if callable(self.cp1) else float(self.cp1)
        if self.variant == 1:
            m1 = math.sqrt(c1)
            m2 = math.sqrt(c1 + self.cp2)
            return m1, m2, m2 / math.sqrt(llt), m2
        m1 = c1
        m2 = self.cp2
        return m1, m2, m2 / llt, m1 + m2


@dataclass(frozen=True)
class AsymptoticReport:
    """Main terms of a non-explicit statement; the unspecified O-terms are
    reported symbolically by name. Never certified."""

    which: str
    target: str
    main_terms: tuple
    o_terms: tuple
    certified: bool = False

    @property
    def value(self) -> float:
        return math.fsum(v for _, v in self.main_terms)


def asymptotic_main_terms(descriptor: LFunctionDescriptor, point: EvaluationPoint,
                          which: str, alpha: float = 1.278, eps: float = 0.01,
                          conjecture: ConjectureConstants | None = None
                          ) -> tuple[AsymptoticReport, AsymptoticReport]:
    """Evaluate only the explicitly defined main terms of the six asymptotic
    statements (selector thm1..thm6); O-constants are unspecified there, so
    the result is flagged non-certified and the O-terms are named only."""
    s, llt = point.sigma, point.log_log_tau
    P = lambda k: log_tau_power(llt, k)
    cr = descriptor.ramanujan_constant(eps)
    m = descriptor.euler_order or 0

    if which == "thm1":
        a_val = coef_A((1 + eps) * cr, alpha, s - eps, s)
        main_d = (
            ("leading", a_val * P(2 * (1 - s + eps))),
            ("zero_window", (math.exp(alpha) + 1) / (2 * alpha) * P(2 - 2 * s)),
            ("secondary", -(1 + eps) * cr * s * 2.0 ** (1 - s + eps) / (1 - s + eps)),
        )
        et = eta(alpha, s, llt)
        main_l = (
            ("leading", et * a_val * P(2 * (1 - s + eps)) / llt),
            ("zero_window", (math.exp(alpha) + 1) / (4 * alpha) * P(2 - 2 * s) / llt),
            ("secondary", -(1 + eps) * cr * et / ((1 - s + eps) * llt)),
            ("loglog", cr * math.log(2 * llt)),
        )
        o_d = ("pole_decay", "A1", "A2_over_logtau", "gamma_factors", "conductor")
        o_l = ("leading_correction", "pole_decay", "A1", "A2_over_logtau",
               "gamma_factors", "A3", "conductor")
        return (_report(which, "logDeriv", main_d, o_d),
                _report(which, "logL", main_l, o_l))

    if which in ("thm2", "thm3"):
        if conjecture is None:
            raise ValueError("thm2/thm3 need conjecture constants")
        m1, m2, m3, m4 = conjecture.m_values(llt)
        if which == "thm2":
            main_d = (
                ("leading", a_hat(m1, alpha, s) * P(2 - 2 * s)),
                ("secondary", -m1 * s * 2.0 ** (1 - s) / (1 - s)),
            )
            et = eta(alpha, s, llt)
            main_l = (
                ("leading", a_tilde(m1, alpha, s, llt) * P(2 - 2 * s) / llt),
                ("secondary", -m1 * et / ((1 - s) * llt)),
                ("loglog", m1 * math.log(2 * llt)),
            )
            o_d = ("A4_leading", "pole_decay", "A1", "A2_over_logtau",
                   "gamma_factors", "conductor")
            o_l = ("A5_leading", "pole_decay", "A1", "A2_over_logtau",
                   "gamma_factors", "A3", "conductor")
            return (_report(which, "logDeriv", main_d, o_d),
                    _report(which, "logL", main_l, o_l))
        main_d = (("leading", 2.0 * m1 * llt),)
        main_l = (("loglog", m1 * (math.log(2 * llt) + 2.0)),)
        o_d = ("m3_logloglog", "euler_theta", "decay", "conductor")
        o_l = ("m2_and_theta", "decay", "conductor")
        return (_report(which, "logDeriv", main_d, o_d),
                _report(which, "logL", main_l, o_l))

    if which == "thm4":
        if abs(1 - s) * llt <= 1.0:
            main_d = (("leading", 2.0 * m * llt),)
            main_l = (("loglog", m * math.log(2 * llt)),)
        else:
            main_d = (
                ("leading", a_hat(m, alpha, s) * P(2 - 2 * s)),
                ("secondary", -m * s * 2.0 ** (1 - s) / (1 - s)),
            )
            et = eta(alpha, s, llt)
            main_l = (
                ("leading", a_tilde(m, alpha, s, llt) * P(2 - 2 * s) / llt),
                ("secondary", -m * et / ((1 - s) * llt)),
                ("loglog", m * math.log(2 * llt)),
            )
        o = ("pole_decay", "prime_window", "gamma_factors", "conductor")
        return (_report(which, "logDeriv", main_d, o),
                _report(which, "logL", main_l, o))

    if which == "thm5":
        main_d = (("leading", a_hat(m, alpha, s) * P(2 - 2 * s)),)
        main_l = (("leading", a_tilde(m, alpha, s, llt) * P(2 - 2 * s) / llt),)
        o = ("o_of_leading",)
        return (_report(which, "logDeriv", main_d, o),
                _report(which, "logL", main_l, o))

    if which == "thm6":
        main_d = (
            ("leading", 2.0 * m * llt),
            ("const", -m * (EULER_GAMMA + alpha)),
            ("zero_window", (math.exp(alpha) + 1) / (2 * alpha)),
        )
        main_l = (
            ("loglog", m * math.log(2 * llt)),
            ("const", m * EULER_GAMMA),
            ("zero_window", (math.exp(alpha) + 1) / (4 * alpha * llt)),
        )
        o = ("decay", "gamma_factors", "conductor")
        return (_report(which, "logDeriv", main_d, o),
                _report(which, "logL", main_l, o))

    raise ValueError(f"unknown selector {which!r}")


def _report(which, target, main_terms, o_terms) -> AsymptoticReport:
    return AsymptoticReport(which=which, target=target,
                            main_terms=tuple(main_terms), o_terms=tuple(o_terms))


def _result(target, case, terms, pre, assumptions=ASSUMPTIONS_EXPLICIT) -> BoundResult:
    return BoundResult(
        target=target,
        case=case,
        value=math.fsum(v for _, v in terms),
        terms=tuple(terms),
        preconditions=tuple(pre),
        assumptions=tuple(assumptions),
    )
