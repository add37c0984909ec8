"""Parameter optimization: the optimal smoothing exponent alpha0, the window
pairs (nu1, nu2) behind the simplified corollaries, and per-point bound
minimization by coordinate golden-section search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounds import BoundParameters, bound_main
from .errors import EmptyFeasibleSet, NoCaseApplies, PreconditionFailed
from .kernel import integral_theta1

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class OptimizationReport:
    variable_names: tuple
    optimum: tuple
    objective_value: float
    method: str
    iterations: int
    bracket: tuple

    def to_json_dict(self) -> dict:
        return {
            "variables": list(self.variable_names),
            "optimum": list(self.optimum),
            "objective": self.objective_value,
            "method": self.method,
            "iterations": self.iterations,
            "bracket": [list(b) for b in self.bracket],
        }


def golden_section(f, lo: float, hi: float, iterations: int = 60):
    """Plain golden-section minimization on [lo, hi]; the fixed iteration
    count shrinks the bracket to ~1e-12 of its width. Returns (x, f(x))."""
    a, b = min(lo, hi), max(lo, hi)
    h = b - a
    if h <= 0:
        return a, f(a)
    c = a + INV_PHI2 * h
    d = a + INV_PHI * h
    yc, yd = f(c), f(d)
    for _ in range(iterations):
        if yc < yd:
            b, d, yd = d, c, yc
            h = INV_PHI * h
            c = a + INV_PHI2 * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)
    return (c, yc) if yc < yd else (d, yd)


def solve_alpha0(tol: float = 1e-12) -> float:
    """Root of (1 - a) e^a + 1 = 0 in [1, 2]: the alpha minimizing the
    leading bound coefficient uniformly in sigma."""
    from scipy.optimize import brentq
    return float(brentq(lambda a: (1.0 - a) * math.exp(a) + 1.0, 1.0, 2.0,
                        xtol=tol, rtol=8.9e-16))


def nu_objective(variant: str, nu1: float, nu2: float) -> float:
    """The quantity the window pair (nu1, nu2) minimizes. The zeta variant
    carries the 1.4^2 factor from its eta ceiling; the family variant has
    eta <= 1 and drops it. Both trade the two window terms against the
    integral of theta1."""
    if variant == "cor9":
        lead = 1.4 ** 2
    elif variant == "cor10":
        lead = 1.0
    else:
        raise ValueError(f"unknown variant {variant!r}")
    e2 = math.exp(2.0)
    return lead * e2 * nu2 ** 2 + 1.0 / (nu1 ** 2 * (1.0 - 1.0 / nu2) ** 2) \
        + integral_theta1(nu1)


def optimize_nu(variant: str = "cor9", sweeps: int = 6,
                box=((0.5, 10.0), (1.01, 1.99))) -> tuple[float, float, float]:
    """Coordinate golden-section descent for the window pair; both objectives
    are convex along each coordinate on the search box."""
    nu1 = 0.5 * (box[0][0] + box[0][1])
    nu2 = 0.5 * (box[1][0] + box[1][1])
    val = nu_objective(variant, nu1, nu2)
    for _ in range(sweeps):
        nu1, _ = golden_section(lambda x: nu_objective(variant, x, nu2), *box[0])
        nu2, val = golden_section(lambda x: nu_objective(variant, nu1, x), *box[1])
    return nu1, nu2, val


_FREE_VARS = ("alpha", "alpha1", "nu1", "nu2")


def minimize_bound(descriptor, point, free_vars=("alpha",),
                   box=None, params: BoundParameters | None = None,
                   target: str = "logDeriv", sweeps: int = 3,
                   iterations: int = 60) -> OptimizationReport:
    """Minimize the certified bound value over a box of free parameters by
    golden-section per coordinate. Parameter sets failing any checkable
    precondition (or raising a range error) are treated as infeasible.
    """
    base = params or BoundParameters()
    free_vars = tuple(free_vars)
    for v in free_vars:
        if v not in _FREE_VARS:
            raise ValueError(f"cannot optimize over {v!r}")
    if box is None:
        box = {"alpha": (math.log(2.0), 2.0), "alpha1": (0.4, 4.0),
               "nu1": (0.5, 10.0), "nu2": (1.01, 1.99)}
    if isinstance(box, (tuple, list)):
        box = dict(zip(free_vars, box))

    idx = 0 if target == "logDeriv" else 1

    def evaluate(values: dict) -> float:
        kwargs = {**{v: values[v] for v in free_vars}}
        try:
            trial = _with(base, **kwargs)
            res = bound_main(descriptor, point, trial, strict=False)[idx]
        except (PreconditionFailed, NoCaseApplies, ValueError):
            return math.inf
        except Exception:
            return math.inf
        return res.value if res.certified else math.inf

    current = {v: 0.5 * (box[v][0] + box[v][1]) for v in free_vars}
    best = evaluate(current)
    total_iters = 0
    for _ in range(sweeps):
        for v in free_vars:
            lo, hi = box[v]

            def along(x, v=v):
                trial = dict(current)
                trial[v] = x
                return evaluate(trial)

            x, val = golden_section(along, lo, hi, iterations)
            total_iters += iterations
            if val < best:
                current[v] = x
                best = val
    if not math.isfinite(best):
        raise EmptyFeasibleSet(
            "no parameter set in the box satisfies the bound's preconditions"
        )
    return OptimizationReport(
        variable_names=free_vars,
        optimum=tuple(current[v] for v in free_vars),
        objective_value=best,
        method=f"coordinate golden-section, {sweeps} sweeps",
        iterations=total_iters,
        bracket=tuple(box[v] for v in free_vars),
    )


def _with(params: BoundParameters, **kw) -> BoundParameters:
    from dataclasses import replace
    return replace(params, **kw)
