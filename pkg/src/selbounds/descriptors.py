"""L-function descriptors: functional-equation data, derived invariants,
Dirichlet characters, and the built-in instances (zeta, Dirichlet L,
finite products).

Descriptors are immutable after construction and safe to share across
concurrent evaluations.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .errors import (
    EmptyGammaFactors,
    LogTauTooSmall,
    NegativeRealMu,
    NonPositiveLambda,
    NonPrimitiveCharacter,
    UnknownBuiltin,
    ZeroTWithoutRealPointFlag,
)

TWO_PI = 2.0 * math.pi


# --------------------------------------------------------------------------
# Dirichlet characters as full value tables modulo q
# --------------------------------------------------------------------------

class DirichletCharacter:
    """A Dirichlet character stored as its value table on residues mod q."""

    def __init__(self, modulus: int, values):
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        values = np.asarray(values, dtype=complex)
        if values.shape != (modulus,):
            raise ValueError("values must have length q (indexed by n mod q)")
        self.modulus = int(modulus)
        self.values = values
        self.values.flags.writeable = False

    def __call__(self, n: int) -> complex:
        return complex(self.values[n % self.modulus])

    def value_array(self, n: np.ndarray) -> np.ndarray:
        return self.values[np.mod(n, self.modulus)]

    @property
    def is_principal(self) -> bool:
        q = self.modulus
        return all(self(n) == (1.0 if math.gcd(n, q) == 1 else 0.0) for n in range(q))

    @property
    def is_primitive(self) -> bool:
        """True iff the character is induced by no character of smaller modulus."""
        q = self.modulus
        if q == 1:
            return True
        if self.is_principal:
            return False
        for d in range(1, q):
            if q % d != 0:
                continue
            # induced by modulus d iff chi(n) = 1 whenever n = 1 (mod d), gcd(n, q) = 1
            induced = all(
                abs(self(n) - 1.0) < 1e-12
                for n in range(1, q + 1)
                if n % d == 1 % d and math.gcd(n, q) == 1
            )
            if induced:
                return False
        return True

    @property
    def parity(self) -> int:
        """0 for even characters (chi(-1) = 1), 1 for odd."""
        return 0 if abs(self(-1) - 1.0) < 1e-12 else 1

    def gauss_sum(self) -> complex:
        q = self.modulus
        ns = np.arange(q)
        return complex(np.sum(self.values * np.exp(2j * math.pi * ns / q)))

    def root_number(self) -> complex:
        """epsilon(chi) = tau(chi) / (i^parity sqrt(q)), modulus one for primitive chi."""
        return self.gauss_sum() / (1j ** self.parity * math.sqrt(self.modulus))

    @classmethod
    def cyclic(cls, modulus: int, index: int) -> "DirichletCharacter":
        """Character number `index` of a cyclic unit group (q = 1, 2, 4, p^k or
        2 p^k): chi(g) = exp(2 pi i index / phi(q)) on the smallest generator g."""
        q = modulus
        units = [n for n in range(1, q + 1) if math.gcd(n, q) == 1]
        phi = len(units)
        gen = None
        for g in units:
            seen, x = set(), 1
            for _ in range(phi):
                x = (x * g) % q
                seen.add(x)
            if len(seen) == phi:
                gen = g
                break
        if gen is None:
            raise UnknownBuiltin(
                f"unit group mod {q} is not cyclic; supply a value table instead"
            )
        values = np.zeros(q, dtype=complex)
        x = 1
        for j in range(phi):
            x = (x * gen) % q
            values[x] = cmath.exp(2j * math.pi * index * ((j + 1) % phi) / phi)
        values[1 % q] = 1.0
        return cls(q, values)


# --------------------------------------------------------------------------
# coefficient providers
# --------------------------------------------------------------------------

class ZetaCoefficients:
    """Lambda_L = the von Mangoldt function, a(p) = 1."""

    def fill(self, von_mangoldt: np.ndarray) -> np.ndarray:
        return von_mangoldt

    def ap(self, primes: np.ndarray) -> np.ndarray:
        return np.ones(len(primes), dtype=complex)


class DirichletCoefficients:
    """Lambda_L(n) = chi(n) Lambda(n) for a completely multiplicative chi."""

    def __init__(self, character: DirichletCharacter):
        self.character = character

    def fill(self, von_mangoldt: np.ndarray) -> np.ndarray:
        n = np.arange(len(von_mangoldt))
        return self.character.value_array(n) * von_mangoldt

    def ap(self, primes: np.ndarray) -> np.ndarray:
        return self.character.value_array(primes)


class ProductCoefficients:
    """Coefficients of a finite product: Lambda_L and a(p) add over factors."""

    def __init__(self, providers):
        self.providers = tuple(providers)

    def fill(self, von_mangoldt: np.ndarray) -> np.ndarray:
        return reduce(lambda acc, p: acc + p.fill(von_mangoldt), self.providers,
                      np.zeros(len(von_mangoldt), dtype=complex))

    def ap(self, primes: np.ndarray) -> np.ndarray:
        return reduce(lambda acc, p: acc + p.ap(primes), self.providers,
                      np.zeros(len(primes), dtype=complex))


# --------------------------------------------------------------------------
# the descriptor
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class LFunctionDescriptor:
    """Functional-equation data of a Selberg-class L-function plus the
    arithmetic inputs the bounds need.

    gamma_factors: (lambda_j, mu_j) pairs, lambda_j > 0, Re mu_j >= 0.
    q_factor: the Q of the functional equation.
    euler_order: order m of a polynomial Euler product, or None.
    ramanujan_constant: epsilon -> C_R(epsilon) bounding |a(n)| <= C_R n^eps.
    """

    gamma_factors: tuple
    q_factor: float
    pole_order: int = 0
    euler_order: int | None = None
    ramanujan_theta: float = 0.0
    euler_constant: float = 1.0
    ramanujan_constant: object = None
    coefficient_provider: object = None
    root_number: complex = 1.0 + 0.0j
    structure: tuple = ()     # ("zeta"|"dirichlet", payload) parts, for oracles
    name: str = ""

    def __post_init__(self):
        if len(self.gamma_factors) == 0:
            raise EmptyGammaFactors("at least one gamma factor is required")
        for lam, mu in self.gamma_factors:
            if not lam > 0:
                raise NonPositiveLambda(f"lambda = {lam} must be positive")
            if complex(mu).real < 0:
                raise NegativeRealMu(f"Re mu = {complex(mu).real} must be >= 0")
        if not self.q_factor > 0:
            raise ValueError("Q must be positive")
        if self.pole_order < 0:
            raise ValueError("pole order must be >= 0")
        if not (0.0 <= self.ramanujan_theta < 0.5):
            raise ValueError("theta must lie in [0, 1/2)")
        if self.ramanujan_constant is None:
            object.__setattr__(self, "ramanujan_constant", lambda eps: 1.0)

    # ---- derived invariants -------------------------------------------------

    @property
    def degree(self) -> float:
        return 2.0 * sum(lam for lam, _ in self.gamma_factors)

    @property
    def conductor(self) -> float:
        d = self.degree
        prod = 1.0
        for lam, _ in self.gamma_factors:
            prod *= lam ** (2.0 * lam)
        return (TWO_PI ** d) * self.q_factor ** 2 * prod

    @property
    def strong_lambda(self) -> bool:
        return all(lam == 0.5 for lam, _ in self.gamma_factors)

    @property
    def mu_plus(self) -> float:
        return max(abs(complex(mu)) for _, mu in self.gamma_factors)

    @property
    def lambda_min(self) -> float:
        return min(lam for lam, _ in self.gamma_factors)

    @property
    def is_entire(self) -> bool:
        return self.pole_order == 0


def make_descriptor(gamma_factors, q_factor, pole_order=0, euler_order=None,
                    theta=0.0, c_e=1.0, coefficient_provider=None,
                    ramanujan_constant=None, root_number=1.0 + 0.0j,
                    structure=(), name="") -> LFunctionDescriptor:
    """Validating constructor; derives degree, conductor and the strong-lambda
    flag from the gamma factors."""
    factors = tuple((float(lam), complex(mu)) for lam, mu in gamma_factors)
    return LFunctionDescriptor(
        gamma_factors=factors,
        q_factor=float(q_factor),
        pole_order=int(pole_order),
        euler_order=None if euler_order is None else int(euler_order),
        ramanujan_theta=float(theta),
        euler_constant=float(c_e),
        ramanujan_constant=ramanujan_constant,
        coefficient_provider=coefficient_provider,
        root_number=complex(root_number),
        structure=tuple(structure),
        name=name,
    )


def log_tau(descriptor: LFunctionDescriptor, t: float,
            real_point: bool = False) -> tuple[float, float]:
    """(log tau, log log tau) with tau = conductor * |t|^degree, computed in
    logarithmic coordinates (tau itself is never materialized).

    With the real-point convention (t = 0) tau is replaced by the conductor.
    """
    if t == 0.0 and not real_point:
        raise ZeroTWithoutRealPointFlag("t = 0 requires the real-point convention")
    lt = math.log(descriptor.conductor)
    if t != 0.0:
        lt += descriptor.degree * math.log(abs(t))
    if lt <= 0.0:
        raise LogTauTooSmall(f"log tau = {lt:.6g} <= 0; no usable log log tau")
    return lt, math.log(lt)


@dataclass(frozen=True)
class EvaluationPoint:
    """(sigma, t) with log tau carried logarithmically so that astronomically
    large tau (log log tau >= 13) stays representable."""

    sigma: float
    t: float | None
    log_abs_t: float | None
    log_tau: float
    log_log_tau: float

    def __post_init__(self):
        if self.log_tau <= 1.0:
            raise LogTauTooSmall(f"log tau = {self.log_tau:.6g} must exceed 1")
        if abs(self.log_log_tau - math.log(self.log_tau)) > 1e-9:
            raise ValueError("log_log_tau inconsistent with log_tau")

    @classmethod
    def from_t(cls, descriptor: LFunctionDescriptor, sigma: float, t: float,
               real_point: bool = False) -> "EvaluationPoint":
        lt, llt = log_tau(descriptor, t, real_point=real_point)
        lat = math.log(abs(t)) if t != 0.0 else None
        return cls(sigma=float(sigma), t=float(t), log_abs_t=lat,
                   log_tau=lt, log_log_tau=llt)

    @classmethod
    def from_log_tau(cls, descriptor: LFunctionDescriptor, sigma: float,
                     log_tau_value: float) -> "EvaluationPoint":
        lat = (log_tau_value - math.log(descriptor.conductor)) / descriptor.degree
        return cls(sigma=float(sigma), t=None, log_abs_t=lat,
                   log_tau=float(log_tau_value),
                   log_log_tau=math.log(log_tau_value))

    @classmethod
    def from_log_log_tau(cls, descriptor: LFunctionDescriptor, sigma: float,
                         log_log_tau_value: float) -> "EvaluationPoint":
        return cls.from_log_tau(descriptor, sigma, math.exp(log_log_tau_value))


# --------------------------------------------------------------------------
# builtins
# --------------------------------------------------------------------------

def zeta_descriptor() -> LFunctionDescriptor:
    """The Riemann zeta function: degree 1, conductor 1."""
    return make_descriptor(
        gamma_factors=[(0.5, 0.0)],
        q_factor=math.pi ** -0.5,
        pole_order=1,
        euler_order=1,
        theta=0.0,
        c_e=1.0,
        coefficient_provider=ZetaCoefficients(),
        structure=(("zeta", None),),
        name="zeta",
    )


def dirichlet_descriptor(modulus: int, index: int = 1,
                         character: DirichletCharacter | None = None
                         ) -> LFunctionDescriptor:
    """L(s, chi) for a primitive character chi mod q >= 2: degree 1, conductor q."""
    chi = character if character is not None else DirichletCharacter.cyclic(modulus, index)
    if not chi.is_primitive:
        raise NonPrimitiveCharacter(
            f"character {index} mod {modulus} is not primitive"
        )
    a = chi.parity
    return make_descriptor(
        gamma_factors=[(0.5, a / 2.0)],
        q_factor=math.sqrt(modulus / math.pi),
        pole_order=0,
        euler_order=1,
        theta=0.0,
        c_e=1.0,
        coefficient_provider=DirichletCoefficients(chi),
        root_number=chi.root_number(),
        structure=(("dirichlet", chi),),
        name=f"dirichlet({modulus},{index})",
    )


def product_descriptor(factors) -> LFunctionDescriptor:
    """Finite product of descriptors: degree, pole order and Euler order add,
    conductors multiply, Lambda_L sums over the factors."""
    factors = list(factors)
    if not factors:
        raise UnknownBuiltin("product of no factors")
    if len(factors) == 1:
        return factors[0]
    gammas = tuple(gf for f in factors for gf in f.gamma_factors)
    euler = None
    if all(f.euler_order is not None for f in factors):
        euler = sum(f.euler_order for f in factors)
    n_parts = len(factors)
    root = reduce(lambda a, f: a * f.root_number, factors, 1.0 + 0.0j)
    return make_descriptor(
        gamma_factors=gammas,
        q_factor=reduce(lambda a, f: a * f.q_factor, factors, 1.0),
        pole_order=sum(f.pole_order for f in factors),
        euler_order=euler,
        theta=max(f.ramanujan_theta for f in factors),
        c_e=sum(f.euler_constant for f in factors),
        coefficient_provider=ProductCoefficients(
            [f.coefficient_provider for f in factors]),
        ramanujan_constant=lambda eps, fs=tuple(factors): sum(
            f.ramanujan_constant(eps) for f in fs),
        root_number=root,
        structure=tuple(part for f in factors for part in f.structure),
        name="*".join(f.name or "?" for f in factors),
    )


def builtin(name: str, *args, **kwargs) -> LFunctionDescriptor:
    """Resolve a builtin by name: zeta | dirichlet(q, index) | product(...).

    Also accepts the CLI spelling, e.g. "dirichlet(5,1)" or
    "product(zeta,dirichlet(5,1))".
    """
    spec = name.strip()
    if "(" in spec and not args and not kwargs:
        return _parse_builtin(spec)
    if spec == "zeta":
        return zeta_descriptor()
    if spec == "dirichlet":
        return dirichlet_descriptor(*args, **kwargs)
    if spec == "product":
        parts = args[0] if len(args) == 1 and isinstance(args[0], (list, tuple)) else args
        return product_descriptor([
            p if isinstance(p, LFunctionDescriptor) else builtin(p) for p in parts
        ])
    raise UnknownBuiltin(f"unknown builtin {name!r}")


def _parse_builtin(spec: str) -> LFunctionDescriptor:
    spec = spec.strip()
    if spec == "zeta":
        return zeta_descriptor()
    head, _, rest = spec.partition("(")
    if not rest.endswith(")"):
        raise UnknownBuiltin(f"cannot parse builtin spec {spec!r}")
    body = rest[:-1]
    if head == "dirichlet":
        try:
            q_str, idx_str = body.split(",")
            return dirichlet_descriptor(int(q_str), int(idx_str))
        except ValueError as exc:
            raise UnknownBuiltin(f"cannot parse {spec!r}: {exc}") from exc
    if head == "product":
        parts, depth, cur = [], 0, []
        for ch in body:
            if ch == "," and depth == 0:
                parts.append("".join(cur))
                cur = []
                continue
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            cur.append(ch)
        if cur:
            parts.append("".join(cur))
        return product_descriptor([_parse_builtin(p) for p in parts])
    raise UnknownBuiltin(f"unknown builtin {head!r}")


# --------------------------------------------------------------------------
# config-file loading (JSON; see docs/descriptor.schema.json)
# --------------------------------------------------------------------------

def load_descriptor_config(path) -> LFunctionDescriptor:
    """Build a descriptor from a JSON config document.

    A "builtin" key wins; otherwise the raw functional-equation fields are
    used and the descriptor carries no coefficient provider (operations that
    need coefficients will reject it).
    """
    with open(path) as fh:
        doc = json.load(fh)
    if "builtin" in doc:
        return builtin(doc["builtin"])
    gammas = [(g[0], complex(g[1][0], g[1][1]) if isinstance(g[1], list) else g[1])
              for g in doc["gamma_factors"]]
    return make_descriptor(
        gamma_factors=gammas,
        q_factor=doc["Q"],
        pole_order=doc.get("pole_order", 0),
        euler_order=doc.get("euler_order"),
        theta=doc.get("theta", 0.0),
        c_e=doc.get("c_e", 1.0),
        name=doc.get("name", ""),
    )
