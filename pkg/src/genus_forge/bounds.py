"""Explicit analytic constants: the curvature-diameter root c_of_b, the Moser
iteration sup-bound constant, and rank-times-sup dimension bounds composed into
an index bound report.

Unlike the exact-arithmetic modules, everything here is binary64 floating
point; accuracy targets are stated per operation.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from scipy.integrate import IntegrationWarning, quad

from .errors import DomainError, ExponentDomainError, RootNotBracketed

__all__ = [
    "BoundParams",
    "BoundReport",
    "IndexBoundReport",
    "c_of_b",
    "moser_constant",
    "berard_dim_bound",
    "index_bound_report",
]

_QUAD_OPTS = {"epsabs": 1e-13, "epsrel": 1e-12, "limit": 200}
_REL_TOL = 1e-12  # bisection target; one order tighter than the promised 1e-10


def _require_positive(name, value):
    if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
        raise DomainError(f"{name} must be a finite positive real, got {value!r}")
    return float(value)


@dataclass(frozen=True)
class BoundParams:
    """Inputs for the Moser-constant pipeline.

    m       dimension, integer >= 2
    p       integral-curvature exponent, real > m/2
    Lambda  normalized curvature integral, real >= 0
    diam    diameter, real > 0
    b       curvature-diameter parameter, real > 0
    cmp     otherwise-unspecified structural constant, real > 0 (explicit
            input on purpose; never chosen silently)
    v       auxiliary exponent; forced to m/2 when m > 2, free in (1, p)
            when m = 2 with default (1+p)/2
    l       bundle rank for the dimension bound, positive integer
    """

    m: int
    p: float
    Lambda: float
    diam: float
    b: float
    cmp: float = 1.0
    v: float | None = None
    l: int = 1

    def __post_init__(self):
        if not isinstance(self.m, int) or isinstance(self.m, bool) or self.m < 2:
            raise DomainError(f"m must be an integer >= 2, got {self.m!r}")
        p = _require_positive("p", self.p)
        if p <= self.m / 2:
            raise DomainError(f"p must exceed m/2 = {self.m / 2}, got {p}")
        if not (isinstance(self.Lambda, (int, float)) and math.isfinite(self.Lambda) and self.Lambda >= 0):
            raise DomainError(f"Lambda must be a finite real >= 0, got {self.Lambda!r}")
        diam = _require_positive("diam", self.diam)
        b = _require_positive("b", self.b)
        cmp_ = _require_positive("cmp", self.cmp)
        if not isinstance(self.l, int) or isinstance(self.l, bool) or self.l < 1:
            raise DomainError(f"l must be a positive integer, got {self.l!r}")
        if self.m > 2:
            forced = self.m / 2
            if self.v is not None and float(self.v) != forced:
                raise DomainError(f"v is forced to m/2 = {forced} when m > 2, got {self.v!r}")
            v = forced
        else:
            v = (1 + p) / 2 if self.v is None else _require_positive("v", self.v)
            if not (1 < v < p):
                raise DomainError(f"for m = 2, v must lie in (1, p), got {v}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "Lambda", float(self.Lambda))
        object.__setattr__(self, "diam", diam)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "cmp", cmp_)
        object.__setattr__(self, "v", v)


@dataclass(frozen=True)
class BoundReport:
    """Every intermediate of the Moser-constant composition, plus the inputs."""

    mu: float
    K1: float
    K2: float
    B: float
    c_of_b: float
    R: float
    constant: float
    inputs: BoundParams


@dataclass(frozen=True)
class IndexBoundReport(BoundReport):
    """BoundReport extended with the rank-scaled dimension and index bounds."""

    dim_bound: float = math.nan
    index_bound: float = math.nan


def _quad(f, lo, hi):
    # quad warns about roundoff at these near-machine tolerances even when
    # the result is fine; the 1e-10 contract is enforced by the root search
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        value, _ = quad(f, lo, hi, **_QUAD_OPTS)
    return value


def _sin_power_integral(m):
    return _quad(lambda t: math.sin(t) ** (m - 1), 0.0, math.pi)


def _lhs(x, m, b):
    # x * integral_0^b (cosh t + x sinh t)^(m-1) dt; strictly increasing in x
    value = x * _quad(lambda t: (math.cosh(t) + x * math.sinh(t)) ** (m - 1), 0.0, b)
    if not math.isfinite(value):
        # the integrand saturates binary64 before math.cosh itself raises
        raise RootNotBracketed(f"integral not finite at x = {x} for c_of_b(m={m}, b={b})")
    return value


def c_of_b(m: int, b: float, method: str = "bisection") -> float:
    """Unique positive root x of  x * int_0^b (cosh t + x sinh t)^(m-1) dt
    = int_0^pi sin^(m-1) t dt, to relative accuracy 1e-10.

    method: "bisection" (default) or "secant" (derivative-free refinement;
    the two agree to 1e-9).
    """
    if not isinstance(m, int) or isinstance(m, bool) or m < 2:
        raise DomainError(f"m must be an integer >= 2, got {m!r}")
    b = _require_positive("b", b)
    if method not in ("bisection", "secant"):
        raise DomainError(f"unknown root-finding method {method!r}")

    rhs = _sin_power_integral(m)
    try:
        lo, hi = 0.0, 1.0
        for _ in range(80):
            if _lhs(hi, m, b) >= rhs:
                break
            lo, hi = hi, hi * 2.0
        else:
            raise RootNotBracketed(f"no bracket for c_of_b(m={m}, b={b}) below x = {hi}")

        if method == "secant":
            return _secant_root(lambda x: _lhs(x, m, b) - rhs, lo, hi)
        for _ in range(200):
            if hi - lo <= _REL_TOL * max(hi, 1.0):
                break
            mid = 0.5 * (lo + hi)
            if _lhs(mid, m, b) < rhs:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)
    except OverflowError as exc:
        raise RootNotBracketed(f"overflow while bracketing c_of_b(m={m}, b={b})") from exc


def _secant_root(g, lo, hi):
    # plain secant steps, clamped back into [lo, hi] if an iterate escapes
    x0, x1 = lo, hi
    g0, g1 = g(x0), g(x1)
    for _ in range(80):
        if g1 == g0:
            break
        x2 = x1 - g1 * (x1 - x0) / (g1 - g0)
        if not (lo <= x2 <= hi):
            x2 = 0.5 * (x0 + x1)
        if abs(x2 - x1) <= _REL_TOL * max(abs(x2), 1.0):
            return x2
        x0, g0 = x1, g1
        x1, g1 = x2, g(x2)
    return x1


def moser_constant(params: BoundParams) -> BoundReport:
    """Compose mu, K1, K2, R, B into the explicit sup-bound constant
    mu^(2*K1*p*(mu-1)/(mu*(p-1)-p)) * B^(2*K2)."""
    p, v = params.p, params.v
    mu = v / (v - 1)
    K1 = mu / (mu - 1) ** 2
    K2 = 1 / (mu - 1)
    denom = mu * (p - 1) - p
    if denom <= 0:
        raise ExponentDomainError(f"mu*(p-1) - p = {denom} must be positive (mu = {mu}, p = {p})")
    cb = c_of_b(params.m, params.b)
    R = params.diam / (params.b * cb)
    # Lambda = 0 kills the first term (positive exponent), leaving B = 2
    B = params.cmp * params.Lambda ** (0.5 * (mu - 1) / denom) * R ** (p * (mu - 1) / denom) + 2.0
    constant = mu ** (2 * K1 * p * (mu - 1) / denom) * B ** (2 * K2)
    return BoundReport(mu=mu, K1=K1, K2=K2, B=B, c_of_b=cb, R=R, constant=constant, inputs=params)


def berard_dim_bound(l: int, L_sup: float) -> float:
    """Dimension bound rank * sup-ratio; L_sup < 1 is impossible for genuine
    sup ratios and is rejected as bad input."""
    if not isinstance(l, int) or isinstance(l, bool) or l < 1:
        raise DomainError(f"rank l must be a positive integer, got {l!r}")
    if not (isinstance(L_sup, (int, float)) and math.isfinite(L_sup) and L_sup >= 1):
        raise DomainError(f"L_sup must be a finite real >= 1, got {L_sup!r}")
    return float(l) * float(L_sup)


def index_bound_report(params: BoundParams) -> IndexBoundReport:
    """Full pipeline: Moser constant, then the rank-l dimension bound applied
    to kernel and cokernel, then |index| <= max of the two."""
    rep = moser_constant(params)
    dim_bound = berard_dim_bound(params.l, rep.constant)
    # kernel and cokernel bounds coincide here, so the max is the common value
    index_bound = max(dim_bound, dim_bound)
    return IndexBoundReport(
        mu=rep.mu,
        K1=rep.K1,
        K2=rep.K2,
        B=rep.B,
        c_of_b=rep.c_of_b,
        R=rep.R,
        constant=rep.constant,
        inputs=rep.inputs,
        dim_bound=dim_bound,
        index_bound=index_bound,
    )
