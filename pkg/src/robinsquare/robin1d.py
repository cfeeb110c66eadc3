"""One-dimensional Robin eigenvalue problem on the interval (-pi/2, pi/2).

The boundary conditions u'(-pi/2) = h*u(-pi/2) and u'(pi/2) = -h*u(pi/2)
interpolate between Neumann (h = 0) and Dirichlet (h = +inf).  The p-th
eigenfunction oscillates with frequency alpha_p(h)/pi where alpha_p(h) is
the unique solution in [p*pi, (p+1)*pi) of

    alpha * tan(alpha/2) = h*pi          (p even)
    alpha / (h*pi) = -tan(alpha/2)       (p odd)

Root finding works on the singularity-free rewrites

    alpha*sin(alpha/2) - h*pi*cos(alpha/2) = 0      (p even)
    alpha*cos(alpha/2) + h*pi*sin(alpha/2) = 0      (p odd)

which share the roots of the tan forms but stay smooth on the whole
bracket, so plain bisection from the exact interval endpoints followed by
a Newton polish is enough for full double precision at any h.

h is an extended real: math.inf is the exact Dirichlet limit and is
special-cased everywhere rather than approximated by a large float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

PI = math.pi
HALF_WIDTH = PI / 2.0

#: Normalized residual required of every root returned by solve_alpha.
RESIDUAL_TOL = 1e-12


def validate_robin_param(h: float) -> float:
    """Validate a Robin parameter: a nonnegative real or math.inf."""
    h = float(h)
    if math.isnan(h) or h < 0.0:
        raise ValueError(f"Robin parameter must be >= 0 or inf, got {h}")
    return h


def is_dirichlet(h: float) -> bool:
    return math.isinf(h)


@dataclass(frozen=True)
class AlphaSolution:
    """One branch value alpha_p(h) with its parity metadata."""

    p: int
    h: float
    alpha: float

    @property
    def parity(self) -> str:
        return "even" if self.p % 2 == 0 else "odd"


def _even_eq(a: float, hpi: float) -> float:
    return a * math.sin(a / 2.0) - hpi * math.cos(a / 2.0)


def _even_eq_prime(a: float, hpi: float) -> float:
    return math.sin(a / 2.0) + (a / 2.0) * math.cos(a / 2.0) + (hpi / 2.0) * math.sin(a / 2.0)


def _odd_eq(a: float, hpi: float) -> float:
    return a * math.cos(a / 2.0) + hpi * math.sin(a / 2.0)


def _odd_eq_prime(a: float, hpi: float) -> float:
    return math.cos(a / 2.0) - (a / 2.0) * math.sin(a / 2.0) + (hpi / 2.0) * math.cos(a / 2.0)


def residual(p: int, h: float, alpha: float) -> float:
    """Absolute residual of the defining equation, normalized by max(1, h*pi).

    Endpoint cases (h = 0, h = inf) are exact by construction and report 0.
    """
    if h == 0.0 or math.isinf(h):
        return 0.0
    hpi = h * PI
    r = _even_eq(alpha, hpi) if p % 2 == 0 else _odd_eq(alpha, hpi)
    return abs(r) / max(1.0, hpi)


@lru_cache(maxsize=1 << 18)
def _solve_alpha_cached(p: int, h: float) -> float:
    if h == 0.0:
        return p * PI
    if math.isinf(h):
        return (p + 1) * PI
    hpi = h * PI
    if p % 2 == 0:
        f, fp = _even_eq, _even_eq_prime
    else:
        f, fp = _odd_eq, _odd_eq_prime
    # The smooth forms are nonzero with opposite signs at the exact endpoints
    # p*pi and (p+1)*pi for every finite h > 0, and have exactly one interior
    # root, so no endpoint offsets are needed.
    lo, hi = p * PI, (p + 1) * PI
    flo = f(lo, hpi)
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        fm = f(mid, hpi)
        if flo * fm <= 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
        if hi - lo <= 4.0 * math.ulp(hi):
            break
    a = 0.5 * (lo + hi)
    for _ in range(3):
        d = fp(a, hpi)
        if d == 0.0:
            break
        a -= f(a, hpi) / d
    # Keep the root inside the branch interval (Newton can overshoot by ulps).
    a = min(max(a, p * PI), (p + 1) * PI)
    return a


def solve_alpha(p: int, h: float) -> AlphaSolution:
    """Solve the branch equation for alpha_p(h).

    Returns p*pi exactly at h = 0 and (p+1)*pi exactly at h = inf; for
    finite h > 0 the root lies strictly inside (p*pi, (p+1)*pi) with
    normalized residual below RESIDUAL_TOL.
    """
    if p < 0:
        raise ValueError("branch index p must be >= 0")
    h = validate_robin_param(h)
    return AlphaSolution(p=p, h=h, alpha=_solve_alpha_cached(p, h))


def alpha(p: int, h: float) -> float:
    """Branch value alpha_p(h) as a plain float."""
    return solve_alpha(p, h).alpha


def eval_u1d(sol: AlphaSolution, x: float) -> float:
    """Evaluate the 1D eigenfunction of a branch at x in [-pi/2, pi/2].

    For finite h > 0 the normalized forms cos(alpha*x/pi)/sin(alpha/2)
    (p even) and sin(alpha*x/pi)/cos(alpha/2) (p odd) are used; their
    denominators vanish only in the h -> 0 limit.  At the exact endpoints
    h = 0 and h = inf the bare trigonometric factors cos(p*x)/sin(p*x)
    and cos((p+1)*x)/sin((p+1)*x) are returned instead (sign-equivalent
    to the limiting eigenfunctions, which is all nodal analysis needs).
    """
    if not (-HALF_WIDTH <= x <= HALF_WIDTH):
        raise ValueError(f"x = {x} outside [-pi/2, pi/2]")
    p, h, a = sol.p, sol.h, sol.alpha
    even = p % 2 == 0
    if math.isinf(h):
        k = p + 1
        return math.cos(k * x) if even else math.sin(k * x)
    if h == 0.0:
        return math.cos(p * x) if even else math.sin(p * x)
    if even:
        return math.cos(a * x / PI) / math.sin(a / 2.0)
    return math.sin(a * x / PI) / math.cos(a / 2.0)


@dataclass(frozen=True)
class BareFactor:
    """Unnormalized trigonometric factor of a branch: cos(k*x) or sin(k*x).

    k = alpha_p(h)/pi for finite h, and the integer limit frequency at
    h in {0, inf}.  Vectorized over numpy arrays; good enough for every
    sign-based nodal computation because it differs from the eigenfunction
    by a nonzero constant.
    """

    kind: str  # "cos" | "sin"
    k: float

    def __call__(self, x):
        return np.cos(self.k * x) if self.kind == "cos" else np.sin(self.k * x)

    def deriv(self, x):
        if self.kind == "cos":
            return -self.k * np.sin(self.k * x)
        return self.k * np.cos(self.k * x)

    def second(self, x):
        return -self.k * self.k * self(x)


def bare_factor(p: int, h: float) -> BareFactor:
    """The sign-carrying factor of branch p at parameter h."""
    h = validate_robin_param(h)
    even = p % 2 == 0
    if math.isinf(h):
        k = float(p + 1)
    elif h == 0.0:
        k = float(p)
    else:
        k = alpha(p, h) / PI
    return BareFactor(kind="cos" if even else "sin", k=k)


def a_coefficient(p: int, h: float) -> float:
    """a_p(h) = h*pi + alpha_p^2/2 + h^2*pi^2/2 (positive for h > 0)."""
    ap = alpha(p, h)
    return h * PI + 0.5 * ap * ap + 0.5 * (h * PI) ** 2


def alpha_derivative(p: int, h: float) -> float:
    """d(alpha_p)/dh from the closed-form ODE alpha'/alpha * a_p = pi.

    Only defined for 0 < h < inf; the endpoint behaviour (alpha_0 -> 0 as
    h -> 0) is excluded rather than extrapolated.
    """
    h = validate_robin_param(h)
    if h == 0.0 or math.isinf(h):
        raise ValueError("alpha_derivative requires 0 < h < inf")
    return PI * alpha(p, h) / a_coefficient(p, h)


@dataclass(frozen=True)
class AsymptoticRow:
    h: float
    alpha: float
    expansion: float
    scaled_residual: float  # (alpha - expansion) * h^2


def alpha_asymptotic_check(p: int, h_list) -> list[AsymptoticRow]:
    """Compare alpha_p(h) against the first-order long-range expansion.

    The expansion is (p+1)*pi - 2*(p+1)/h; the scaled residual
    (alpha - expansion)*h^2 must stay bounded as h grows, which pins the
    1/h^2 coefficient.  Intended for odd p (p = 1 and p = 5 are the cases
    exercised downstream) but valid for every branch.
    """
    rows = []
    for h in h_list:
        h = float(h)
        if h < 10.0:
            raise ValueError("asymptotic check requires h >= 10")
        a = alpha(p, h)
        exp_val = (p + 1) * PI - 2.0 * (p + 1) / h
        rows.append(AsymptoticRow(h=h, alpha=a, expansion=exp_val,
                                  scaled_residual=(a - exp_val) * h * h))
    return rows
