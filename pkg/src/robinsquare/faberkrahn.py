"""First Robin eigenvalue of the unit-area disc and the Pleijel-type
exclusion inequalities.

The ground state of the disc D_1 of area 1 (radius 1/sqrt(pi)) is
J0(alpha*sqrt(pi)*r) with eigenvalue pi*alpha^2, where alpha is the first
positive root of the secular equation

    alpha*sqrt(pi)*J0'(alpha) + h*J0(alpha) = 0.

Bessel J0/J1 are evaluated by the power series for |x| <= 8 and a 128-node
Gauss-Legendre discretization of the cosine integral representation beyond
(uniformly ~1e-14 on the range of interest), so the module carries its own
special functions.

The combination with the counting bounds gives the Courant-sharp exclusion
function f(lambda) = 2/lambda - 6/sqrt(lambda) + pi/4 - pi/j**2 (j the
first J0 zero), increasing for lambda >= 4/9 with the sign change between
597 and 598.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

PI = math.pi

_SERIES_CUT = 8.0
_SERIES_TERMS = 60


def _j0_series(x: float) -> float:
    q = -0.25 * x * x
    term, total = 1.0, 1.0
    for k in range(1, _SERIES_TERMS):
        term *= q / (k * k)
        total += term
        if abs(term) < 1e-18 * abs(total):
            break
    return total


def _j1_series(x: float) -> float:
    q = -0.25 * x * x
    term, total = 0.5 * x, 0.5 * x
    for k in range(1, _SERIES_TERMS):
        term *= q / (k * (k + 1))
        total += term
        if abs(term) < 1e-18 * (abs(total) + 1e-300):
            break
    return total


@lru_cache(maxsize=1)
def _gauss_nodes() -> tuple[np.ndarray, np.ndarray]:
    # nodes/weights for integrals over [0, pi]
    t, w = np.polynomial.legendre.leggauss(128)
    return 0.5 * PI * (t + 1.0), 0.5 * PI * w


def _j0_integral(x: float) -> float:
    # J0(x) = (1/pi) * int_0^pi cos(x sin t) dt
    t, w = _gauss_nodes()
    return float(np.dot(w, np.cos(x * np.sin(t)))) / PI


def _j1_integral(x: float) -> float:
    # J1(x) = (1/pi) * int_0^pi cos(t - x sin t) dt
    t, w = _gauss_nodes()
    return float(np.dot(w, np.cos(t - x * np.sin(t)))) / PI


def bessel_j0(x: float) -> float:
    x = abs(float(x))
    return _j0_series(x) if x <= _SERIES_CUT else _j0_integral(x)


def bessel_j1(x: float) -> float:
    xf = float(x)
    s = -1.0 if xf < 0 else 1.0
    xa = abs(xf)
    return s * (_j1_series(xa) if xa <= _SERIES_CUT else _j1_integral(xa))


def bessel_j0_prime(x: float) -> float:
    """J0'(x) = -J1(x)."""
    return -bessel_j1(x)


@lru_cache(maxsize=1)
def j0_first_zero() -> float:
    """First positive zero of J0 (~2.404826), by bisection plus Newton."""
    lo, hi = 2.0, 3.0
    flo = bessel_j0(lo)
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        fm = bessel_j0(mid)
        if flo * fm <= 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
    j = 0.5 * (lo + hi)
    for _ in range(3):
        j -= bessel_j0(j) / bessel_j0_prime(j)
    return j


def small_h_slope() -> float:
    """Slope of lambda_1(h) at h = 0 for the unit-area disc.

    Equals perimeter/area = 2*sqrt(pi): expanding the secular equation with
    J0'(alpha) ~ -alpha/2 gives alpha^2 ~ 2h/sqrt(pi), hence
    pi*alpha^2 ~ 2*sqrt(pi)*h.
    """
    return 2.0 * math.sqrt(PI)


def large_h_defect() -> float:
    """Coefficient c in lambda_1(h) = pi*j^2 - c/h + O(1/h^2): 2*pi^1.5*j^2."""
    j = j0_first_zero()
    return 2.0 * PI ** 1.5 * j * j


@dataclass(frozen=True)
class DiscGroundState:
    h_tilde: float
    alpha_root: float
    lambda1: float


def disc_ground_state(h_tilde: float) -> DiscGroundState:
    """First Robin eigenvalue of the unit-area disc at parameter h_tilde.

    alpha_root is the first positive secular root (in (0, j]); lambda1 =
    pi*alpha_root^2, increasing in h_tilde from 0 to pi*j^2.
    """
    h_tilde = float(h_tilde)
    if math.isnan(h_tilde) or h_tilde < 0.0:
        raise ValueError("h_tilde must be >= 0 or inf")
    j = j0_first_zero()
    if h_tilde == 0.0:
        return DiscGroundState(h_tilde=0.0, alpha_root=0.0, lambda1=0.0)
    if math.isinf(h_tilde):
        return DiscGroundState(h_tilde=h_tilde, alpha_root=j, lambda1=PI * j * j)
    sq = math.sqrt(PI)

    def secular(a: float) -> float:
        return -a * sq * bessel_j1(a) + h_tilde * bessel_j0(a)

    lo, hi = 1e-12, j  # lower bracket guards against the trivial root alpha = 0
    flo = secular(lo)
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        fm = secular(mid)
        if flo * fm <= 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
        if hi - lo <= 1e-16 * hi:
            break
    a = 0.5 * (lo + hi)
    return DiscGroundState(h_tilde=h_tilde, alpha_root=a, lambda1=PI * a * a)


def scaled_fk_bound(h: float, area: float) -> float:
    """Lower bound for the first Robin eigenvalue of any domain of the given
    area: lambda_1(h, area) = lambda_1(h*sqrt(area), D_1) / area."""
    if area <= 0.0:
        raise ValueError("area must be positive")
    if math.isinf(h):
        return disc_ground_state(math.inf).lambda1 / area
    return disc_ground_state(h * math.sqrt(area)).lambda1 / area


def pleijel_f(lam: float) -> float:
    """f(lambda) = 2/lambda - 6/sqrt(lambda) + pi/4 - pi/j^2.

    Increasing for lambda >= 4/9; f(597) < 0 < f(598).  Positivity excludes
    an eigenvalue from being Courant-sharp.
    """
    j = j0_first_zero()
    return 2.0 / lam - 6.0 / math.sqrt(lam) + PI / 4.0 - PI / (j * j)


@dataclass(frozen=True)
class PleijelCheck:
    n: int | None
    lam: float
    lhs: float
    verdict: str  # "excluded" | "possible"


def pleijel_exclusion(n: int | None, lam: float) -> PleijelCheck:
    """Courant-sharp exclusion test at (n, lambda).

    With an explicit index n the test is (n - 4*sqrt(lambda))/lambda against
    pi/j^2: at or above the constant means excluded.  Without n, the counting
    lower bound n > pi/4*lambda - 2*sqrt(lambda) + 2 is substituted, which
    turns the test into f(lambda) > 0 (so every lambda >= 598 is excluded).
    """
    if lam < 2.0:
        raise ValueError("lam must be >= 2")
    j = j0_first_zero()
    fk_const = PI / (j * j)
    if n is None:
        lhs = pleijel_f(lam) + fk_const
        excluded = pleijel_f(lam) > 0.0
    else:
        lhs = (n - 4.0 * math.sqrt(lam)) / lam
        excluded = lhs >= fk_const
    return PleijelCheck(n=n, lam=lam, lhs=lhs,
                        verdict="excluded" if excluded else "possible")


def dirichlet_candidates() -> list[int]:
    """Dirichlet indices surviving the quotient test n/lambda_n < pi/j^2
    among eigenvalues lambda_n <= 50.  Returns [1, 2, 4, 5, 7, 9]."""
    from . import spectrum2d

    j = j0_first_zero()
    fk_const = PI / (j * j)
    table = spectrum2d.enumerate_spectrum(math.inf, 50.0 + 1e-9)
    survivors = []
    k = 0
    for cluster in table.clusters:
        lam = table.entries[cluster[0]].value
        for _ in cluster:
            k += 1
            if lam <= 50.0 and k / lam < fk_const:
                survivors.append(k)
    return survivors
