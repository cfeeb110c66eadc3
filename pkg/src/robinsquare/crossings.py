"""Crossings of eigenvalue curves h -> lambda_{p,q}(h) of the square.

Two distinct (canonicalized) mode labels can cross for at most one h > 0:
at any zero of the gap

    sigma(h) = (alpha_p^2 + alpha_q^2 - alpha_p'^2 - alpha_q'^2)/pi^2

the derivative sigma'(h) has a fixed sign, so sign-change bisection plus a
Newton step with the closed-form derivative locates the crossing.  The
module also solves threshold equations lambda_{p,q}(h) = C (unique by
strict monotonicity in h) and scans label sets for all pairwise crossings
in a window.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import robin1d, spectrum2d
from .spectrum2d import ModeLabel

PI = math.pi


def _canonical(label) -> ModeLabel:
    p, q = label
    if p < 0 or q < 0:
        raise ValueError("mode indices must be nonnegative")
    return ModeLabel(min(p, q), max(p, q))


@dataclass(frozen=True)
class CurvePair:
    """Pair of canonicalized labels (p <= q inside each).

    The caller's order is preserved: sigma() is the gap lambda_a - lambda_b
    and flips sign when the labels are swapped.
    """

    a: ModeLabel
    b: ModeLabel

    @staticmethod
    def make(a, b) -> "CurvePair":
        a, b = _canonical(a), _canonical(b)
        if a == b:
            raise ValueError("curve pair needs two distinct labels")
        return CurvePair(a=a, b=b)


@dataclass(frozen=True)
class CrossingEvent:
    pair: CurvePair
    h_star: float
    lambda_star: float
    sigma_prime_sign: int      # sign of sigma'(h_star)
    scan_sign_changes: int     # sign changes of sigma on the log scan grid


def sigma(pair: CurvePair, h: float) -> float:
    """Signed gap lambda_a(h) - lambda_b(h)."""
    la = spectrum2d.eigenvalue(pair.a, h).value
    lb = spectrum2d.eigenvalue(pair.b, h).value
    return la - lb


def sigma_prime(pair: CurvePair, h: float) -> float:
    """Closed-form d(sigma)/dh = (2/pi) * sum ± alpha_k^2 / a_k(h)."""
    if not (0.0 < h < math.inf):
        raise ValueError("sigma_prime requires 0 < h < inf")
    total = 0.0
    for label, sign in ((pair.a, +1.0), (pair.b, -1.0)):
        for k in label:
            ak = robin1d.alpha(k, h)
            total += sign * ak * ak / robin1d.a_coefficient(k, h)
    return 2.0 / PI * total


def uniqueness_scan(pair: CurvePair, h_lo: float = 1e-3, h_hi: float = 1e3,
                    points: int = 512) -> int:
    """Number of sign changes of sigma on a log-spaced grid.

    Heuristic support for at-most-one-crossing; 0 or 1 is expected for
    every genuine pair.
    """
    hs = np.geomspace(h_lo, h_hi, points)
    vals = np.array([sigma(pair, h) for h in hs])
    signs = np.sign(vals)
    nz = signs[signs != 0]
    return int(np.count_nonzero(nz[1:] * nz[:-1] < 0))


def find_crossing(pair: CurvePair, h_lo: float, h_hi: float,
                  certify: bool = True) -> CrossingEvent | None:
    """The unique sigma root in [h_lo, h_hi], or None without a sign change.

    Bisection to ~1e-12 relative width, then one Newton step with the
    closed-form sigma'.  The returned event carries the sign of sigma' at
    the root and (optionally) the log-grid sign-change count as a
    uniqueness certificate.
    """
    if not (0.0 < h_lo < h_hi < math.inf):
        raise ValueError("need 0 < h_lo < h_hi < inf")
    f_lo, f_hi = sigma(pair, h_lo), sigma(pair, h_hi)
    if f_lo == 0.0:
        root = h_lo
    elif f_hi == 0.0:
        root = h_hi
    elif f_lo * f_hi > 0.0:
        return None
    else:
        lo, hi, flo = h_lo, h_hi, f_lo
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            fm = sigma(pair, mid)
            if flo * fm <= 0.0:
                hi = mid
            else:
                lo, flo = mid, fm
            if hi - lo <= 1e-13 * hi:
                break
        root = 0.5 * (lo + hi)
        d = sigma_prime(pair, root)
        if d != 0.0:
            step = sigma(pair, root) / d
            if abs(step) < (hi - lo):
                root -= step
    lam_star = spectrum2d.eigenvalue(pair.a, root).value
    sp = sigma_prime(pair, root)
    changes = uniqueness_scan(pair) if certify else 1
    return CrossingEvent(pair=pair, h_star=root, lambda_star=lam_star,
                         sigma_prime_sign=int(math.copysign(1.0, sp)),
                         scan_sign_changes=changes)


def threshold_h(label, level: float) -> float:
    """The unique h with lambda_{p,q}(h) = level.

    level must lie strictly between the Neumann value p^2 + q^2 and the
    Dirichlet value (p+1)^2 + (q+1)^2.
    """
    label = _canonical(label)
    lo_val = float(label.p ** 2 + label.q ** 2)
    hi_val = float((label.p + 1) ** 2 + (label.q + 1) ** 2)
    if not (lo_val < level < hi_val):
        raise ValueError(
            f"level {level} outside open range ({lo_val}, {hi_val}) of {label}")

    def gap(h: float) -> float:
        return spectrum2d.eigenvalue(label, h).value - level

    lo, hi = 1e-10, 1e10
    flo = gap(lo)
    if flo > 0.0 or gap(hi) < 0.0:
        raise ValueError("bracket failure: level too close to a limit value")
    for _ in range(200):
        mid = math.sqrt(lo * hi)  # bisect in log h
        fm = gap(mid)
        if flo * fm <= 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
        if hi - lo <= 1e-14 * hi:
            break
    h = math.sqrt(lo * hi)
    # Newton polish with d(lambda)/dh = (2/pi^2) sum alpha_k alpha_k'
    for _ in range(2):
        d = sum(2.0 * robin1d.alpha(k, h) * robin1d.alpha_derivative(k, h)
                for k in label) / (PI * PI)
        if d == 0.0:
            break
        h -= gap(h) / d
    return h


def multi_crossing_scan(labels, h_lo: float, h_hi: float,
                        grid: int = 2048) -> list[CrossingEvent]:
    """All pairwise crossings among a label set inside [h_lo, h_hi].

    Each pair is scanned for sigma sign changes on a uniform grid, every
    change bisected, and the events returned sorted by h.
    """
    canon = []
    for lab in labels:
        c = _canonical(lab)
        if c not in canon:
            canon.append(c)
    events: list[CrossingEvent] = []
    if len(canon) < 2:
        return events
    hs = np.linspace(h_lo, h_hi, grid)
    for a, b in itertools.combinations(canon, 2):
        pair = CurvePair.make(a, b)
        vals = np.array([sigma(pair, h) for h in hs])
        signs = np.sign(vals)
        for i in range(len(hs) - 1):
            if signs[i] != 0 and signs[i] * signs[i + 1] < 0:
                ev = find_crossing(pair, hs[i], hs[i + 1], certify=False)
                if ev is not None:
                    events.append(ev)
    events.sort(key=lambda e: e.h_star)
    return events


@dataclass(frozen=True)
class OrderingReport:
    pair: CurvePair
    wide: ModeLabel     # the label with the wider index spread
    narrow: ModeLabel
    h_star: float
    ordered_after: bool   # wide curve below narrow curve for h > h_star
    ordered_before: bool  # opposite order for h < h_star


def ordering_after_crossing(event: CrossingEvent,
                            factors=(1.2, 2.0, 5.0, 30.0)) -> OrderingReport:
    """Check the post-crossing order of the two curves.

    Writing the labels as (p, q) and (p', q') with p < p' <= q' < q (always
    possible for a crossing pair), the wide-spread curve (p, q) lies below
    the narrow one after the crossing and above it before.
    """
    a, b = event.pair.a, event.pair.b
    if a.p == b.p or a.q == b.q:
        raise ValueError("labels of a crossing pair must differ in both indices")
    wide, narrow = (a, b) if a.p < b.p else (b, a)
    if not (wide.p < narrow.p <= narrow.q < wide.q):
        raise ValueError(f"labels {a}, {b} not nested as p < p' <= q' < q")
    h_star = event.h_star

    def gap(h: float) -> float:
        return (spectrum2d.eigenvalue(wide, h).value
                - spectrum2d.eigenvalue(narrow, h).value)

    after = all(gap(h_star * f) < 0.0 for f in factors)
    before = all(gap(h_star / f) > 0.0 for f in factors)
    return OrderingReport(pair=event.pair, wide=wide, narrow=narrow,
                          h_star=h_star, ordered_after=after,
                          ordered_before=before)
