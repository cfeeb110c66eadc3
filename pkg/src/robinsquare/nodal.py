"""Nodal analysis of the theta-families of square eigenfunctions.

A two-dimensional eigenspace spanned by the product modes (p, q) and
(q, p) is swept by

    Phi(x, y) = cos(theta)*f_p(x)*f_q(y) + sin(theta)*f_q(x)*f_p(y)

where f_k is the bare trigonometric factor of branch k (cos(alpha_k x/pi)
for k even, sin(alpha_k x/pi) for k odd).  Phi differs from the normalized
eigenfunction by a nonzero constant, so nodal sets, censuses and critical
points are unaffected.

The census counter classifies grid cells by corner signs, excludes
mixed-sign cells as nodal-set thickening (one level of 4x refinement is
folded in: the working lattice is 4x the requested resolution), labels the
same-sign cells with 4-connectivity, and only reports a count after it
agrees with the one recomputed at twice the resolution.

Boundary zeros and interior critical points are located analytically from
the one-dimensional restrictions: tangential (double) zeros, which carry
the transition structure at the critical angles, are detected as sign
changes of the derivative at which the function itself vanishes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage

from . import robin1d
from .robin1d import HALF_WIDTH, BareFactor

PI = math.pi

#: 4-connectivity structuring element for component labelling.
_CROSS = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=bool)

#: Relative tolerance deciding that a 1D extremum is a (double) zero.
_TANGENT_RTOL = 1e-7

#: Minimum separation between distinct detected points.
_DEDUPE = 1e-6

#: Points closer than this to the boundary belong to the boundary analysis,
#: never to the interior critical tally.
_INTERIOR_MARGIN = 1e-3


class CensusUnstableError(RuntimeError):
    """Nodal-domain count failed to stabilize between two resolutions."""


class UnsupportedCaseError(ValueError):
    """Requested analysis is structurally undefined (e.g. boundary zeros of
    a Dirichlet family, whose boundary trace vanishes identically)."""


def _snap_coefficients(theta: float) -> tuple[float, float]:
    """cos/sin of theta with exact special combinations restored.

    Floating cos(3*pi/4) + sin(3*pi/4) is ~1e-16 instead of 0; snapping
    keeps the forced diagonal nodal lines exactly zero on the grid.
    """
    c, s = math.cos(theta), math.sin(theta)
    if abs(c) < 1e-15:
        c = 0.0
    if abs(s) < 1e-15:
        s = 0.0
    if abs(c + s) < 1e-14:
        s = -c
    elif abs(c - s) < 1e-14:
        s = c
    return c, s


@dataclass(frozen=True)
class ThetaFamily:
    """One member of the theta-swept eigenfunction family for labels (p, q).

    theta is reduced modulo pi (the half-turn flips the overall sign, which
    changes nothing nodal).  symmetric_factor = (p+q) mod 2 controls the
    central symmetry Phi(-x,-y) = (-1)^(p+q) Phi(x,y).
    """

    h: float
    theta: float
    p: int
    q: int

    def __post_init__(self):
        object.__setattr__(self, "h", robin1d.validate_robin_param(self.h))
        object.__setattr__(self, "theta", float(self.theta) % PI)

    @property
    def symmetric_factor(self) -> int:
        return (self.p + self.q) % 2

    def coefficients(self) -> tuple[float, float]:
        return _snap_coefficients(self.theta)

    def factors(self) -> tuple[BareFactor, BareFactor]:
        return robin1d.bare_factor(self.p, self.h), robin1d.bare_factor(self.q, self.h)

    def lambda_value(self) -> float:
        from . import spectrum2d
        return spectrum2d.eigenvalue((self.p, self.q), self.h).value


def eval_phi(family: ThetaFamily, x: float, y: float) -> float:
    """Phi at a point of the closed square."""
    if not (-HALF_WIDTH <= x <= HALF_WIDTH and -HALF_WIDTH <= y <= HALF_WIDTH):
        raise ValueError(f"({x}, {y}) outside the closed square")
    c, s = family.coefficients()
    fp, fq = family.factors()
    # grouping the factor products keeps the forced diagonal exactly zero
    # for the snapped antisymmetric combination (s = -c)
    return c * (float(fp(x)) * float(fq(y))) + s * (float(fq(x)) * float(fp(y)))


def _phi_gradient(family: ThetaFamily, x: float, y: float) -> tuple[float, float]:
    c, s = family.coefficients()
    fp, fq = family.factors()
    gx = c * float(fp.deriv(x)) * float(fq(y)) + s * float(fq.deriv(x)) * float(fp(y))
    gy = c * float(fp(x)) * float(fq.deriv(y)) + s * float(fq(x)) * float(fp.deriv(y))
    return gx, gy


def _phi_grid(family: ThetaFamily, axis: np.ndarray) -> np.ndarray:
    """Phi on the tensor grid axis x axis (separable outer products)."""
    c, s = family.coefficients()
    fp, fq = family.factors()
    vp, vq = fp(axis), fq(axis)
    return c * np.outer(vp, vq) + s * np.outer(vq, vp)


# ----------------------------------------------------------------------
# one-dimensional zero detection (shared by boundary and critical sweeps)
# ----------------------------------------------------------------------

def _bisect(fun, lo: float, hi: float, iters: int = 90) -> float:
    flo = fun(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = fun(mid)
        if flo * fm <= 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class LineZero:
    t: float
    tangential: bool  # double zero (no sign change)


def _line_zeros(fun, dfun, samples: int = 16384,
                lo: float = -HALF_WIDTH, hi: float = HALF_WIDTH,
                open_interval: bool = True) -> list[LineZero]:
    """Zeros of a smooth scalar function on an interval.

    Transversal zeros come from sign changes of fun (values within
    roundoff of zero are treated as exact zeros, so forced zeros on grid
    points and noise-level runs near the interval ends do not fabricate
    crossings).  Tangential (even order) zeros come from sign changes of
    dfun at which |fun| is negligible relative to its overall scale.
    """
    eps = (hi - lo) * 1e-9 if open_interval else 0.0
    ts = np.linspace(lo + eps, hi - eps, samples)
    vals = np.asarray(fun(ts), dtype=float)
    scale = float(np.max(np.abs(vals)))
    if scale == 0.0:
        raise UnsupportedCaseError("restriction vanishes identically")
    sg = np.sign(vals)
    sg[np.abs(vals) <= 1e-12 * scale] = 0.0
    zeros: list[LineZero] = []
    nz = np.nonzero(sg)[0]
    for k in range(len(nz) - 1):
        i, j = int(nz[k]), int(nz[k + 1])
        if sg[i] * sg[j] < 0:
            if j == i + 1:
                t0 = _bisect(lambda t: float(fun(t)), ts[i], ts[j])
            else:
                # sign flip across a run of numerical zeros
                t0 = 0.5 * (ts[i + 1] + ts[j - 1])
            zeros.append(LineZero(t=t0, tangential=False))
    dvals = np.asarray(dfun(ts), dtype=float)
    dsg = np.sign(dvals)
    didx = np.nonzero((dsg[:-1] != 0) & (dsg[:-1] * dsg[1:] < 0))[0]
    for i in didx:
        t0 = _bisect(lambda t: float(dfun(t)), ts[i], ts[i + 1])
        if abs(float(fun(t0))) <= _TANGENT_RTOL * scale and \
                all(abs(t0 - z.t) > _DEDUPE for z in zeros):
            zeros.append(LineZero(t=t0, tangential=True))
    zeros.sort(key=lambda z: z.t)
    return zeros


# ----------------------------------------------------------------------
# boundary zeros
# ----------------------------------------------------------------------

SIDES = ("top", "bottom", "left", "right")


@dataclass(frozen=True)
class BoundaryZeros:
    side: str
    count: int
    locations: tuple[float, ...]
    tangential: tuple[bool, ...]


def _side_restriction(family: ThetaFamily, side: str):
    """(fun, dfun) for Phi restricted to one side, as functions of the
    free coordinate running over (-pi/2, pi/2)."""
    c, s = family.coefficients()
    fp, fq = family.factors()
    e = HALF_WIDTH if side in ("top", "right") else -HALF_WIDTH
    if side in ("top", "bottom"):
        # psi(x) = c*fp(x)*fq(e) + s*fq(x)*fp(e)
        A, B = c * float(fq(e)), s * float(fp(e))
        fun = lambda x: A * fp(x) + B * fq(x)
        dfun = lambda x: A * fp.deriv(x) + B * fq.deriv(x)
    else:
        # psi(y) = c*fp(e)*fq(y) + s*fq(e)*fp(y)
        A, B = c * float(fp(e)), s * float(fq(e))
        fun = lambda y: A * fq(y) + B * fp(y)
        dfun = lambda y: A * fq.deriv(y) + B * fp.deriv(y)
    return fun, dfun


def boundary_zero_count(family: ThetaFamily, side: str) -> BoundaryZeros:
    """Zeros of Phi on one open side, tangencies included.

    Rejects Dirichlet families (h = inf), whose boundary trace vanishes
    identically.  Corners are not part of any side; see corner_zeros.
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    if math.isinf(family.h):
        raise UnsupportedCaseError("boundary trace of a Dirichlet family is zero")
    fun, dfun = _side_restriction(family, side)
    zeros = _line_zeros(fun, dfun)
    return BoundaryZeros(side=side,
                         count=len(zeros),
                         locations=tuple(z.t for z in zeros),
                         tangential=tuple(z.tangential for z in zeros))


def corner_zeros(family: ThetaFamily) -> list[tuple[float, float]]:
    """Corners of the square lying in the nodal set.

    Finite h: |Phi(corner)| below a relative threshold.  Dirichlet: a
    corner counts when the mixed derivative d2Phi/dxdy vanishes there
    (a nodal line then runs into the corner, e.g. the diagonals of the
    antisymmetric combination).
    """
    c, s = family.coefficients()
    fp, fq = family.factors()
    out = []
    scale = max(abs(c), abs(s))
    for ex in (HALF_WIDTH, -HALF_WIDTH):
        for ey in (HALF_WIDTH, -HALF_WIDTH):
            if math.isinf(family.h):
                val = (c * float(fp.deriv(ex)) * float(fq.deriv(ey))
                       + s * float(fq.deriv(ex)) * float(fp.deriv(ey)))
                ref = scale * fp.k * fq.k
            else:
                val = (c * float(fp(ex)) * float(fq(ey))
                       + s * float(fq(ex)) * float(fp(ey)))
                ref = scale
            if abs(val) <= 1e-9 * ref:
                out.append((ex, ey))
    return out


def total_boundary_zeros(family: ThetaFamily) -> int:
    """Distinct nodal points on the boundary: four open sides plus corners."""
    total = sum(boundary_zero_count(family, side).count for side in SIDES)
    return total + len(corner_zeros(family))


# ----------------------------------------------------------------------
# interior critical points
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CriticalPoint:
    x: float
    y: float
    degenerate: bool = False


def _axis_sweeps(family: ThetaFamily) -> list[CriticalPoint]:
    """Critical points on the coordinate axes when both factors are odd
    (the axes are then forced nodal lines; a critical point is a zero of
    the transverse derivative along the line)."""
    if family.p % 2 == 0 or family.q % 2 == 0:
        return []
    c, s = family.coefficients()
    fp, fq = family.factors()
    pts: list[CriticalPoint] = []
    # x-axis (y = 0): dPhi/dy(x, 0) = c*fp(x)*fq'(0) + s*fq(x)*fp'(0)
    A, B = c * float(fq.deriv(0.0)), s * float(fp.deriv(0.0))
    fun = lambda x: A * fp(x) + B * fq(x)
    dfun = lambda x: A * fp.deriv(x) + B * fq.deriv(x)
    for z in _line_zeros(fun, dfun):
        pts.append(CriticalPoint(x=z.t, y=0.0, degenerate=z.tangential))
    # y-axis (x = 0): dPhi/dx(0, y) = c*fp'(0)*fq(y) + s*fq'(0)*fp(y)
    A, B = c * float(fp.deriv(0.0)), s * float(fq.deriv(0.0))
    fun = lambda y: A * fq(y) + B * fp(y)
    dfun = lambda y: A * fq.deriv(y) + B * fp.deriv(y)
    for z in _line_zeros(fun, dfun):
        pts.append(CriticalPoint(x=0.0, y=z.t, degenerate=z.tangential))
    return pts


def _diagonal_sweeps(family: ThetaFamily) -> list[CriticalPoint]:
    """Critical points on the diagonals, forced nodal lines exactly for the
    antisymmetric combination cos(theta) + sin(theta) = 0.  On x = y the
    transverse gradient component is the Wronskian-type combination
    fp'(t)*fq(t) - fq'(t)*fp(t)."""
    c, s = family.coefficients()
    if c + s != 0.0:
        return []
    fp, fq = family.factors()
    fun = lambda t: fp.deriv(t) * fq(t) - fq.deriv(t) * fp(t)
    # W' = fp''*fq - fq''*fp = (kq^2 - kp^2) * fp * fq
    dfun = lambda t: (fq.k ** 2 - fp.k ** 2) * fp(t) * fq(t)
    pts = []
    for z in _line_zeros(fun, dfun):
        pts.append(CriticalPoint(x=z.t, y=z.t, degenerate=z.tangential))
        if abs(z.t) > _DEDUPE:  # anti-diagonal mirror (origin shared)
            pts.append(CriticalPoint(x=z.t, y=-z.t, degenerate=z.tangential))
    return pts


def _newton_sweep(family: ThetaFamily, seeds_per_axis: int = 48) -> list[CriticalPoint]:
    """Generic interior critical points: batched Newton on grad(Phi) = 0
    from a coarse seed lattice, filtered to near-zero level."""
    c, s = family.coefficients()
    fp, fq = family.factors()
    ax = np.linspace(-HALF_WIDTH * 0.98, HALF_WIDTH * 0.98, seeds_per_axis)
    X, Y = np.meshgrid(ax, ax)
    x, y = X.ravel().copy(), Y.ravel().copy()

    def grad(xv, yv):
        gx = c * fp.deriv(xv) * fq(yv) + s * fq.deriv(xv) * fp(yv)
        gy = c * fp(xv) * fq.deriv(yv) + s * fq(xv) * fp.deriv(yv)
        return gx, gy

    for _ in range(40):
        gx, gy = grad(x, y)
        hxx = c * fp.second(x) * fq(y) + s * fq.second(x) * fp(y)
        hyy = c * fp(x) * fq.second(y) + s * fq(x) * fp.second(y)
        hxy = c * fp.deriv(x) * fq.deriv(y) + s * fq.deriv(x) * fp.deriv(y)
        det = hxx * hyy - hxy * hxy
        bad = np.abs(det) < 1e-300
        det = np.where(bad, 1.0, det)
        dx = (hyy * gx - hxy * gy) / det
        dy = (hxx * gy - hxy * gx) / det
        step = np.hypot(dx, dy)
        cap = np.minimum(1.0, 0.2 / np.maximum(step, 1e-30))
        x = x - dx * cap
        y = y - dy * cap
    phi = c * fp(x) * fq(y) + s * fq(x) * fp(y)
    gx, gy = grad(x, y)
    scale = float(np.max(np.abs(_phi_grid(family, np.linspace(-HALF_WIDTH, HALF_WIDTH, 257)))))
    gscale = max(fp.k, fq.k) * scale
    # a margin keeps boundary structure (everything on a Dirichlet boundary
    # is nodal, corners included) out of the interior tally, and the tight
    # gradient tolerance rejects iterates that stalled on the way there
    inside = (np.abs(x) < HALF_WIDTH - _INTERIOR_MARGIN) & \
             (np.abs(y) < HALF_WIDTH - _INTERIOR_MARGIN)
    keep = inside & (np.abs(phi) <= 1e-8 * scale) & (np.hypot(gx, gy) <= 1e-9 * gscale)
    return [CriticalPoint(x=float(xi), y=float(yi))
            for xi, yi in zip(x[keep], y[keep])]


def interior_critical_points(family: ThetaFamily) -> list[CriticalPoint]:
    """Zeros of Phi with vanishing gradient, strictly inside the square.

    Structured sweeps along forced nodal lines (axes for odd-odd labels,
    diagonals for the antisymmetric combination) catch the degenerate
    tangency points that plain Newton iteration cannot; a batched Newton
    pass picks up everything away from those lines.
    """
    pts = _axis_sweeps(family) + _diagonal_sweeps(family) + _newton_sweep(family)
    out: list[CriticalPoint] = []
    for pt in pts:
        if max(abs(pt.x), abs(pt.y)) >= HALF_WIDTH - _INTERIOR_MARGIN:
            continue
        if all((pt.x - o.x) ** 2 + (pt.y - o.y) ** 2 > _DEDUPE ** 2 for o in out):
            out.append(pt)
    return out


# ----------------------------------------------------------------------
# nodal domain census
# ----------------------------------------------------------------------

@dataclass
class NodalCensus:
    """Count of nodal domains with boundary and critical-point tallies.

    boundary_zeros is None for Dirichlet families (identically zero trace).
    domain_areas are upper estimates: pure-cell area plus the adjacent
    mixed-cell halo, suitable as the area argument of a lower eigenvalue
    bound.  mu_inner counts domains whose closure meets the boundary in at
    most isolated points; mu_outer the rest.
    """

    domains: int
    boundary_zeros: int | None
    interior_critical: int
    resolution: int
    refined: bool = True
    mu_inner: int = 0
    mu_outer: int = 0
    domain_areas: tuple[float, ...] = ()
    corner_zero_count: int = 0
    side_counts: dict = field(default_factory=dict)


def _cell_signs(phi: np.ndarray) -> np.ndarray:
    """Classify cells from corner samples: +1 all positive, -1 all negative,
    0 mixed (any sign disagreement or exact zero)."""
    sg = np.sign(phi)
    c00, c01, c10, c11 = sg[:-1, :-1], sg[:-1, 1:], sg[1:, :-1], sg[1:, 1:]
    pos = (c00 > 0) & (c01 > 0) & (c10 > 0) & (c11 > 0)
    neg = (c00 < 0) & (c01 < 0) & (c10 < 0) & (c11 < 0)
    out = np.zeros(pos.shape, dtype=np.int8)
    out[pos] = 1
    out[neg] = -1
    return out


def _label_components(cells: np.ndarray) -> tuple[np.ndarray, int]:
    lab_pos, n_pos = ndimage.label(cells == 1, structure=_CROSS)
    lab_neg, n_neg = ndimage.label(cells == -1, structure=_CROSS)
    labels = lab_pos + np.where(lab_neg > 0, lab_neg + n_pos, 0)
    return labels, n_pos + n_neg


def _count_at(family: ThetaFamily, fine: int):
    axis = np.linspace(-HALF_WIDTH, HALF_WIDTH, fine + 1)
    phi = _phi_grid(family, axis)
    cells = _cell_signs(phi)
    labels, count = _label_components(cells)
    return cells, labels, count


def count_nodal_domains(family: ThetaFamily, resolution: int = 1024) -> NodalCensus:
    """Nodal domains of Phi on a uniform grid.

    resolution is the base cell count per axis; the working lattice is 4x
    finer (the folded-in refinement pass).  The reported count must agree
    with the one at 2x the base resolution, otherwise CensusUnstableError
    signals a parameter too close to a structural transition for the grid.
    """
    if resolution < 64:
        raise ValueError("resolution must be >= 64")
    cells, labels, count = _count_at(family, 4 * resolution)
    _, _, count2 = _count_at(family, 8 * resolution)
    if count != count2:
        raise CensusUnstableError(
            f"count {count} at base resolution {resolution} vs {count2} at "
            f"double resolution; nodal structure unresolved")

    fine = 4 * resolution
    cell_area = (PI / fine) ** 2
    mixed = cells == 0
    areas = []
    mu_inner = mu_outer = 0
    # edge ring where pure cells decide boundary contact; Dirichlet traces
    # zero out the outermost ring, so contact is read one ring in
    ring = 1 if math.isinf(family.h) else 0
    interior_slice = slice(ring + 1, fine - ring - 1)
    for lab in range(1, count + 1):
        comp = labels == lab
        halo = ndimage.binary_dilation(comp, structure=_CROSS) & mixed
        areas.append((int(comp.sum()) + int(halo.sum())) * cell_area)
        edge = comp.copy()
        edge[interior_slice, interior_slice] = False
        if edge.any():
            mu_outer += 1
        else:
            mu_inner += 1

    if math.isinf(family.h):
        boundary = None
        sides = {}
        corners = len(corner_zeros(family))
    else:
        per_side = {side: boundary_zero_count(family, side) for side in SIDES}
        sides = {side: bz.count for side, bz in per_side.items()}
        corners = len(corner_zeros(family))
        boundary = sum(sides.values()) + corners
    critical = interior_critical_points(family)
    return NodalCensus(domains=count,
                       boundary_zeros=boundary,
                       interior_critical=len(critical),
                       resolution=resolution,
                       refined=True,
                       mu_inner=mu_inner,
                       mu_outer=mu_outer,
                       domain_areas=tuple(sorted(areas, reverse=True)),
                       corner_zero_count=corners,
                       side_counts=sides)


# ----------------------------------------------------------------------
# critical angles of the (0,2)-family
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CriticalAngles5:
    theta1: float
    theta2: float
    theta3: float
    q2: float


def q2_ratio(h: float) -> float:
    """q2(h) = cos(alpha_2/2) / cos(alpha_0/2); tends to -3 as h -> inf
    (both cosines vanish in the limit, at rates 3/h and 1/h)."""
    h = robin1d.validate_robin_param(h)
    if math.isinf(h):
        return -3.0
    if h == 0.0:
        raise ValueError("q2 undefined at h = 0 (interval endpoint)")
    a0, a2 = robin1d.alpha(0, h), robin1d.alpha(2, h)
    return math.cos(a2 / 2.0) / math.cos(a0 / 2.0)


def critical_angles_5(h: float) -> CriticalAngles5:
    """Transition angles of the (0,2)-family.

    theta1 = arctan(-1/q2(h)) lands in (0, pi/2) because q2 < 0 for every
    h > 0; theta2 is its complement and theta3 = 3*pi/4 is h-independent.
    """
    q2 = q2_ratio(h)
    theta1 = math.atan(-1.0 / q2)
    return CriticalAngles5(theta1=theta1, theta2=PI / 2.0 - theta1,
                           theta3=0.75 * PI, q2=q2)


def census_sweep_5(h: float, resolution: int = 512,
                   theta_samples=None) -> list[tuple[float, int]]:
    """Domain counts of the (0,2)-family across the five theta ranges.

    Default sampling takes the midpoint of each open range and theta3
    exactly; the expected pattern is (3, 2, 3, 4, 3).
    """
    ang = critical_angles_5(h)
    if theta_samples is None:
        theta_samples = [0.5 * ang.theta1,
                         0.5 * (ang.theta1 + ang.theta2),
                         0.5 * (ang.theta2 + ang.theta3),
                         ang.theta3,
                         0.5 * (ang.theta3 + PI)]
    out = []
    for theta in theta_samples:
        fam = ThetaFamily(h=h, theta=theta, p=0, q=2)
        out.append((theta, count_nodal_domains(fam, resolution).domains))
    return out


# ----------------------------------------------------------------------
# critical geometry of the (5,1)-family
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CriticalAngles25:
    x_c: float
    theta_m: float
    theta_t: float
    delta_theta: float


def solve_xc(h: float) -> float:
    """Root near pi/4 of alpha_5*cot(alpha_5*x/pi) = alpha_1*cot(alpha_1*x/pi).

    Solved on the smooth cross-multiplied form between the first two poles
    of the alpha_5 cotangent, which bracket the root for all h >= 10; the
    long-range behaviour is x_c = pi/4 + 1/(2h) + O(1/h^2).
    """
    if h < 10.0:
        raise ValueError("solve_xc requires h >= 10")
    a1, a5 = robin1d.alpha(1, h), robin1d.alpha(5, h)

    def f(x: float) -> float:
        return (a5 * math.cos(a5 * x / PI) * math.sin(a1 * x / PI)
                - a1 * math.cos(a1 * x / PI) * math.sin(a5 * x / PI))

    lo = PI * PI / a5 + 1e-9
    hi = 2.0 * PI * PI / a5 - 1e-9
    if f(lo) * f(hi) > 0.0:
        raise ValueError("no sign change in the x_c bracket")
    x = _bisect(f, lo, hi, iters=120)
    return x


def theta_m(h: float, x_c: float | None = None) -> float:
    """Angle at which the nodal curve of the (5,1)-family becomes tangent
    to a horizontal side, reduced to (0, pi/2)."""
    a1, a5 = robin1d.alpha(1, h), robin1d.alpha(5, h)
    if x_c is None:
        x_c = solve_xc(h)
    return math.atan(-math.sin(a5 * x_c / PI) * math.sin(a1 / 2.0)
                     / (math.sin(a1 * x_c / PI) * math.sin(a5 / 2.0)))


def theta_t(h: float, x_c: float | None = None) -> float:
    """Angle of the tangency between the nodal curve and the vertical
    symmetry axis, reduced to (0, pi/2)."""
    a1, a5 = robin1d.alpha(1, h), robin1d.alpha(5, h)
    if x_c is None:
        x_c = solve_xc(h)
    return math.atan(-a5 * math.sin(a1 * x_c / PI)
                     / (a1 * math.sin(a5 * x_c / PI)))


def critical_angles_25(h: float) -> CriticalAngles25:
    x_c = solve_xc(h)
    tm = theta_m(h, x_c)
    tt = theta_t(h, x_c)
    return CriticalAngles25(x_c=x_c, theta_m=tm, theta_t=tt,
                            delta_theta=tm + tt - PI / 2.0)


def g_function(h: float) -> float:
    """g(h) = alpha_5*sin(alpha_1/2) / (alpha_1*sin(alpha_5/2)).

    Decreases to 1 from above; (g - 1)*h^2 -> 16.
    """
    if h < 10.0:
        raise ValueError("g_function requires h >= 10")
    a1, a5 = robin1d.alpha(1, h), robin1d.alpha(5, h)
    return a5 * math.sin(a1 / 2.0) / (a1 * math.sin(a5 / 2.0))


def wronskian_min(h: float, delta: float = 1e-3, samples: int = 200001) -> float:
    """min over (delta, pi/2 - delta) of |W(x)| with

        W(x) = alpha_0*sin(alpha_0*x/pi)*cos(alpha_2*x/pi)
             - alpha_2*sin(alpha_2*x/pi)*cos(alpha_0*x/pi),

    the Wronskian combination of the first and third even branches.  It
    vanishes only at x = 0 and x = pi/2, so the minimum is strictly
    positive; this pins the absence of off-center critical points in the
    (0,2)-family.
    """
    h = robin1d.validate_robin_param(h)
    if h == 0.0 or math.isinf(h):
        raise ValueError("wronskian_min requires 0 < h < inf")
    a0, a2 = robin1d.alpha(0, h), robin1d.alpha(2, h)
    x = np.linspace(delta, PI / 2.0 - delta, samples)
    w = (a0 * np.sin(a0 * x / PI) * np.cos(a2 * x / PI)
         - a2 * np.sin(a2 * x / PI) * np.cos(a0 * x / PI))
    return float(np.min(np.abs(w)))


# ----------------------------------------------------------------------
# Euler-formula cross-check
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class EulerReport:
    k_formula: int
    k_census: int
    b1: int
    interior_term: float
    boundary_term: float
    match: bool


def _sign_changes_on_arc(family: ThetaFamily, cx: float, cy: float,
                         radius: float, a0: float, a1: float,
                         samples: int = 1440) -> int:
    th = np.linspace(a0, a1, samples, endpoint=False)
    xs = np.clip(cx + radius * np.cos(th), -HALF_WIDTH, HALF_WIDTH)
    ys = np.clip(cy + radius * np.sin(th), -HALF_WIDTH, HALF_WIDTH)
    c, s = family.coefficients()
    fp, fq = family.factors()
    vals = c * fp(xs) * fq(ys) + s * fq(xs) * fp(ys)
    sg = np.sign(vals)
    sg = sg[sg != 0]
    if len(sg) < 2:
        return 0
    changes = int(np.count_nonzero(sg[1:] * sg[:-1] < 0))
    if a1 - a0 > 1.9 * PI and sg[0] != sg[-1]:
        changes += 1
    return changes


def euler_count_check(family: ThetaFamily, census: NodalCensus,
                      radius: float = 0.05) -> EulerReport:
    """Recount nodal domains from the topology of the nodal graph:

        k = 1 + b1 - b0 + sum(nu/2 - 1) + (1/2) * sum(rho)

    with b0 = 1 boundary component, b1 the components of nodal set plus
    boundary, nu the branch valence at interior critical points (signs
    around a small circle) and rho the number of nodal arcs ending at each
    boundary zero (signs along the inward half-circle).  A mismatch with
    the census flags under-resolved critical structure.
    """
    fine = 1024
    axis = np.linspace(-HALF_WIDTH, HALF_WIDTH, fine + 1)
    cells = _cell_signs(_phi_grid(family, axis))
    near = cells == 0
    near[0, :] = near[-1, :] = near[:, 0] = near[:, -1] = True
    _, b1 = ndimage.label(near, structure=np.ones((3, 3), dtype=bool))

    interior_term = 0.0
    for pt in interior_critical_points(family):
        r = min(radius, HALF_WIDTH - abs(pt.x) - 1e-6,
                HALF_WIDTH - abs(pt.y) - 1e-6)
        nu = _sign_changes_on_arc(family, pt.x, pt.y, max(r, 1e-3), 0.0, 2.0 * PI)
        interior_term += nu / 2.0 - 1.0

    boundary_term = 0.0
    if math.isinf(family.h):
        # boundary zero structure is carried by the normal derivative
        corner_pts = corner_zeros(family)
        for (ex, ey) in corner_pts:
            a0 = math.atan2(-ey, -ex) - PI / 4.0
            rho = _sign_changes_on_arc(family, ex, ey, radius, a0, a0 + PI / 2.0)
            boundary_term += rho / 2.0
        for side in SIDES:
            fun, dfun = _dirichlet_side_normal(family, side)
            for z in _line_zeros(fun, dfun):
                cx, cy, a0 = _side_point(side, z.t)
                rho = _sign_changes_on_arc(family, cx, cy, radius, a0, a0 + PI)
                boundary_term += rho / 2.0
    else:
        for side in SIDES:
            for z in boundary_zero_count(family, side).locations:
                cx, cy, a0 = _side_point(side, z)
                rho = _sign_changes_on_arc(family, cx, cy, radius, a0, a0 + PI)
                boundary_term += rho / 2.0
        for (ex, ey) in corner_zeros(family):
            a0 = math.atan2(-ey, -ex) - PI / 4.0
            rho = _sign_changes_on_arc(family, ex, ey, radius, a0, a0 + PI / 2.0)
            boundary_term += rho / 2.0

    k = 1 + b1 - 1 + interior_term + boundary_term
    k_int = int(round(k))
    return EulerReport(k_formula=k_int, k_census=census.domains, b1=int(b1),
                       interior_term=interior_term, boundary_term=boundary_term,
                       match=k_int == census.domains)


def _side_point(side: str, t: float) -> tuple[float, float, float]:
    """Coordinates of a side point and the start angle of the inward
    half-circle."""
    if side == "top":
        return t, HALF_WIDTH, PI
    if side == "bottom":
        return t, -HALF_WIDTH, 0.0
    if side == "right":
        return HALF_WIDTH, t, PI / 2.0
    return -HALF_WIDTH, t, -PI / 2.0


def _dirichlet_side_normal(family: ThetaFamily, side: str):
    """Normal derivative of a Dirichlet family along one side (its zeros
    mark where nodal lines reach the boundary)."""
    c, s = family.coefficients()
    fp, fq = family.factors()
    e = HALF_WIDTH if side in ("top", "right") else -HALF_WIDTH
    if side in ("top", "bottom"):
        A, B = c * float(fq.deriv(e)), s * float(fp.deriv(e))
        fun = lambda x: A * fp(x) + B * fq(x)
        dfun = lambda x: A * fp.deriv(x) + B * fq.deriv(x)
    else:
        A, B = c * float(fp.deriv(e)), s * float(fq.deriv(e))
        fun = lambda y: A * fq(y) + B * fp(y)
        dfun = lambda y: A * fq.deriv(y) + B * fp.deriv(y)
    return fun, dfun


# ----------------------------------------------------------------------
# nodal set polylines
# ----------------------------------------------------------------------

def zero_contours(family: ThetaFamily, resolution: int = 512) -> list[np.ndarray]:
    """Zero-level polylines of Phi (marching squares), as (n, 2) arrays.

    Forced nodal lines through exact grid zeros are traced reliably because
    the grid contains the axes and diagonals for even resolutions.  For a
    Dirichlet family the grid is inset by one cell: the boundary trace is a
    roundoff-level zero whose sign noise would otherwise be contoured.
    """
    from matplotlib.figure import Figure

    if math.isinf(family.h):
        pad = PI / resolution
        axis = np.linspace(-HALF_WIDTH + pad, HALF_WIDTH - pad, resolution + 1)
    else:
        axis = np.linspace(-HALF_WIDTH, HALF_WIDTH, resolution + 1)
    phi = _phi_grid(family, axis)
    fig = Figure()
    ax = fig.add_subplot()
    cs = ax.contour(axis, axis, phi.T, levels=[0.0])
    segs = [np.asarray(seg) for seg in cs.allsegs[0] if len(seg) > 1]
    return segs
