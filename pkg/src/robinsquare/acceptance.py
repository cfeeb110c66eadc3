"""End-to-end verification suite.

Each check recomputes one headline result from scratch and compares it
against its frozen reference value at a fixed tolerance.  The registry is
consumed by the CLI ``verify`` command and by the test suite; checks call
into the library through module attributes so a degraded solver injected
for fault testing is picked up.

Check 14 is expected to fail on a correct build: its asserted small-h
slope of the disc ground state, 4*sqrt(pi), contradicts the isoperimetric
value perimeter/area = 2*sqrt(pi) that the secular equation (and this
solver) actually produces.  The check is kept as stated rather than
silently corrected; see its detail output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from . import crossings, faberkrahn, nodal, robin1d, spectrum2d
from .crossings import CurvePair
from .nodal import ThetaFamily
from .reference_tables import DIRICHLET_ROWS, NEUMANN_ROWS

PI = math.pi

#: Base census resolution used by the verification checks (working lattice
#: is 4x finer; every count is additionally confirmed at twice this value).
CENSUS_RESOLUTION = 512

THRESHOLDS = [
    # (label, level, reference h)
    ((3, 1), 18.0, 11.4225), ((3, 2), 18.0, 2.6288), ((4, 0), 18.0, 1.2668),
    ((4, 1), 18.0, 0.4208), ((2, 2), 13.0, 2.9804), ((3, 0), 13.0, 3.5468),
    ((5, 2), 41.0, 12.6664), ((4, 4), 41.0, 4.9398), ((5, 3), 41.0, 3.4557),
    ((6, 0), 41.0, 3.8230), ((6, 1), 41.0, 2.0624), ((6, 2), 41.0, 0.4016),
    ((4, 3), 37.0, 11.5497), ((5, 1), 37.0, 15.3826),
    ((9, 5), 130.0, 26.9531), ((8, 7), 130.0, 9.3456), ((11, 0), 130.0, 7.3264),
    ((9, 4), 117.0, 17.5353), ((7, 7), 117.0, 12.4168), ((10, 0), 117.0, 28.8245),
    ((8, 6), 117.0, 9.9784), ((10, 1), 117.0, 16.9735),
]

MULTI_LABELS = [(9, 4), (7, 7), (10, 0), (8, 6), (10, 1)]
MULTI_EVENTS = [2.1209, 2.1864, 3.7786, 5.2167]


@dataclass
class CheckResult:
    key: str
    name: str
    passed: bool
    detail: str


def _result(key, name, ok, detail) -> CheckResult:
    return CheckResult(key=key, name=name, passed=bool(ok), detail=detail)


def check_01_branch_limits() -> CheckResult:
    bad = []
    for p in range(9):
        a0 = robin1d.solve_alpha(p, 0.0).alpha
        if a0 != p * PI:
            bad.append(f"alpha_{p}(0) = {a0}")
        a_big = robin1d.solve_alpha(p, 1e6).alpha
        if abs(a_big - (p + 1) * PI) > 1e-4:
            bad.append(f"alpha_{p}(1e6) = {a_big}")
    worst = 0.0
    for p in range(9):
        for h in [10.0 ** e for e in range(-3, 4)] + [1e6]:
            sol = robin1d.solve_alpha(p, h)
            worst = max(worst, robin1d.residual(p, h, sol.alpha))
    if worst > 1e-12:
        bad.append(f"residual {worst:.2e}")
    return _result("01", "branch limits and residuals", not bad,
                   "; ".join(bad) if bad else f"max residual {worst:.2e}")


def check_02_crossing_9() -> CheckResult:
    pair = CurvePair.make((2, 2), (3, 0))
    ev = crossings.find_crossing(pair, 0.1, 12.0)
    if ev is None:
        return _result("02", "ninth-eigenvalue crossing", False, "no crossing found")
    ok = (abs(ev.h_star - 1.6970) <= 2e-3
          and abs(ev.lambda_star - 11.4498) <= 2e-3
          and ev.scan_sign_changes == 1)
    return _result("02", "ninth-eigenvalue crossing", ok,
                   f"h* = {ev.h_star:.6f}, lambda* = {ev.lambda_star:.6f}, "
                   f"scan sign changes = {ev.scan_sign_changes}")


def check_03_crossing_25() -> CheckResult:
    ev = crossings.find_crossing(CurvePair.make((4, 3), (5, 1)), 0.1, 16.0)
    ok = ev is not None and abs(ev.h_star - 3.1317) <= 1e-3
    return _result("03", "25th-eigenvalue crossing", ok,
                   f"h* = {ev.h_star:.6f}" if ev else "no crossing found")


def check_04_thresholds() -> CheckResult:
    bad = []
    for label, level, ref in THRESHOLDS:
        h = crossings.threshold_h(label, level)
        if abs(h - ref) > 1e-3:
            bad.append(f"{label}>={level}: {h:.5f} vs {ref}")
    return _result("04", f"{len(THRESHOLDS)} threshold constants", not bad,
                   "; ".join(bad) if bad else "all within 1e-3")


def check_05_multi_crossing() -> CheckResult:
    events = crossings.multi_crossing_scan(MULTI_LABELS, 0.1, 10.0)
    ok = len(events) == len(MULTI_EVENTS) and all(
        abs(ev.h_star - ref) <= 1e-3 for ev, ref in zip(events, MULTI_EVENTS))
    return _result("05", "multi-crossing scan", ok,
                   "events at " + ", ".join(f"{ev.h_star:.4f}" for ev in events))


def check_06_critical_geometry() -> CheckResult:
    ang = nodal.critical_angles_25(20.0)
    bad = []
    for name, got, ref in [("x_c", ang.x_c, 0.8096522),
                           ("theta_m", ang.theta_m, 0.3324691),
                           ("theta_t", ang.theta_t, 1.2492655)]:
        if abs(got - ref) > 1e-6:
            bad.append(f"{name} = {got:.8f} vs {ref}")
    return _result("06", "critical geometry at h = 20", not bad,
                   "; ".join(bad) if bad else
                   f"x_c = {ang.x_c:.7f}, theta_m = {ang.theta_m:.7f}, "
                   f"theta_t = {ang.theta_t:.7f}")


def check_07_asymptotics() -> CheckResult:
    bad = []
    ang = nodal.critical_angles_25(500.0)
    dth = ang.delta_theta * 500.0 ** 2
    if not (4.56 <= dth <= 5.04):
        bad.append(f"delta_theta*h^2 = {dth:.4f} outside [4.56, 5.04]")
    g = (nodal.g_function(500.0) - 1.0) * 500.0 ** 2
    if not (15.2 <= g <= 16.8):
        bad.append(f"(g-1)*h^2 = {g:.4f} outside [15.2, 16.8]")
    resid = []
    for h in (100.0, 300.0, 1000.0):
        resid.append((nodal.solve_xc(h) - PI / 4.0 - 0.5 / h) * h * h)
    bounded = all(abs(r) <= 0.2 for r in resid)
    shrinking = abs(resid[2]) <= abs(resid[1]) <= abs(resid[0])
    if not (bounded and shrinking):
        bad.append(f"x_c residual*h^2 = {[f'{r:.4f}' for r in resid]}")
    return _result("07", "long-range expansions", not bad,
                   "; ".join(bad) if bad else
                   f"delta_theta*h^2 = {dth:.3f}, (g-1)*h^2 = {g:.3f}, "
                   f"x_c residuals {[f'{r:.4f}' for r in resid]}")


def check_08_census_pattern_5() -> CheckResult:
    bad = []
    for h in (20.0, 100.0, math.inf):
        counts = [d for _, d in nodal.census_sweep_5(h, CENSUS_RESOLUTION)]
        if counts != [3, 2, 3, 4, 3]:
            bad.append(f"h = {h}: {counts}")
        ang = nodal.critical_angles_5(h)
        at_t1 = nodal.count_nodal_domains(
            ThetaFamily(h=h, theta=ang.theta1, p=0, q=2), CENSUS_RESOLUTION).domains
        if at_t1 != 3:
            bad.append(f"h = {h} at theta1: {at_t1}")
    return _result("08", "five-way census pattern (3,2,3,4,3)", not bad,
                   "; ".join(bad) if bad else "pattern holds at h = 20, 100, inf")


def _twelve_thetas(h: float):
    ang = nodal.critical_angles_25(h)
    tm, tt = ang.theta_m, ang.theta_t
    return [("0", 0.0, (12, 12, 5)),
            ("pi/2-tt", PI / 2 - tt, (12, 12, 3)),
            ("mid(pi/2-tt,tm)", 0.5 * (PI / 2 - tt + tm), (8, 12, 1)),
            ("tm", tm, (8, 8, 1)),
            ("pi/4", PI / 4, (8, 4, 1)),
            ("pi/2-tm", PI / 2 - tm, (8, 8, 1)),
            ("mid(pi/2-tm,tt)", 0.5 * (PI / 2 - tm + tt), (8, 12, 1)),
            ("tt", tt, (12, 12, 3)),
            ("pi/2", PI / 2, (12, 12, 5)),
            ("5pi/8", 5 * PI / 8, (12, 12, 5)),
            ("3pi/4", 3 * PI / 4, (16, 16, 5)),
            ("13pi/16", 13 * PI / 16, (12, 12, 5))]


def check_09_census_25() -> CheckResult:
    bad = []
    for name, theta, expect in _twelve_thetas(20.0):
        fam = ThetaFamily(h=20.0, theta=theta, p=5, q=1)
        census = nodal.count_nodal_domains(fam, CENSUS_RESOLUTION)
        got = (census.domains, census.boundary_zeros, census.interior_critical)
        if got != expect:
            bad.append(f"theta = {name}: {got} vs {expect}")
    return _result("09", "twelve-angle census at h = 20", not bad,
                   "; ".join(bad) if bad else
                   "all (domains, boundary, interior) triples match")


def check_10_u22_census_and_labelling() -> CheckResult:
    bad = []
    for h in (0.5, 1.5):
        fam = ThetaFamily(h=h, theta=0.0, p=2, q=2)
        d = nodal.count_nodal_domains(fam, CENSUS_RESOLUTION).domains
        if d != 9:
            bad.append(f"u22 at h = {h}: {d} domains")
    for h, expect in ((1.0, (9, 9)), (2.5, (11, 11))):
        table = spectrum2d.enumerate_spectrum(h, 20.0)
        rng = table.index_range((2, 2))
        if rng != expect:
            bad.append(f"labelling at h = {h}: {rng} vs {expect}")
    return _result("10", "nine-domain mode and its labelling switch", not bad,
                   "; ".join(bad) if bad else
                   "9 domains; index 9 below and 11 above the crossing")


def check_11_endpoint_tables() -> CheckResult:
    neu, diri = spectrum2d.endpoint_tables(k_max=129)
    ok_n = sorted(neu) == sorted(NEUMANN_ROWS)
    ok_d = sorted(diri) == sorted(DIRICHLET_ROWS)
    detail = f"neumann rows {len(neu)} vs {len(NEUMANN_ROWS)}, " \
             f"dirichlet rows {len(diri)} vs {len(DIRICHLET_ROWS)}"
    return _result("11", "endpoint tables regenerated exactly",
                   ok_n and ok_d, detail)


def check_12_counting_bounds() -> CheckResult:
    bad = []
    report = spectrum2d.weyl_bounds_check(600.0, samples=10000)
    if not report.ok:
        bad.append(f"{len(report.neumann_violations)} Neumann / "
                   f"{len(report.dirichlet_violations)} Dirichlet violations")
    f597, f598 = faberkrahn.pleijel_f(597.0), faberkrahn.pleijel_f(598.0)
    if not (f597 < 0.0 < f598):
        bad.append(f"f(597) = {f597:.6f}, f(598) = {f598:.6f}")
    cut = spectrum2d.index_cutoff()
    if cut.cutoff != 520 or not cut.intermediate_bound < 518.67:
        bad.append(f"cutoff {cut.cutoff}, bound {cut.intermediate_bound:.4f}")
    return _result("12", "counting bounds, sign change, index cutoff", not bad,
                   "; ".join(bad) if bad else
                   f"f(597) = {f597:.2e} < 0 < f(598) = {f598:.2e}; cutoff 520")


def check_13_sturm_bounds() -> CheckResult:
    bad = []
    for h in (20.0, 100.0):
        cases = [(0, 2, [0.2, 0.5, 1.2, 3 * PI / 4 + 0.05]),
                 (5, 1, [th for _, th, _ in _twelve_thetas(h)])]
        for p, q, thetas in cases:
            lam = spectrum2d.eigenvalue((p, q), h).value
            table = spectrum2d.enumerate_spectrum(h, lam * 1.5)
            i_n, j_n = spectrum2d.sturm_index_bounds(table.find((p, q)), table)
            for theta in thetas:
                fam = ThetaFamily(h=h, theta=theta, p=p, q=q)
                counts = [nodal.boundary_zero_count(fam, side).count
                          for side in nodal.SIDES]
                total = sum(counts) + len(nodal.corner_zeros(fam))
                if total > 4.0 * math.sqrt(lam):
                    bad.append(f"(p,q)=({p},{q}) h={h} theta={theta:.3f}: "
                               f"total {total} > 4*sqrt(lam)")
                if max(counts) > j_n:
                    bad.append(f"(p,q)=({p},{q}) h={h} theta={theta:.3f}: "
                               f"side count {max(counts)} > j_n={j_n}")
    return _result("13", "boundary zero bounds", not bad,
                   "; ".join(bad) if bad else "all side/total bounds hold")


def check_14_disc_asymptotics() -> CheckResult:
    bad = []
    j = faberkrahn.j0_first_zero()
    slope = faberkrahn.disc_ground_state(1e-4).lambda1 / 1e-4
    asserted = 4.0 * math.sqrt(PI)
    if abs(slope - asserted) > 0.01 * asserted:
        bad.append(
            f"small-h slope {slope:.6f} vs asserted 4*sqrt(pi) = {asserted:.6f} "
            f"(computed slope equals the isoperimetric perimeter/area "
            f"= 2*sqrt(pi) = {2 * math.sqrt(PI):.6f}; the 4*sqrt(pi) reference "
            f"is not attainable from the secular equation)")
    defect = (PI * j * j - faberkrahn.disc_ground_state(1e4).lambda1) * 1e4
    ref = faberkrahn.large_h_defect()
    if abs(defect - ref) > 0.01 * ref:
        bad.append(f"large-h defect {defect:.4f} vs {ref:.4f}")
    if abs(PI / (j * j) - 0.543229) > 1e-6:
        bad.append(f"pi/j^2 = {PI / (j * j):.8f}")
    return _result("14", "disc ground-state asymptotics", not bad,
                   "; ".join(bad) if bad else "slope, defect and pi/j^2 all match")


def check_15_dirichlet_candidates() -> CheckResult:
    got = faberkrahn.dirichlet_candidates()
    return _result("15", "surviving Dirichlet indices", got == [1, 2, 4, 5, 7, 9],
                   f"candidates = {got}")


def check_16_property_suite() -> CheckResult:
    bad = []
    # odd-sum families carry the central antisymmetry: even domain counts
    for h, theta, p, q in [(20.0, 0.7, 2, 1), (5.0, 0.3, 3, 0)]:
        fam = ThetaFamily(h=h, theta=theta, p=p, q=q)
        d = nodal.count_nodal_domains(fam, 256).domains
        if d % 2 != 0:
            bad.append(f"odd count {d} for antisymmetric family ({p},{q})")
    # census resolution stability
    fam = ThetaFamily(h=20.0, theta=PI / 4, p=0, q=2)
    if nodal.count_nodal_domains(fam, 256).domains != \
            nodal.count_nodal_domains(fam, 512).domains:
        bad.append("census not resolution-stable")
    # closed-form branch derivative vs centered differences
    for p in (0, 1, 4):
        for h in (0.3, 1.0, 7.0):
            fd = (robin1d.alpha(p, h + 1e-5) - robin1d.alpha(p, h - 1e-5)) / 2e-5
            dv = robin1d.alpha_derivative(p, h)
            if abs(dv - fd) > 1e-6 * abs(dv):
                bad.append(f"derivative mismatch p={p}, h={h}")
    # Wronskian positivity away from the endpoints
    for h in (1.0, 10.0, 100.0):
        if nodal.wronskian_min(h) <= 0.0:
            bad.append(f"wronskian min not positive at h={h}")
    return _result("16", "property suite", not bad,
                   "; ".join(bad) if bad else
                   "parity, stability, derivative and positivity checks hold")


REGISTRY: list[tuple[str, Callable[[], CheckResult]]] = [
    ("01", check_01_branch_limits),
    ("02", check_02_crossing_9),
    ("03", check_03_crossing_25),
    ("04", check_04_thresholds),
    ("05", check_05_multi_crossing),
    ("06", check_06_critical_geometry),
    ("07", check_07_asymptotics),
    ("08", check_08_census_pattern_5),
    ("09", check_09_census_25),
    ("10", check_10_u22_census_and_labelling),
    ("11", check_11_endpoint_tables),
    ("12", check_12_counting_bounds),
    ("13", check_13_sturm_bounds),
    ("14", check_14_disc_asymptotics),
    ("15", check_15_dirichlet_candidates),
    ("16", check_16_property_suite),
]


def run(only: str | None = None) -> list[CheckResult]:
    """Run the verification checks (optionally filtered by key or name
    substring) and return their results."""
    results = []
    for key, fn in REGISTRY:
        if only and only not in key and only not in fn.__name__:
            continue
        try:
            results.append(fn())
        except Exception as exc:  # a crashed check is a failed check
            results.append(CheckResult(key=key, name=fn.__name__, passed=False,
                                       detail=f"exception: {exc!r}"))
    return results
