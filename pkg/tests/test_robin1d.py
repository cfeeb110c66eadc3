"""Branch solver tests.

Expected values come from independent oracles: plain bisection on the tan
form of the branch equation, centered finite differences for derivatives,
and exact endpoint limits.
"""

import math

import numpy as np
import pytest

from robinsquare import robin1d

PI = math.pi

H_GRID = [1e-3, 1e-2, 0.1, 0.5, 1.0, 3.0, 10.0, 50.0, 1e3]


def bisect_tan_form(p, h, halvings=60):
    """Oracle: bisection on the raw tan equation, no Newton polish."""
    if p % 2 == 0:
        f = lambda a: a * math.tan(a / 2.0) - h * PI
    else:
        f = lambda a: a / (h * PI) + math.tan(a / 2.0)
    lo, hi = p * PI + 1e-9, (p + 1) * PI - 1e-9
    flo = f(lo)
    for _ in range(halvings):
        mid = 0.5 * (lo + hi)
        if flo * f(mid) <= 0:
            hi = mid
        else:
            lo, flo = mid, f(mid)
    return 0.5 * (lo + hi)


def test_exact_endpoint_limits():
    assert robin1d.solve_alpha(2, 0.0).alpha == 2 * PI
    assert robin1d.solve_alpha(1, math.inf).alpha == 2 * PI
    assert robin1d.solve_alpha(0, 0.0).alpha == 0.0


def test_root_matches_bisection_oracle():
    assert robin1d.alpha(0, 1.0) == pytest.approx(bisect_tan_form(0, 1.0), abs=1e-9)
    assert robin1d.alpha(3, 2.5) == pytest.approx(bisect_tan_form(3, 2.5), abs=1e-9)


@pytest.mark.parametrize("p", range(13))
@pytest.mark.parametrize("h", H_GRID)
def test_residual_and_interval(p, h):
    sol = robin1d.solve_alpha(p, h)
    assert robin1d.residual(p, h, sol.alpha) <= 1e-12
    assert p * PI < sol.alpha < (p + 1) * PI


@pytest.mark.parametrize("p", range(13))
def test_monotone_in_h_and_interlacing(p):
    values = [robin1d.alpha(p, h) for h in H_GRID]
    assert all(a < b for a, b in zip(values, values[1:]))
    for h in H_GRID:
        assert robin1d.alpha(p, h) < robin1d.alpha(p + 1, h)


def test_parity_metadata():
    assert robin1d.solve_alpha(4, 1.0).parity == "even"
    assert robin1d.solve_alpha(5, 1.0).parity == "odd"


def test_eval_u1d_at_origin():
    sol = robin1d.solve_alpha(2, 3.0)
    assert robin1d.eval_u1d(sol, 0.0) == pytest.approx(1.0 / math.sin(sol.alpha / 2))
    odd = robin1d.solve_alpha(3, 3.0)
    assert robin1d.eval_u1d(odd, 0.0) == 0.0


@pytest.mark.parametrize("p", [0, 1, 2, 5])
@pytest.mark.parametrize("h", [0.0, 0.7, 4.0, math.inf])
def test_eval_u1d_parity(p, h):
    sol = robin1d.solve_alpha(p, h)
    for x in np.linspace(0.0, PI / 2, 9):
        left = robin1d.eval_u1d(sol, -x)
        right = (-1) ** p * robin1d.eval_u1d(sol, x)
        assert left == pytest.approx(right, abs=1e-12)


def test_eval_u1d_robin_boundary_residual():
    # finite-difference normal derivative at the right endpoint
    h = 1.0
    sol = robin1d.solve_alpha(0, h)
    step = 1e-6
    du = (robin1d.eval_u1d(sol, PI / 2) - robin1d.eval_u1d(sol, PI / 2 - step)) / step
    assert du + h * robin1d.eval_u1d(sol, PI / 2) == pytest.approx(0.0, abs=1e-5)


def test_eval_u1d_dirichlet_limit_form():
    sol = robin1d.solve_alpha(0, math.inf)
    for x in (-1.0, 0.0, 0.4):
        assert robin1d.eval_u1d(sol, x) == pytest.approx(math.cos(x))
    sol = robin1d.solve_alpha(1, math.inf)
    assert robin1d.eval_u1d(sol, 0.3) == pytest.approx(math.sin(2 * 0.3))


def test_eval_u1d_rejects_outside_interval():
    sol = robin1d.solve_alpha(0, 1.0)
    with pytest.raises(ValueError):
        robin1d.eval_u1d(sol, PI / 2 + 1e-6)


@pytest.mark.parametrize("p", [0, 1, 2, 7])
@pytest.mark.parametrize("h", [0.05, 1.0, 20.0])
def test_alpha_derivative_matches_finite_difference(p, h):
    step = 1e-5 * max(1.0, h)
    fd = (robin1d.alpha(p, h + step) - robin1d.alpha(p, h - step)) / (2 * step)
    dv = robin1d.alpha_derivative(p, h)
    assert dv > 0.0
    assert dv == pytest.approx(fd, rel=1e-6)


def test_alpha_derivative_long_range():
    h = 100.0
    assert robin1d.alpha_derivative(1, h) == pytest.approx(4.0 / h ** 2, rel=2e-2)


def test_alpha_derivative_rejects_endpoints():
    with pytest.raises(ValueError):
        robin1d.alpha_derivative(0, 0.0)
    with pytest.raises(ValueError):
        robin1d.alpha_derivative(0, math.inf)


def test_asymptotic_check_scaled_residual_stabilizes():
    rows = robin1d.alpha_asymptotic_check(1, [100.0, 300.0, 1000.0])
    scaled = [r.scaled_residual for r in rows]
    # the 1/h^2 coefficient of alpha_1 is 8/pi
    assert all(abs(s - 8.0 / PI) < 0.2 for s in scaled)
    rows5 = robin1d.alpha_asymptotic_check(5, [100.0, 1000.0])
    assert rows5[-1].alpha == pytest.approx(6 * PI, abs=0.05)
    with pytest.raises(ValueError):
        robin1d.alpha_asymptotic_check(1, [5.0])


def test_validate_robin_param():
    with pytest.raises(ValueError):
        robin1d.validate_robin_param(-0.5)
    with pytest.raises(ValueError):
        robin1d.validate_robin_param(float("nan"))
    assert robin1d.validate_robin_param(math.inf) == math.inf


def test_bare_factor_matches_eigenfunction_sign():
    # the bare factor differs from the eigenfunction by a constant
    sol = robin1d.solve_alpha(2, 4.0)
    factor = robin1d.bare_factor(2, 4.0)
    xs = np.linspace(-PI / 2, PI / 2, 33)
    ratio = [robin1d.eval_u1d(sol, x) / float(factor(x)) for x in xs
             if abs(float(factor(x))) > 1e-6]
    assert np.ptp(ratio) < 1e-9
