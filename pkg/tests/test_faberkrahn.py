"""Disc ground state, Bessel evaluation, exclusion inequalities.

scipy.special is the oracle for the in-package Bessel functions; the
package itself never imports it for these.
"""

import math

import numpy as np
import pytest
from scipy import special

from robinsquare import faberkrahn, spectrum2d

PI = math.pi


def test_j0_against_scipy():
    xs = np.linspace(0.0, 20.0, 801)
    err = max(abs(faberkrahn.bessel_j0(x) - special.j0(x)) for x in xs)
    assert err <= 1e-12


def test_j1_against_scipy():
    xs = np.linspace(0.0, 20.0, 801)
    err = max(abs(faberkrahn.bessel_j1(x) - special.j1(x)) for x in xs)
    assert err <= 1e-12


def test_j0_series_values():
    assert faberkrahn.bessel_j0(0.0) == 1.0
    assert faberkrahn.bessel_j0_prime(0.0) == 0.0
    # second derivative at 0 from the series: -1/2
    step = 1e-4
    d2 = (faberkrahn.bessel_j0(step) - 2 + faberkrahn.bessel_j0(step)) / step ** 2
    assert d2 == pytest.approx(-0.5, abs=1e-6)


def test_first_zero_and_fk_constant():
    j = faberkrahn.j0_first_zero()
    assert j == pytest.approx(2.404825557695773, abs=1e-12)
    assert PI / j ** 2 == pytest.approx(0.543229, abs=1e-6)


def test_disc_ground_state_monotone_and_bracketed():
    j = faberkrahn.j0_first_zero()
    hs = [0.0, 1e-3, 0.1, 1.0, 10.0, 1e3, math.inf]
    vals = [faberkrahn.disc_ground_state(h).lambda1 for h in hs]
    assert vals[0] == 0.0
    assert all(a < b for a, b in zip(vals, vals[1:]))
    assert vals[-1] == PI * j * j
    for h in hs[1:-1]:
        gs = faberkrahn.disc_ground_state(h)
        assert 0.0 < gs.alpha_root < j
        # the root actually solves the secular equation
        res = (gs.alpha_root * math.sqrt(PI) * faberkrahn.bessel_j0_prime(gs.alpha_root)
               + h * faberkrahn.bessel_j0(gs.alpha_root))
        assert abs(res) <= 1e-9 * max(1.0, h)


def test_small_h_slope_is_isoperimetric():
    slope = faberkrahn.disc_ground_state(1e-4).lambda1 / 1e-4
    assert slope == pytest.approx(faberkrahn.small_h_slope(), rel=1e-2)
    assert faberkrahn.small_h_slope() == 2.0 * math.sqrt(PI)


def test_large_h_defect():
    j = faberkrahn.j0_first_zero()
    defect = (PI * j * j - faberkrahn.disc_ground_state(1e4).lambda1) * 1e4
    assert defect == pytest.approx(faberkrahn.large_h_defect(), rel=1e-2)


def test_scaled_fk_bound():
    j = faberkrahn.j0_first_zero()
    assert faberkrahn.scaled_fk_bound(math.inf, 1.0) == pytest.approx(PI * j * j)
    assert faberkrahn.scaled_fk_bound(3.0, 4.0) == pytest.approx(
        faberkrahn.disc_ground_state(6.0).lambda1 / 4.0)
    # lower bound for the square of area pi^2 at h = 1
    square_ground = spectrum2d.eigenvalue((0, 0), 1.0).value
    assert faberkrahn.scaled_fk_bound(1.0, PI * PI) <= square_ground


def test_pleijel_function_sign_change_and_monotone():
    assert faberkrahn.pleijel_f(597.0) < 0.0 < faberkrahn.pleijel_f(598.0)
    lams = np.linspace(0.5, 1000.0, 200)
    vals = [faberkrahn.pleijel_f(l) for l in lams]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_pleijel_exclusion():
    assert faberkrahn.pleijel_exclusion(None, 1000.0).verdict == "excluded"
    assert faberkrahn.pleijel_exclusion(None, 598.0).verdict == "excluded"
    assert faberkrahn.pleijel_exclusion(None, 100.0).verdict == "possible"
    check = faberkrahn.pleijel_exclusion(10, 100.0)
    assert check.verdict == "possible"
    assert check.lhs == pytest.approx((10 - 40.0) / 100.0)
    with pytest.raises(ValueError):
        faberkrahn.pleijel_exclusion(None, 1.0)


def test_dirichlet_candidates():
    got = faberkrahn.dirichlet_candidates()
    assert got == [1, 2, 4, 5, 7, 9]
    # n = 3 sits at eigenvalue 5 and fails the quotient test
    j = faberkrahn.j0_first_zero()
    assert 3 / 5 > PI / j ** 2
    assert 1 / 2 < PI / j ** 2
