"""Curve crossings, threshold equations, and the at-most-one-crossing scan."""

import itertools
import math

import numpy as np
import pytest

from robinsquare import crossings, robin1d, spectrum2d
from robinsquare.crossings import CurvePair

PI = math.pi


def test_curve_pair_canonicalization():
    pair = CurvePair.make((3, 0), (2, 2))
    assert pair.a == (0, 3) or pair.b == (0, 3)
    with pytest.raises(ValueError):
        CurvePair.make((2, 3), (3, 2))  # same label after canonicalization


def test_sigma_endpoint_limits():
    pair = CurvePair.make((2, 2), (3, 0))
    assert crossings.sigma(pair, 1e-9) == pytest.approx(8.0 - 9.0, abs=1e-3)
    assert crossings.sigma(pair, 1e9) == pytest.approx(18.0 - 17.0, abs=1e-3)


@pytest.mark.parametrize("labels", [((2, 2), (3, 0)), ((4, 3), (5, 1)), ((1, 1), (2, 0))])
@pytest.mark.parametrize("h", [0.3, 1.0, 8.0])
def test_sigma_prime_matches_finite_difference(labels, h):
    pair = CurvePair.make(*labels)
    step = 1e-5
    fd = (crossings.sigma(pair, h + step) - crossings.sigma(pair, h - step)) / (2 * step)
    assert crossings.sigma_prime(pair, h) == pytest.approx(fd, rel=1e-6, abs=1e-12)


def test_find_crossing_ninth():
    ev = crossings.find_crossing(CurvePair.make((2, 2), (3, 0)), 0.1, 12.0)
    assert ev is not None
    assert ev.h_star == pytest.approx(1.6970, abs=2e-3)
    assert ev.lambda_star == pytest.approx(11.4498, abs=2e-3)
    assert ev.scan_sign_changes == 1
    assert abs(crossings.sigma(ev.pair, ev.h_star)) <= 1e-9 * ev.lambda_star
    assert crossings.sigma_prime(ev.pair, ev.h_star) != 0.0


def test_find_crossing_25th():
    ev = crossings.find_crossing(CurvePair.make((4, 3), (5, 1)), 0.1, 16.0)
    assert ev is not None
    assert ev.h_star == pytest.approx(3.1317, abs=1e-3)


def test_find_crossing_none_when_no_sign_change():
    pair = CurvePair.make((1, 1), (2, 0))
    assert crossings.find_crossing(pair, 0.1, 100.0) is None
    # oracle: the signed gap keeps one sign on a log grid
    assert crossings.uniqueness_scan(pair, 0.1, 100.0, 256) == 0


@pytest.mark.parametrize("label,level,expected", [
    ((3, 1), 18.0, 11.4225),
    ((6, 2), 41.0, 0.4016),
    ((9, 5), 130.0, 26.9531),
])
def test_threshold_examples(label, level, expected):
    h = crossings.threshold_h(label, level)
    assert h == pytest.approx(expected, abs=1e-3)
    assert spectrum2d.eigenvalue(label, h).value == pytest.approx(level, abs=1e-9)


def test_threshold_rejects_out_of_range_level():
    with pytest.raises(ValueError):
        crossings.threshold_h((3, 1), 9.0)   # below the Neumann value 10
    with pytest.raises(ValueError):
        crossings.threshold_h((3, 1), 20.0)  # at the Dirichlet value


def test_threshold_increasing_in_level():
    hs = [crossings.threshold_h((3, 1), c) for c in (12.0, 15.0, 18.0)]
    assert hs[0] < hs[1] < hs[2]


def test_multi_crossing_scan_examples():
    labels = [(9, 4), (7, 7), (10, 0), (8, 6), (10, 1)]
    events = crossings.multi_crossing_scan(labels, 0.1, 10.0)
    assert len(events) == 4
    for ev, ref in zip(events, (2.1209, 2.1864, 3.7786, 5.2167)):
        assert ev.h_star == pytest.approx(ref, abs=1e-3)
    assert [ev.h_star for ev in events] == sorted(ev.h_star for ev in events)

    single = crossings.multi_crossing_scan([(2, 2), (3, 0)], 0.1, 12.0)
    assert len(single) == 1
    assert crossings.multi_crossing_scan([], 0.1, 10.0) == []


def test_ordering_after_crossing():
    ev = crossings.find_crossing(CurvePair.make((2, 2), (3, 0)), 0.1, 12.0)
    report = crossings.ordering_after_crossing(ev)
    assert report.wide == (0, 3)
    assert report.narrow == (2, 2)
    assert report.ordered_after and report.ordered_before
    # equality at the crossing itself
    gap = (spectrum2d.eigenvalue(report.wide, ev.h_star).value
           - spectrum2d.eigenvalue(report.narrow, ev.h_star).value)
    assert abs(gap) <= 1e-9 * ev.lambda_star


def test_uniqueness_scan_over_table_labels():
    """At most one sign change of the gap for every label pair from the
    endpoint tables with index sum <= 12 (vectorized over a log h grid)."""
    hs = np.geomspace(1e-3, 1e3, 512)
    alphas = {p: np.array([robin1d.alpha(p, h) for h in hs]) for p in range(13)}
    labels = sorted({(min(m, n), max(m, n)) for (m, n, _, _, _) in
                     __import__("robinsquare.reference_tables", fromlist=["x"]).NEUMANN_ROWS
                     if m + n <= 12})
    values = {lab: alphas[lab[0]] ** 2 + alphas[lab[1]] ** 2 for lab in labels}
    worst = 0
    for a, b in itertools.combinations(labels, 2):
        diff = values[a] - values[b]
        signs = np.sign(diff)
        nz = signs[signs != 0]
        changes = int(np.count_nonzero(nz[1:] * nz[:-1] < 0))
        worst = max(worst, changes)
    assert worst <= 1
