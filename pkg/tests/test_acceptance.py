"""End-to-end verification criteria, one test per registry entry.

Check 14 is expected to fail: its asserted small-h slope 4*sqrt(pi) for
the disc ground state contradicts the isoperimetric slope perimeter/area
= 2*sqrt(pi) that the secular equation actually yields.  The check (and
this test) keeps the stated reference rather than papering over it; the
failure detail carries the analysis.
"""

import pytest

from robinsquare import acceptance, robin1d


@pytest.mark.parametrize("key,fn", acceptance.REGISTRY,
                         ids=[key for key, _ in acceptance.REGISTRY])
def test_acceptance_criterion(key, fn):
    result = fn()
    print(f"{'PASS' if result.passed else 'FAIL'}  {result.key}  "
          f"{result.name}: {result.detail}")
    assert result.passed, f"criterion {result.key} failed: {result.detail}"


def test_degraded_solver_breaks_thresholds(monkeypatch):
    """Fault injection: a branch solver rounded to 1e-2 must make the
    threshold criterion fail (guards against vacuous checks)."""
    exact = robin1d.solve_alpha

    def coarse(p, h):
        sol = exact(p, h)
        return robin1d.AlphaSolution(p=sol.p, h=sol.h, alpha=round(sol.alpha, 2))

    monkeypatch.setattr(robin1d, "solve_alpha", coarse)
    result = acceptance.check_04_thresholds()
    assert not result.passed


def test_run_filter():
    results = acceptance.run(only="15")
    assert len(results) == 1 and results[0].key == "15"
    assert acceptance.run(only="zzz") == []
