"""CLI surface: formats, determinism, exit codes."""

import json
import math
import os

import pytest

from robinsquare import cli
from robinsquare.reference_tables import NEUMANN_ROWS


def run_cli(args):
    return cli.main(args)


def test_spectrum_csv_deterministic(tmp_path):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    assert run_cli(["spectrum", "--h", "0", "--lmax", "10", "--out", str(out1)]) == 0
    assert run_cli(["spectrum", "--h", "0", "--lmax", "10", "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    lines = out1.read_text().splitlines()
    assert lines[0] == "m,n,value,k_min,k_max"
    assert lines[1] == "0,0,0,1,1"
    values = [int(line.split(",")[2]) for line in lines[1:]]
    assert values == [0, 1, 1, 2, 4, 4, 5, 5, 8, 9, 9]


def test_spectrum_near_crossing_cluster(tmp_path):
    out = tmp_path / "s.json"
    assert run_cli(["spectrum", "--h", "1.6970", "--lmax", "12",
                    "--cluster-tol", "1e-4", "--format", "json",
                    "--out", str(out)]) == 0
    entries = json.loads(out.read_text())["entries"]
    near = [e for e in entries if abs(e["value"] - 11.4498) < 2e-3]
    labels = {(e["m"], e["n"]) for e in near}
    assert {(2, 2), (3, 0)} <= labels
    ranges = {(e["k_min"], e["k_max"]) for e in near}
    assert len(ranges) == 1  # clustered into one shared index range


def test_spectrum_dirichlet_matches_table_rows(tmp_path):
    """At h = inf the spectrum (branch labels p, q) carries the same values
    and index ranges as the Dirichlet table rows (lattice labels p+1, q+1)."""
    out = tmp_path / "d.csv"
    assert run_cli(["spectrum", "--h", "inf", "--lmax", "66", "--out", str(out)]) == 0
    rows = [line.split(",") for line in out.read_text().splitlines()[1:]]
    got = sorted((int(p) + 1, int(q) + 1, int(v), int(kmin), int(kmax))
                 for p, q, v, kmin, kmax in rows)
    from robinsquare.reference_tables import DIRICHLET_ROWS
    expected = sorted(r for r in DIRICHLET_ROWS if r[2] <= 65)
    assert got == expected


def test_tables_match_reference(tmp_path):
    assert run_cli(["tables", "--which", "neumann", "--out", str(tmp_path)]) == 0
    lines = (tmp_path / "table_neumann.csv").read_text().splitlines()[1:]
    rows = [tuple(int(v) for v in line.split(",")) for line in lines]
    assert sorted(rows) == sorted(NEUMANN_ROWS)


def test_crossings_pair_json(tmp_path):
    out = tmp_path / "c.json"
    assert run_cli(["crossings", "--pair", "2,2", "3,0", "--hmin", "0.1",
                    "--hmax", "12", "--format", "json", "--out", str(out)]) == 0
    events = json.loads(out.read_text())
    assert len(events) == 1
    assert abs(events[0]["h_star"] - 1.6970) < 2e-3


def test_crossings_threshold(tmp_path):
    out = tmp_path / "t.json"
    assert run_cli(["crossings", "--threshold", "18", "--threshold-label", "3,1",
                    "--format", "json", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert abs(payload["h"] - 11.4225) < 1e-3


def test_nodal_census_json(tmp_path):
    out = tmp_path / "census.json"
    assert run_cli(["nodal", "--h", "20", "--theta", "0.785398163", "--p", "5",
                    "--q", "1", "--resolution", "256", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["domains"] == 8
    assert payload["boundary_zeros"] == 4


def test_nodal_svg_and_csv(tmp_path):
    svg = tmp_path / "n.svg"
    assert run_cli(["nodal", "--h", "inf", "--theta", "0.785398163", "--p", "0",
                    "--q", "2", "--resolution", "128", "--format", "svg",
                    "--out", str(svg)]) == 0
    assert svg.read_text().lstrip().startswith("<?xml")
    csv = tmp_path / "n.csv"
    assert run_cli(["nodal", "--h", "inf", "--theta", "0.785398163", "--p", "0",
                    "--q", "2", "--resolution", "128", "--format", "csv",
                    "--out", str(csv)]) == 0
    lines = csv.read_text().splitlines()
    assert lines[0] == "polyline,x,y"
    assert len(lines) > 10


def test_fk_commands(tmp_path):
    out = tmp_path / "fk.json"
    assert run_cli(["fk", "--htilde", "2.0", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert 0.0 < payload["lambda1"] < math.pi * 2.4048256 ** 2
    cand = tmp_path / "cand.json"
    assert run_cli(["fk", "--candidates", "--out", str(cand)]) == 0
    assert json.loads(cand.read_text())["candidates"] == [1, 2, 4, 5, 7, 9]


def test_figures_one_and_six(tmp_path):
    assert run_cli(["figures", "--id", "1", "--outdir", str(tmp_path)]) == 0
    lines = (tmp_path / "fig1.csv").read_text().splitlines()
    header, first = lines[0].split(","), lines[1].split(",")
    assert header == ["h", "alpha_0", "alpha_1", "alpha_2"]
    # intercepts at h = 0: 0, pi, 2*pi
    assert abs(float(first[1]) - 0.0) < 1e-12
    assert abs(float(first[2]) - math.pi) < 1e-12
    assert abs(float(first[3]) - 2 * math.pi) < 1e-12
    assert (tmp_path / "fig1.svg").exists()

    assert run_cli(["figures", "--id", "6", "--outdir", str(tmp_path)]) == 0
    rows = [line.split(",") for line in
            (tmp_path / "fig6.csv").read_text().splitlines()[1:]]
    gs = [float(r[1]) for r in rows]
    assert all(g > 1.0 for g in gs)
    assert all(a >= b for a, b in zip(gs, gs[1:]))


def test_figures_svg_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run_cli(["figures", "--id", "6", "--outdir", str(a)])
    run_cli(["figures", "--id", "6", "--outdir", str(b)])
    assert (a / "fig6.svg").read_bytes() == (b / "fig6.svg").read_bytes()


def test_verify_subset_exit_codes(tmp_path):
    report = tmp_path / "r.json"
    assert run_cli(["verify", "--only", "15", "--json", str(report)]) == 0
    payload = json.loads(report.read_text())
    assert payload[0]["passed"] is True
    # check 14 carries the known-unattainable slope reference and exits 1
    assert run_cli(["verify", "--only", "14"]) == 1
    assert run_cli(["verify", "--only", "no-such-check"]) == 2


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run_cli(["spectrum", "--h", "bogus", "--lmax", "10"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run_cli(["nodal", "--h", "1", "--theta", "0", "--p", "0", "--q", "1",
                 "--resolution", "17"])
    assert exc.value.code == 2


def test_outdir_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("ROBINSQUARE_OUTDIR", str(tmp_path))
    assert run_cli(["spectrum", "--h", "0", "--lmax", "5"]) == 0
    assert (tmp_path / "spectrum.csv").exists()
