"""Static figure reproductions, rendered to SVG with the curve data dumped
alongside as CSV.

Figure ids:
    1  branch curves alpha_0, alpha_1, alpha_2 for h <= 100
    2  eleven eigenvalue curves for h <= 12 (the ninth-eigenvalue window)
    3  thirteen eigenvalue curves for h <= 16 (the 25th-eigenvalue window)
    4  nodal sets of the Dirichlet (0,2)-family at ten angles
    5  nodal sets of the (0,2)-family at h = 20 at twelve angles
    6  g(h) on [20, 500]

Output is deterministic: no timestamps in the SVG metadata and a fixed
hash salt for element ids.
"""

from __future__ import annotations

import math
import os

import matplotlib
import numpy as np

matplotlib.use("Agg")

from matplotlib.figure import Figure  # noqa: E402

from . import nodal, robin1d, spectrum2d  # noqa: E402
from ._io import write_csv  # noqa: E402

PI = math.pi

matplotlib.rcParams["svg.hashsalt"] = "robinsquare"

FIG2_PAIRS = [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2),
              (3, 0), (3, 1), (3, 2), (4, 0), (4, 1)]
FIG3_PAIRS = [(4, 0), (4, 1), (3, 3), (4, 2), (5, 0), (5, 1), (4, 3),
              (5, 2), (4, 4), (5, 3), (6, 0), (6, 1), (6, 2)]

FIGURE_IDS = (1, 2, 3, 4, 5, 6)


def _save(fig: Figure, path: str) -> None:
    fig.savefig(path, format="svg", metadata={"Date": None})


def _fig4_thetas() -> list[tuple[str, float]]:
    t1 = math.atan(1.0 / 3.0)
    return [("0", 0.0), ("theta1", t1), ("pi/8", PI / 8), ("pi/4", PI / 4),
            ("3pi/8", 3 * PI / 8), ("theta2", PI / 2 - t1), ("pi/2", PI / 2),
            ("5pi/8", 5 * PI / 8), ("3pi/4", 3 * PI / 4), ("7pi/8", 7 * PI / 8)]


def _fig5_thetas(h: float = 20.0) -> list[tuple[str, float]]:
    ang = nodal.critical_angles_25(h)
    tm, tt = ang.theta_m, ang.theta_t
    return [("0", 0.0), ("pi/2-tt", PI / 2 - tt),
            ("mid(pi/2-tt,tm)", 0.5 * (PI / 2 - tt + tm)), ("tm", tm),
            ("pi/4", PI / 4), ("pi/2-tm", PI / 2 - tm),
            ("mid(pi/2-tm,tt)", 0.5 * (PI / 2 - tm + tt)), ("tt", tt),
            ("pi/2", PI / 2), ("5pi/8", 5 * PI / 8), ("3pi/4", 3 * PI / 4),
            ("13pi/16", 13 * PI / 16)]


def _curve_figure(pairs, h_max: float, out_svg: str, out_csv: str,
                  n: int = 481) -> None:
    hs = np.linspace(1e-6, h_max, n)
    fig = Figure(figsize=(7, 5))
    ax = fig.add_subplot()
    rows = []
    header = ["h"] + [f"lam_{p}_{q}" for p, q in pairs]
    data = {pq: [spectrum2d.eigenvalue(pq, h).value for h in hs] for pq in pairs}
    for (p, q) in pairs:
        ax.plot(hs, data[(p, q)], label=f"({p},{q})", linewidth=1.0)
    for i, h in enumerate(hs):
        rows.append([h] + [data[pq][i] for pq in pairs])
    ax.set_xlabel("h")
    ax.set_ylabel("eigenvalue")
    ax.set_xlim(0.0, h_max)
    ax.legend(fontsize=7, ncol=2)
    _save(fig, out_svg)
    write_csv(out_csv, header, rows)


def _nodal_figure(h: float, thetas, out_svg: str, out_csv: str,
                  resolution: int = 512) -> None:
    fig = Figure(figsize=(6, 6))
    ax = fig.add_subplot()
    rows = []
    cmap = matplotlib.colormaps["tab20"]
    for i, (name, theta) in enumerate(thetas):
        fam = nodal.ThetaFamily(h=h, theta=theta, p=0, q=2)
        color = cmap(i % 20)
        for j, seg in enumerate(nodal.zero_contours(fam, resolution)):
            ax.plot(seg[:, 0], seg[:, 1], color=color, linewidth=0.9,
                    label=name if j == 0 else None)
            for x, y in seg:
                rows.append([name, theta, j, x, y])
    ax.set_xlim(-PI / 2, PI / 2)
    ax.set_ylim(-PI / 2, PI / 2)
    ax.set_aspect("equal")
    ax.legend(fontsize=6, loc="upper right")
    _save(fig, out_svg)
    write_csv(out_csv, ["theta_name", "theta", "polyline", "x", "y"], rows)


def render_figure(fig_id: int, outdir: str) -> list[str]:
    """Render one figure; returns the written paths (SVG first)."""
    os.makedirs(outdir, exist_ok=True)
    svg = os.path.join(outdir, f"fig{fig_id}.svg")
    csv = os.path.join(outdir, f"fig{fig_id}.csv")
    if fig_id == 1:
        hs = np.linspace(0.0, 100.0, 501)
        branches = {p: [robin1d.alpha(p, h) for h in hs] for p in (0, 1, 2)}
        fig = Figure(figsize=(7, 5))
        ax = fig.add_subplot()
        for p in (0, 1, 2):
            ax.plot(hs, branches[p], label=f"alpha_{p}", linewidth=1.2)
        ax.set_xlabel("h")
        ax.set_ylabel("alpha")
        ax.set_xlim(0.0, 100.0)
        ax.legend()
        _save(fig, svg)
        write_csv(csv, ["h", "alpha_0", "alpha_1", "alpha_2"],
                  [[h, branches[0][i], branches[1][i], branches[2][i]]
                   for i, h in enumerate(hs)])
    elif fig_id == 2:
        _curve_figure(FIG2_PAIRS, 12.0, svg, csv)
    elif fig_id == 3:
        _curve_figure(FIG3_PAIRS, 16.0, svg, csv)
    elif fig_id == 4:
        _nodal_figure(math.inf, _fig4_thetas(), svg, csv)
    elif fig_id == 5:
        _nodal_figure(20.0, _fig5_thetas(20.0), svg, csv)
    elif fig_id == 6:
        hs = np.linspace(20.0, 500.0, 481)
        gs = [nodal.g_function(h) for h in hs]
        fig = Figure(figsize=(7, 4))
        ax = fig.add_subplot()
        ax.plot(hs, gs, linewidth=1.2)
        ax.axhline(1.0, color="gray", linewidth=0.6, linestyle="--")
        ax.set_xlabel("h")
        ax.set_ylabel("g(h)")
        _save(fig, svg)
        write_csv(csv, ["h", "g"], [[h, g] for h, g in zip(hs, gs)])
    else:
        raise ValueError(f"unknown figure id {fig_id}; valid: {FIGURE_IDS}")
    return [svg, csv]
