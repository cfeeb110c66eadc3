"""Command-line front end.

Subcommands: spectrum, tables, crossings, nodal, fk, figures, verify.
Output lands in --out (or --outdir for figures), defaulting under the
directory named by ROBINSQUARE_OUTDIR (fallback: current directory).
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import asdict

from . import acceptance, crossings, faberkrahn, figures, nodal, spectrum2d
from ._io import write_csv, write_json
from .crossings import CurvePair
from .nodal import ThetaFamily

MIN_RESOLUTION, MAX_RESOLUTION = 64, 8192


def _parse_h(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity", "dirichlet"):
        return math.inf
    try:
        h = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid Robin parameter {text!r}")
    if math.isnan(h) or h < 0:
        raise argparse.ArgumentTypeError("Robin parameter must be >= 0 or 'inf'")
    return h


def _parse_label(text: str) -> tuple[int, int]:
    try:
        p, q = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"label must be 'p,q', got {text!r}")
    if p < 0 or q < 0:
        raise argparse.ArgumentTypeError("label indices must be nonnegative")
    return p, q


def _parse_resolution(text: str) -> int:
    try:
        r = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid resolution {text!r}")
    if not (MIN_RESOLUTION <= r <= MAX_RESOLUTION):
        raise argparse.ArgumentTypeError(
            f"resolution must be in [{MIN_RESOLUTION}, {MAX_RESOLUTION}]")
    return r


def _default_outdir() -> str:
    return os.environ.get("ROBINSQUARE_OUTDIR", ".")


def _out_path(args, default_name: str) -> str:
    if args.out:
        return args.out
    return os.path.join(_default_outdir(), default_name)


def _h_repr(h: float) -> str:
    return "inf" if math.isinf(h) else repr(h)


def cmd_spectrum(args) -> int:
    table = spectrum2d.enumerate_spectrum(args.h, args.lmax,
                                          cluster_rtol=args.cluster_tol)
    rows = table.csv_rows()
    path = _out_path(args, f"spectrum.{args.format}")
    if args.format == "csv":
        write_csv(path, ["m", "n", "value", "k_min", "k_max"], rows)
    else:
        write_json(path, {"h": _h_repr(args.h), "lmax": args.lmax,
                          "entries": [{"m": m, "n": n, "value": v,
                                       "k_min": kmin, "k_max": kmax}
                                      for m, n, v, kmin, kmax in rows]})
    print(path)
    return 0


def cmd_tables(args) -> int:
    neumann, dirichlet = spectrum2d.endpoint_tables()
    which = {"neumann": [("neumann", neumann)],
             "dirichlet": [("dirichlet", dirichlet)],
             "both": [("neumann", neumann), ("dirichlet", dirichlet)]}[args.which]
    outdir = args.out or _default_outdir()
    os.makedirs(outdir, exist_ok=True)
    for name, rows in which:
        path = os.path.join(outdir, f"table_{name}.{args.format}")
        if args.format == "csv":
            write_csv(path, ["m", "n", "value", "k_min", "k_max"], rows)
        else:
            write_json(path, [{"m": m, "n": n, "value": v,
                               "k_min": kmin, "k_max": kmax}
                              for m, n, v, kmin, kmax in rows])
        print(path)
    return 0


def cmd_crossings(args) -> int:
    if args.pair:
        a, b = args.pair
        ev = crossings.find_crossing(CurvePair.make(a, b), args.hmin, args.hmax)
        events = [ev] if ev else []
    elif args.labels:
        events = crossings.multi_crossing_scan(args.labels, args.hmin, args.hmax)
    elif args.threshold is not None:
        if args.threshold_label is None:
            print("--threshold requires --threshold-label", file=sys.stderr)
            return 2
        label, level = args.threshold_label, args.threshold
        h = crossings.threshold_h(label, level)
        path = _out_path(args, f"threshold.{args.format}")
        if args.format == "csv":
            write_csv(path, ["m", "n", "level", "h"],
                      [[label[0], label[1], level, h]])
        else:
            write_json(path, {"label": list(label), "level": level, "h": h})
        print(path)
        return 0
    else:
        print("one of --pair, --labels, --threshold is required", file=sys.stderr)
        return 2
    rows = [[ev.pair.a.p, ev.pair.a.q, ev.pair.b.p, ev.pair.b.q,
             ev.h_star, ev.lambda_star, ev.sigma_prime_sign,
             ev.scan_sign_changes] for ev in events]
    path = _out_path(args, f"crossings.{args.format}")
    if args.format == "csv":
        write_csv(path, ["a_p", "a_q", "b_p", "b_q", "h_star", "lambda_star",
                         "sigma_prime_sign", "scan_sign_changes"], rows)
    else:
        write_json(path, [{"pair": [[ev.pair.a.p, ev.pair.a.q],
                                    [ev.pair.b.p, ev.pair.b.q]],
                           "h_star": ev.h_star, "lambda_star": ev.lambda_star,
                           "sigma_prime_sign": ev.sigma_prime_sign,
                           "scan_sign_changes": ev.scan_sign_changes}
                          for ev in events])
    print(path)
    return 0


def cmd_nodal(args) -> int:
    family = ThetaFamily(h=args.h, theta=args.theta, p=args.p, q=args.q)
    if args.format == "svg":
        import matplotlib
        matplotlib.use("Agg")
        from matplotlib.figure import Figure
        segs = nodal.zero_contours(family, args.resolution)
        fig = Figure(figsize=(6, 6))
        ax = fig.add_subplot()
        for seg in segs:
            ax.plot(seg[:, 0], seg[:, 1], color="black", linewidth=0.9)
        ax.set_xlim(-math.pi / 2, math.pi / 2)
        ax.set_ylim(-math.pi / 2, math.pi / 2)
        ax.set_aspect("equal")
        path = _out_path(args, "nodal.svg")
        fig.savefig(path, format="svg", metadata={"Date": None})
    elif args.format == "csv":
        segs = nodal.zero_contours(family, args.resolution)
        rows = [[i, x, y] for i, seg in enumerate(segs) for x, y in seg]
        path = _out_path(args, "nodal.csv")
        write_csv(path, ["polyline", "x", "y"], rows)
    else:
        census = nodal.count_nodal_domains(family, args.resolution)
        payload = asdict(census)
        payload["h"] = _h_repr(family.h)
        payload["theta"] = family.theta
        payload["p"], payload["q"] = family.p, family.q
        path = _out_path(args, "census.json")
        write_json(path, payload)
    print(path)
    return 0


def cmd_fk(args) -> int:
    if args.candidates:
        payload = {"candidates": faberkrahn.dirichlet_candidates()}
        path = _out_path(args, "fk_candidates.json")
        write_json(path, payload)
    elif args.htilde is not None:
        gs = faberkrahn.disc_ground_state(args.htilde)
        path = _out_path(args, f"fk.{args.format}")
        if args.format == "csv":
            write_csv(path, ["h_tilde", "alpha_root", "lambda1"],
                      [[gs.h_tilde, gs.alpha_root, gs.lambda1]])
        else:
            write_json(path, {"h_tilde": _h_repr(gs.h_tilde),
                              "alpha_root": gs.alpha_root,
                              "lambda1": gs.lambda1})
    elif args.pleijel_lambda is not None:
        check = faberkrahn.pleijel_exclusion(args.pleijel_n, args.pleijel_lambda)
        path = _out_path(args, "pleijel.json")
        write_json(path, asdict(check))
    else:
        print("one of --htilde, --candidates, --pleijel-lambda is required",
              file=sys.stderr)
        return 2
    print(path)
    return 0


def cmd_figures(args) -> int:
    outdir = args.outdir or _default_outdir()
    ids = [args.id] if args.id else list(figures.FIGURE_IDS)
    for fig_id in ids:
        for path in figures.render_figure(fig_id, outdir):
            print(path)
    return 0


def cmd_verify(args) -> int:
    results = acceptance.run(only=args.only)
    if not results:
        print(f"no checks match {args.only!r}", file=sys.stderr)
        return 2
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"{status}  {res.key}  {res.name}: {res.detail}")
    if args.json:
        write_json(args.json, [asdict(r) for r in results])
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="robinsquare",
        description="Robin spectrum of the square: curves, crossings, "
                    "nodal censuses and exclusion bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="enumerate the spectrum below a cutoff")
    sp.add_argument("--h", type=_parse_h, required=True)
    sp.add_argument("--lmax", type=float, required=True)
    sp.add_argument("--cluster-tol", type=float, default=spectrum2d.CLUSTER_RTOL)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_spectrum)

    tb = sub.add_parser("tables", help="endpoint eigenvalue tables")
    tb.add_argument("--which", choices=["neumann", "dirichlet", "both"],
                    default="both")
    tb.add_argument("--format", choices=["csv", "json"], default="csv")
    tb.add_argument("--out", help="output directory")
    tb.set_defaults(func=cmd_tables)

    cr = sub.add_parser("crossings", help="find eigenvalue-curve crossings")
    cr.add_argument("--pair", nargs=2, type=_parse_label, metavar="P,Q")
    cr.add_argument("--labels", nargs="+", type=_parse_label, metavar="P,Q")
    cr.add_argument("--threshold", type=float,
                    help="level C for the threshold equation lambda(h) = C")
    cr.add_argument("--threshold-label", type=_parse_label, metavar="P,Q")
    cr.add_argument("--hmin", type=float, default=0.1)
    cr.add_argument("--hmax", type=float, default=100.0)
    cr.add_argument("--format", choices=["csv", "json"], default="csv")
    cr.add_argument("--out")
    cr.set_defaults(func=cmd_crossings)

    nd = sub.add_parser("nodal", help="nodal census or nodal-set export")
    nd.add_argument("--h", type=_parse_h, required=True)
    nd.add_argument("--theta", type=float, required=True)
    nd.add_argument("--p", type=int, required=True)
    nd.add_argument("--q", type=int, required=True)
    nd.add_argument("--resolution", type=_parse_resolution, default=512)
    nd.add_argument("--format", choices=["json", "csv", "svg"], default="json")
    nd.add_argument("--out")
    nd.set_defaults(func=cmd_nodal)

    fk = sub.add_parser("fk", help="disc ground state and exclusion tests")
    fk.add_argument("--htilde", type=_parse_h)
    fk.add_argument("--candidates", action="store_true")
    fk.add_argument("--pleijel-lambda", type=float)
    fk.add_argument("--pleijel-n", type=int)
    fk.add_argument("--format", choices=["csv", "json"], default="json")
    fk.add_argument("--out")
    fk.set_defaults(func=cmd_fk)

    fg = sub.add_parser("figures", help="render figure reproductions")
    fg.add_argument("--id", type=int, choices=figures.FIGURE_IDS)
    fg.add_argument("--outdir")
    fg.set_defaults(func=cmd_figures)

    vf = sub.add_parser("verify", help="run the verification checks")
    vf.add_argument("--only", help="filter checks by key or name substring")
    vf.add_argument("--json", help="also write a JSON report")
    vf.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, nodal.CensusUnstableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
