"""Command-line front end.

Subcommands: construct | check | curve | explore | reduce | chain | kk.
Exit codes: 0 success (check: family-free), 1 check found a member, 2 bad
input or I/O failure, 3 explore stopped by a budget with partial results.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from math import comb
from pathlib import Path

from . import bounds, constructions, explore, families, report as report_mod
from .hypergraph import Hypergraph


def _fmt_frac(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator} ({float(v):.6g})"


def _load_hypergraph(path: str) -> Hypergraph:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return Hypergraph.from_json(text)
    return Hypergraph.from_text(text)


def _write_hypergraph(hg: Hypergraph, path: str, fmt: str) -> None:
    if fmt == "json":
        Path(path).write_text(json.dumps(hg.to_json_dict(), sort_keys=True) + "\n")
    else:
        Path(path).write_text(hg.to_text())


def _print_densities(hg: Hypergraph) -> None:
    print(f"n={hg.n} r={hg.r} edges={hg.m}")
    if hg.n >= hg.r:
        print(f"x = {_fmt_frac(hg.shadow_density())}")
        print(f"y = {_fmt_frac(hg.edge_density())}")


def _manifest_for(args, argv: list[str], t0: float) -> report_mod.RunManifest:
    man = report_mod.RunManifest(
        command=argv, seed=getattr(args, "seed", 0) or 0
    )
    man.wall_secs = time.monotonic() - t0
    return man


# -- subcommand implementations --------------------------------------------


def cmd_construct(args, argv) -> int:
    t0 = time.monotonic()
    hg = constructions.parse_construction(args.spec)
    _print_densities(hg)
    if args.out:
        fmt = "text" if args.format == "text" else "json"
        _write_hypergraph(hg, args.out, fmt)
        man = _manifest_for(args, argv, t0)
        man.add_output(args.out)
        man.write(args.out + ".manifest.json")
    return 0


def cmd_check(args, argv) -> int:
    hg = _load_hypergraph(args.file)
    fam = families.ForbiddenFamily.parse(args.family)
    fam.check_compatible(hg)
    free, witness = families.is_free(hg, fam)
    if free:
        print(f"free of {fam}")
        if fam.kind == "cancellative" and hg.n >= hg.r:
            for rep in bounds.check_cancellative_inequalities(hg):
                mark = "ok" if rep.satisfied else "VIOLATED"
                print(f"  {rep.label}: {rep.value:.6g} <= {rep.bound:.6g} [{mark}]")
        if fam.kind == "covering-clique":
            values, monotone = bounds.fisher_ryan_chain(hg, fam.ell)
            chain = ", ".join(f"{v:.6g}" for v in values)
            print(f"  shadow chain: {chain} [{'non-decreasing' if monotone else 'NOT monotone'}]")
        return 0
    print(f"contains a member of {fam}")
    print(json.dumps(witness.to_json_dict(), sort_keys=True))
    return 1


def cmd_curve(args, argv) -> int:
    t0 = time.monotonic()
    curve = bounds.parse_curve(args.curve)
    grid = args.grid
    if grid < 2:
        raise ValueError("grid must have at least 2 points")
    xs = [curve.lo + (curve.hi - curve.lo) * i / (grid - 1) for i in range(grid)]
    ys = [curve(x) for x in xs]
    lines = ["x,y,curve_id"]
    lines += [f"{x!r},{y!r},{curve.curve_id}" for x, y in zip(xs, ys)]
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        fig_path = str(Path(args.out).with_suffix(".png"))
        report_mod.render_curve_figure(
            curve.curve_id, xs, ys, curve.special_points, fig_path
        )
        man = _manifest_for(args, argv, t0)
        man.add_output(args.out)
        man.add_output(fig_path)
        man.write(args.out + ".manifest.json")
        print(f"wrote {args.out} and {fig_path}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_explore(args, argv) -> int:
    t0 = time.monotonic()
    fam = families.ForbiddenFamily.parse(args.family)
    cfg = explore.SearchConfig(
        mode=args.mode,
        iso_reduction=args.iso_reduction,
        seed=args.seed,
        node_budget=args.budget_nodes,
        time_budget=args.budget_secs,
        threads=args.threads,
        samples=args.samples,
    )
    if args.shadow is not None:
        res = explore.max_edges_given_shadow(args.n, args.r, fam, args.shadow, cfg)
        if not res.feasible and res.complete:
            print(f"shadow size {args.shadow}: infeasible")
        else:
            print(f"shadow size {args.shadow}: max edges = {res.max_edges}")
        rep = explore.ExploreReport(family=fam, n=args.n, r=args.r)
        if res.feasible:
            rep.extremal[args.shadow] = (res.max_edges, res.witness)
        rep.stats = {
            "mode": "branch-bound",
            "nodes": res.nodes,
            "pruned": 0,
            "partial": not res.complete,
        }
        partial = not res.complete
    else:
        rep = explore.point_cloud(args.n, args.r, fam, cfg)
        partial = bool(rep.stats.get("partial"))
        maxima = max((m for m, _ in rep.extremal.values()), default=0)
        print(f"points: {len(rep.points)}  max edges: {maxima}")
    out_dir = Path(args.out_dir)
    produced = report_mod.write_report(rep, out_dir)
    man = _manifest_for(args, argv, t0)
    for p in produced:
        man.add_output(p)
    man.write(out_dir / "manifest.json")
    print(f"report written to {out_dir}")
    if partial:
        print("warning: budget exhausted, results are partial")
        return 3
    return 0


def cmd_reduce(args, argv) -> int:
    t0 = time.monotonic()
    hg = _load_hypergraph(args.file)
    before_shadow = hg.shadow().edges
    out, info = explore.algorithm1_reduce(hg, Fraction(args.d))
    assert out.shadow().edges == before_shadow, "shadow changed during reduction"
    print(f"before: edges={hg.m} density={_fmt_frac(hg.edge_density())}")
    print(f"after:  edges={out.m} density={_fmt_frac(out.edge_density())}")
    if info["guard"] != "none":
        print(f"guard: {info['guard']}")
    else:
        print(f"removed: {info['removed']}")
    if info["stalled"]:
        print("note: no further removable edge; threshold not reached")
    if args.out:
        fmt = "text" if args.format == "text" else "json"
        _write_hypergraph(out, args.out, fmt)
        man = _manifest_for(args, argv, t0)
        man.add_output(args.out)
        man.write(args.out + ".manifest.json")
    return 0


def cmd_chain(args, argv) -> int:
    hg = _load_hypergraph(args.file)
    values, monotone = bounds.fisher_ryan_chain(hg, args.ell)
    for i, v in enumerate(values):
        print(f"i={hg.r - args.ell + i}: {v!r}")
    print("non-decreasing" if monotone else "NOT monotone")
    return 0


def cmd_kk(args, argv) -> int:
    z = bounds.solve_shadow_parameter(args.shadow, args.r, args.n)
    bound = bounds.kruskal_katona_max_edges(args.shadow, args.r, args.n)
    print(f"z = {z!r}")
    print(f"max edges <= {bound!r}")
    return 0


# -- argument parsing ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="feasreg",
        description="Feasible-region toolkit for uniform hypergraphs: "
        "constructions, forbidden-family checks, boundary curves, and exact search.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output file path")
    common.add_argument(
        "--format", choices=("json", "text", "csv"), default="json",
        help="output format where applicable",
    )
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget-nodes", type=int, default=None)
    common.add_argument("--budget-secs", type=float, default=None)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a named construction")
    p.add_argument("spec", help="e.g. turan:6:3:3, sts:7, fano-blowup:70:1/7")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", parents=[common], help="test a file for forbidden members")
    p.add_argument("file", help="hypergraph file (json or text)")
    p.add_argument("family", help="e.g. T:3, K:3:4, H:3:4, D, Dr:4, empty")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("curve", parents=[common], help="sample a boundary curve as CSV")
    p.add_argument("curve", help="e.g. universal:3, cancellative-right, general-k:9")
    p.add_argument("--grid", type=int, default=512)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("explore", parents=[common], help="search the feasible region")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--family", required=True)
    p.add_argument("--mode", choices=explore.MODES, default="exact-enumerate")
    p.add_argument("--shadow", type=int, default=None,
                   help="run branch-and-bound for this exact shadow size")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--iso-reduction", action="store_true")
    p.add_argument("--out-dir", default="explore-out")
    p.set_defaults(func=cmd_explore)

    p = sub.add_parser("reduce", parents=[common], help="density reduction preserving the shadow")
    p.add_argument("file")
    p.add_argument("d", help="target edge density in [0,1], e.g. 0.5 or 1/2")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("chain", parents=[common], help="normalized shadow chain values")
    p.add_argument("file")
    p.add_argument("ell", type=int)
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("kk", parents=[common], help="shadow-based edge bound")
    p.add_argument("shadow", type=int)
    p.add_argument("r", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_kk)
    return parser


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args, list(argv))
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
