"""Command-line front end.

Subcommands: ``eval`` (pointwise or gridded operator values), ``nodes``
(node listing with distances to m), ``check`` (t1..t4 node-geometry and
limit checks), ``figure`` (reproduce figures f1..f10 as CSV + SVG) and
``converge`` (sup-error scan along a degree sweep).

Exit codes: 0 success, 1 a checked assertion failed, 2 usage or
validation error. CSV goes to stdout unless ``--out`` names a file; the
environment variable ``STANCU_LAB_GRID=<mod_grid>,<sup_grid>`` overrides
the default measurement grids.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from .bounds import (
    BoundConfig,
    DEFAULT_CONFIG,
    RatioFamily,
    corollary2_bound,
    operator_distance,
    sup_error,
    theorem4_experiment,
)
from .figures import FIGURES, NODE_HEADER, build_figure, fmt, node_rows, with_overrides
from .nodes import check_theorem1, check_theorem2, check_theorem3
from .operators import BUILTIN_FUNCTIONS, FunctionSpec, StancuParams, apply_operator

__all__ = ["main"]


def _env_config() -> BoundConfig:
    raw = os.environ.get("STANCU_LAB_GRID")
    if not raw:
        return DEFAULT_CONFIG
    parts = raw.split(",")
    if len(parts) != 2:
        raise ValueError("STANCU_LAB_GRID must look like '<mod_grid>,<sup_grid>'")
    try:
        mod_size, sup_size = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError("STANCU_LAB_GRID must hold two integers") from None
    return BoundConfig(mod_grid_size=mod_size, sup_grid_size=sup_size)


def _emit(lines: list[str], out: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8", newline="\n")


def _parse_pair(raw: str) -> tuple[float, float]:
    parts = raw.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'alpha,beta', got {raw!r}")
    return float(parts[0]), float(parts[1])


def _parse_list(raw: str, cast) -> list:
    try:
        return [cast(v) for v in raw.split(",") if v != ""]
    except ValueError:
        raise ValueError(f"could not parse list {raw!r}") from None


def cmd_eval(args) -> int:
    f = FunctionSpec.builtin(args.function)
    p = StancuParams(args.n, args.alpha, args.beta)
    plain = StancuParams(args.n, 0.0, 0.0)
    if args.x is not None:
        xs = [float(args.x)]
    else:
        xs = np.linspace(0.0, 1.0, args.grid).tolist()
    lines = ["x,f,bernstein,stancu"]
    for x in xs:
        lines.append(
            ",".join(
                fmt(v)
                for v in (x, f(x), apply_operator(f, plain, x), apply_operator(f, p, x))
            )
        )
    _emit(lines, args.out)
    return 0


def cmd_nodes(args) -> int:
    p = StancuParams(args.n, args.alpha, args.beta)
    lines = [NODE_HEADER] + [",".join(row) for row in node_rows(p)]
    _emit(lines, args.out)
    return 0


def _check_t1(args) -> int:
    if args.n_list:
        degrees = _parse_list(args.n_list, int)
    elif args.n is not None:
        degrees = [args.n]
    else:
        raise ValueError("t1 needs --n or --n-list")
    report = check_theorem1(StancuParams(max(degrees), args.alpha, args.beta), degrees)
    lines = ["n,max_gap,bound"]
    for n, g, b in zip(report.degrees, report.max_gaps, report.bounds):
        lines.append(f"{n},{fmt(g)},{fmt(b)}")
    _emit(lines, args.out)
    if not report.within_bound:
        bad = int(np.argmax(report.max_gaps > report.bounds + 1e-12))
        print(f"t1: FAIL at n={report.degrees[bad]}: max_gap exceeds bound", file=sys.stderr)
        return 1
    if not report.bounds_decreasing:
        print("t1: FAIL: bound sequence is not strictly decreasing", file=sys.stderr)
        return 1
    print("t1: OK")
    return 0


def _check_t2(args) -> int:
    if args.n is None:
        raise ValueError("t2 needs --n")
    p = StancuParams(args.n, args.alpha, args.beta)
    report = check_theorem2(p)
    lines = [NODE_HEADER] + [",".join(row) for row in node_rows(p)]
    _emit(lines, args.out)
    if not report.ok:
        bad = report.stancu_dist > report.bernstein_dist + 1e-15
        k = int(np.argmax(bad)) if bad.any() else 0
        print(f"t2: FAIL at k={k}", file=sys.stderr)
        return 1
    crossings = ",".join(str(k) for k in report.crossing_indices) or "none"
    print(f"t2: OK (contraction {fmt(report.contraction)}, crossings at k={crossings})")
    return 0


def _check_t3(args) -> int:
    if args.n is None or len(args.pair or []) < 2:
        raise ValueError("t3 needs --n and at least two --pair alpha,beta")
    pairs = [_parse_pair(raw) for raw in args.pair]
    params = [StancuParams(args.n, a, b) for a, b in pairs]
    lines = ["k," + ",".join(f"node_{i},dist_{i}" for i in range(len(pairs)))]
    node_cols = [(np.arange(args.n + 1) + a) / (args.n + b) for a, b in pairs]
    m = pairs[0][0] / pairs[0][1]
    for k in range(args.n + 1):
        cells = [str(k)]
        for col in node_cols:
            cells += [fmt(col[k]), fmt(abs(col[k] - m))]
        lines.append(",".join(cells))
    _emit(lines, args.out)
    for p1, p2 in zip(params, params[1:]):
        report = check_theorem3(p1, p2)
        if not report.ok:
            print(
                f"t3: FAIL for pairs ({p1.alpha},{p1.beta}) -> ({p2.alpha},{p2.beta})",
                file=sys.stderr,
            )
            return 1
    print(f"t3: OK (m={fmt(m)})")
    return 0


def _check_t4(args) -> int:
    if args.n is None:
        raise ValueError("t4 needs --n")
    f = FunctionSpec.builtin(args.function)
    scales = _parse_list(args.scales, float)
    fam = RatioFamily(args.alpha, args.beta, tuple(scales))
    report = theorem4_experiment(f, args.n, fam, _env_config())
    lines = ["level,alpha,beta,distance,bound"]
    for j, ((a, b), d, bd) in enumerate(zip(report.levels, report.distances, report.bounds)):
        lines.append(f"{j},{fmt(a)},{fmt(b)},{fmt(d)},{fmt(bd)}")
    _emit(lines, args.out)
    if not report.within_bound:
        bad = int(np.argmax(report.distances > report.bounds))
        print(f"t4: FAIL at level {bad}: distance exceeds its bound", file=sys.stderr)
        return 1
    if args.epsilon is not None and not report.final_distance < args.epsilon:
        print(
            f"t4: FAIL: final distance {fmt(report.final_distance)} not below "
            f"epsilon {fmt(args.epsilon)}",
            file=sys.stderr,
        )
        return 1
    print(f"t4: OK (final distance {fmt(report.final_distance)} at f(m)={fmt(report.f_at_m)})")
    return 0


def cmd_check(args) -> int:
    return {"t1": _check_t1, "t2": _check_t2, "t3": _check_t3, "t4": _check_t4}[args.theorem](args)


def cmd_figure(args) -> int:
    job = FIGURES.get(args.figure_id)
    if job is None:
        raise ValueError(f"unknown figure {args.figure_id!r}; choose f1..f10")
    job = with_overrides(job, n=args.n, grid_size=args.grid, alpha=args.alpha, beta=args.beta)
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        csv_text, svg_text = build_figure(job)
        csv_path = out_dir / f"{job.figure_id}.csv"
        svg_path = out_dir / f"{job.figure_id}.svg"
        csv_path.write_text(csv_text, encoding="utf-8", newline="\n")
        svg_path.write_text(svg_text, encoding="utf-8", newline="\n")
    except OSError as exc:
        print(f"error: cannot write figure outputs: {exc}", file=sys.stderr)
        return 2
    print(csv_path)
    print(svg_path)
    return 0


def cmd_converge(args) -> int:
    f = FunctionSpec.builtin(args.function)
    degrees = _parse_list(args.n_list, int)
    if not degrees or any(b <= a for a, b in zip(degrees, degrees[1:])):
        raise ValueError("--n-list must be non-empty and strictly increasing")
    cfg = _env_config()
    lines = ["n,sup_error,operator_distance,corollary2_bound,t1_bound"]
    rows = []
    for n in degrees:
        p = StancuParams(n, args.alpha, args.beta)
        row = (
            sup_error(f, p, cfg),
            operator_distance(f, p, cfg),
            corollary2_bound(f, p, cfg),
            (args.alpha + args.beta) / (n + args.beta),
        )
        rows.append((n, row))
        lines.append(f"{n}," + ",".join(fmt(v) for v in row))
    _emit(lines, args.out)
    for n, (sup, _, bound, _) in rows:
        if sup > bound + 1e-9:
            print(f"converge: FAIL at n={n}: sup_error exceeds corollary2_bound", file=sys.stderr)
            return 1
    return 0


def _add_common(sub, function=True):
    if function:
        sub.add_argument("--function", choices=BUILTIN_FUNCTIONS, default="sin15")
    sub.add_argument("--n", type=int, default=None)
    sub.add_argument("--alpha", type=float, default=0.0)
    sub.add_argument("--beta", type=float, default=0.0)
    sub.add_argument("--out", default=None, help="write CSV here instead of stdout")


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stancu-lab",
        description="Bernstein-Stancu operator experiments: evaluation, node geometry, "
        "convergence scans and figure reproduction.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("eval", help="operator values at a point or over a grid")
    _add_common(s)
    s.add_argument("--x", type=float, default=None)
    s.add_argument("--grid", type=int, default=101)
    s.set_defaults(func=cmd_eval)

    s = subs.add_parser("nodes", help="node listing with gaps and distances to m")
    _add_common(s, function=False)
    s.set_defaults(func=cmd_nodes)

    s = subs.add_parser("check", help="run one of the t1..t4 checks")
    s.add_argument("theorem", choices=("t1", "t2", "t3", "t4"))
    _add_common(s)
    s.add_argument("--n-list", default=None, help="comma list of degrees (t1)")
    s.add_argument("--pair", action="append", default=None, help="alpha,beta (t3; repeat)")
    s.add_argument("--scales", default="1,10,100", help="comma list of scale factors (t4)")
    s.add_argument("--epsilon", type=float, default=None, help="final-distance target (t4)")
    s.set_defaults(func=cmd_check)

    s = subs.add_parser("figure", help="reproduce a figure as CSV + SVG")
    s.add_argument("figure_id", metavar="figure-id", help="f1..f10")
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--alpha", type=float, default=None)
    s.add_argument("--beta", type=float, default=None)
    s.add_argument("--grid", type=int, default=None)
    s.add_argument("--out", default=".", help="output directory")
    s.set_defaults(func=cmd_figure)

    s = subs.add_parser("converge", help="sup-error scan over a degree sweep")
    _add_common(s)
    s.add_argument("--n-list", required=True, help="comma list of degrees, increasing")
    s.set_defaults(func=cmd_converge)

    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
