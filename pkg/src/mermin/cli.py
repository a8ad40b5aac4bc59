"""Command-line entry point: ``mermin analyze|sweep|verify|survey``."""
import argparse
import csv
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from math import isfinite

import numpy as np

from .analytic import analyze
from .numeric import (ALGEBRAIC_BOUND, OptimizerConfig, discrepancy, numeric_max,
                      stationarity_residual)
from .qstate import InvalidStateError, derive_seed, random_haar_pure, random_mixed, pure_to_density
from .states import FAMILIES, PARAMETRIC, FamilySpec, build

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VIOLATED = 3
EXIT_FLAGGED = 4

SWEEP_HEADER = ["param", "lambda_x", "lambda_y", "lambda_z", "mult_x", "mult_y", "mult_z",
                "analytic_max", "case_id", "violated", "numeric_max", "gap"]
SURVEY_HEADER = ["index", "analytic_max", "case_id", "numeric_max", "gap", "flag"]

EXIT_CODES_HELP = """\
exit codes:
  0  success (analyze: not violated; verify: all consistent)
  1  input error (bad arguments, unreadable or invalid state file)
  3  analyze: the analytic verdict is "violated"
  4  verify: at least one state was flagged as inconsistent
"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def fmt(x):
    """17 significant digits: enough to round-trip any double."""
    return format(float(x), ".17g")


def _spec(args, param=None):
    family = "file" if args.file else args.family
    if family is None:
        raise ValueError("give --family or --file")
    return FamilySpec(family, param if param is not None else getattr(args, "param", None),
                      args.file)


def _config(args):
    return OptimizerConfig(starts=args.starts, seed=args.seed)


def _report_rho(rho, with_numeric, cfg, tol):
    b, spectra, verdict = analyze(rho)
    out = {
        "decomposition": b.as_dict(),
        "spectra": [sp.as_dict() for sp in spectra],
        "verdict": verdict.as_dict(),
    }
    if with_numeric:
        opt = numeric_max(rho, cfg)
        out["optimization"] = opt.as_dict()
        out["discrepancy"] = discrepancy(rho, cfg, tol, optimum=opt).as_dict()
    return out, verdict


def cmd_analyze(args):
    spec = _spec(args)
    rho = build(spec)
    report, verdict = _report_rho(rho, args.numeric, _config(args), args.tol)
    report = {"state": {"family": spec.family, "param": spec.param, "path": spec.path}, **report}
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_VIOLATED if verdict.violated else EXIT_OK


def sweep_row(family, param, with_numeric, cfg, tol):
    rho = build(FamilySpec(family, param))
    _, spectra, verdict = analyze(rho)
    row = [fmt(param)]
    row += [fmt(sp.lambda_max) for sp in spectra]
    row += [str(sp.max_multiplicity) for sp in spectra]
    row += [fmt(verdict.value), verdict.case_id, "1" if verdict.violated else "0"]
    if with_numeric:
        opt = numeric_max(rho, cfg)
        row += [fmt(opt.value), fmt(verdict.value - opt.value)]
    else:
        row += ["", ""]
    return row


def _map(fn, argsets, jobs):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, *zip(*argsets)))
    return [fn(*a) for a in argsets]


def cmd_sweep(args):
    if args.family not in PARAMETRIC:
        raise ValueError(f"sweep needs a parametric family ({', '.join(PARAMETRIC)})")
    if args.steps < 2:
        raise ValueError("--steps must be at least 2")
    if not args.lo < args.hi:
        raise ValueError("--from must be smaller than --to")
    params = np.linspace(args.lo, args.hi, args.steps)
    # validate the whole range before any work is done
    for p in params:
        FamilySpec(args.family, float(p))
    cfg = _config(args)
    rows = _map(sweep_row, [(args.family, float(p), args.numeric, cfg, args.tol) for p in params],
                args.jobs)
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(SWEEP_HEADER)
        w.writerows(rows)
    if args.svg:
        series = {"analytic_max": [float(r[7]) for r in rows]}
        if args.numeric:
            series["numeric_max"] = [float(r[10]) for r in rows]
        write_svg(args.svg, params, series, title=f"{args.family}: Mermin maximum vs parameter")
    return EXIT_OK


def verify_one(label, param, rho, cfg, tol):
    opt = numeric_max(rho, cfg)
    rep = discrepancy(rho, cfg, tol, optimum=opt)
    return {
        "label": label,
        "param": param,
        **rep.as_dict(),
        "certificate": {
            "settings": opt.settings.as_dict(),
            "stationarity_residual": stationarity_residual(rho, opt.settings),
            "starts_converged": opt.starts_converged,
            "within_algebraic_bound": opt.value <= ALGEBRAIC_BOUND + 1e-9,
        },
    }


def cmd_verify(args):
    cfg = _config(args)
    if args.file:
        items = [(args.file, None, build(FamilySpec("file", path=args.file)))]
    else:
        if args.family is None:
            raise ValueError("give --family or --file")
        if args.family in PARAMETRIC:
            if args.param:
                params = list(args.param)
            elif args.count:
                params = list(np.linspace(0.0, 1.0, args.count)) if args.count > 1 else [0.0]
            else:
                raise ValueError("give --param (repeatable) or --count for a parametric family")
        else:
            params = [None]
        items = [(args.family, p, build(FamilySpec(args.family, p))) for p in params]
    reports = [verify_one(label, p, rho, cfg, args.tol) for label, p, rho in items]
    flags = Counter(r["flag"] for r in reports)
    summary = {
        "states": len(reports),
        "flags": dict(flags),
        "worst_abs_gap": max(abs(r["gap"]) for r in reports),
        "all_consistent": flags.get("consistent", 0) == len(reports),
        "report_tol": args.tol,
    }
    json.dump({"reports": reports, "summary": summary}, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK if summary["all_consistent"] else EXIT_FLAGGED


def survey_row(kind, seed, index, rank, starts, tol):
    if kind == "pure":
        rho = pure_to_density(random_haar_pure(seed, index))
    else:
        rho = random_mixed(seed, rank, index)
    cfg = OptimizerConfig(starts=starts, seed=derive_seed(seed, index))
    rep = discrepancy(rho, cfg, tol)
    return [str(index), fmt(rep.analytic_value), rep.case_id, fmt(rep.numeric_value),
            fmt(rep.gap), rep.flag]


def cmd_survey(args):
    if args.count <= 0:
        raise ValueError("--count must be positive")
    rows = _map(survey_row, [(args.kind, args.seed, i, args.rank, args.starts, args.tol)
                             for i in range(args.count)], args.jobs)
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(SURVEY_HEADER)
        w.writerows(rows)
    counts = Counter(r[5] for r in rows)
    print("survey: " + ", ".join(f"{k}={counts[k]}" for k in sorted(counts)), file=sys.stderr)
    return EXIT_OK


def write_svg(path, xs, series, title="", width=640, height=400):
    """Line chart of each series against ``xs`` with a dashed reference line at 2."""
    pad = 50
    xs = np.asarray(xs, dtype=float)
    ys_all = [v for vals in series.values() for v in vals if isfinite(v)] + [0.0, 2.0]
    y_lo, y_hi = min(ys_all), max(max(ys_all), 4.0)
    x_lo, x_hi = float(xs.min()), float(xs.max())

    def px(x):
        return pad + (x - x_lo) / (x_hi - x_lo) * (width - 2 * pad)

    def py(y):
        return height - pad - (y - y_lo) / (y_hi - y_lo) * (height - 2 * pad)

    colours = ["#1f77b4", "#d62728", "#2ca02c"]
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
             f'viewBox="0 0 {width} {height}">',
             '<rect width="100%" height="100%" fill="white"/>',
             f'<text x="{width / 2}" y="20" text-anchor="middle" font-size="14">{title}</text>',
             f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="black"/>',
             f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>',
             f'<line x1="{pad}" y1="{py(2.0):.2f}" x2="{width - pad}" y2="{py(2.0):.2f}" '
             'stroke="gray" stroke-dasharray="6,4"/>',
             f'<text x="{pad - 6}" y="{py(2.0) + 4:.2f}" text-anchor="end" font-size="11">2</text>']
    for tick in (x_lo, x_hi):
        parts.append(f'<text x="{px(tick):.2f}" y="{height - pad + 16}" text-anchor="middle" '
                     f'font-size="11">{tick:g}</text>')
    parts.append(f'<text x="{pad - 6}" y="{py(y_hi) + 4:.2f}" text-anchor="end" '
                 f'font-size="11">{y_hi:g}</text>')
    for k, (name, vals) in enumerate(series.items()):
        pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, vals) if isfinite(y))
        colour = colours[k % len(colours)]
        parts.append(f'<polyline fill="none" stroke="{colour}" stroke-width="2" points="{pts}"/>')
        parts.append(f'<text x="{width - pad}" y="{pad + 16 * k}" text-anchor="end" '
                     f'font-size="12" fill="{colour}">{name}</text>')
    parts.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(parts) + "\n")


def _optimizer_flags(p, numeric_switch=False):
    if numeric_switch:
        p.add_argument("--numeric", action="store_true", help="also run the seesaw search")
    p.add_argument("--starts", type=int, default=64, help="seesaw random starts (default 64)")
    p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    p.add_argument("--tol", type=float, default=1e-6, help="discrepancy report tolerance")


def build_parser():
    parser = _Parser(prog="mermin", description="Mermin-inequality analysis of three-qubit states.",
                     epilog=EXIT_CODES_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        return sub.add_parser(name, help=help_, description=help_, epilog=EXIT_CODES_HELP,
                              formatter_class=argparse.RawDescriptionHelpFormatter)

    p = add("analyze", "analyse one state and print a JSON report")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--param", type=float)
    p.add_argument("--file", help="density-matrix JSON file (implies --family file)")
    _optimizer_flags(p, numeric_switch=True)
    p.set_defaults(func=cmd_analyze)

    p = add("sweep", "sweep a family parameter and write CSV (optionally SVG)")
    p.add_argument("--family", choices=PARAMETRIC, required=True)
    p.add_argument("--from", dest="lo", type=float, default=0.0)
    p.add_argument("--to", dest="hi", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=101)
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--svg", help="optional SVG chart path")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    _optimizer_flags(p, numeric_switch=True)
    p.set_defaults(func=cmd_sweep, file=None)

    p = add("verify", "compare analytic and numeric maxima, print a JSON report")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--param", type=float, action="append",
                   help="parameter value (repeatable)")
    p.add_argument("--count", type=int, help="evenly spaced parameters over [0, 1]")
    p.add_argument("--file")
    _optimizer_flags(p)
    p.set_defaults(func=cmd_verify)

    p = add("survey", "random-state survey of analytic vs numeric maxima, CSV output")
    p.add_argument("--kind", choices=("pure", "mixed"), required=True)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--rank", type=int, default=2, help="rank of mixed states (default 2)")
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    _optimizer_flags(p)
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits on --help (0) and on usage errors (1); hand the code back instead
        return exc.code
    try:
        return args.func(args)
    except (InvalidStateError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"mermin {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
