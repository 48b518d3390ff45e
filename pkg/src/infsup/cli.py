"""Command-line front end.

    infsup bounds SHAPE.json [--json OUT] [--cut-angle A]
    infsup counterexample FAMILY [VALUE] [--sweep lo:hi:steps] [--csv OUT]
    infsup check-star SHAPE.json [--center X Y]
    infsup plot SHAPE.json OUT.svg
    infsup sweep SHAPE.json PARAM lo:hi:steps [--csv OUT]

Exit codes: 0 success, 1 numerical failure, 2 bad input, 3 domain not
star-shaped about the center, 4 output not writable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from . import bounds, cutbound, geometry, shapefile, shapes, svgplot
from .geometry import GeometryError, NumericError, StarShapeError

EXIT_OK = 0
EXIT_NUMERIC = 1
EXIT_INPUT = 2
EXIT_NOT_STAR = 3
EXIT_WRITE = 4

SWEEP_HEADER = ["parameter", "omega", "m", "M", "beta_lower_proven",
                "beta_lower_HP_claimed", "beta_upper", "verdict"]

_FAMILY_TYPES = tuple(shapes.FAMILIES.values())

TABLE_ORDER = [
    "omega_HP", "m", "M", "alpha_star_global", "rho_max", "R_min", "tau", "psi", "M_tau",
    "beta_lower_proven", "beta_lower_HP_claimed", "beta_lower_Rrho", "beta_upper",
    "C_upper_proven", "Gamma_upper_proven", "K_upper_smooth_only", "area",
    "normalization_scale",
]


class CLIError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# settings
# ---------------------------------------------------------------------------


def _env(name, conv):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = conv(raw)
    except ValueError:
        raise CLIError(f"{name}={raw!r} is not a valid {conv.__name__}", EXIT_INPUT) from None
    return value


def resolve_settings(args, sf=None):
    """(grid, tol): command-line flag, then the shape file's options, then
    INFSUP_GRID / INFSUP_TOL, then the library defaults."""
    opts = sf.options if sf is not None else {}
    grid = args.grid
    if grid is None:
        grid = opts.get("grid")
    if grid is None:
        grid = _env("INFSUP_GRID", int)
    if grid is None:
        grid = geometry.DEFAULT_GRID
    tol = args.tol
    if tol is None:
        tol = opts.get("tol")
    if tol is None:
        tol = _env("INFSUP_TOL", float)
    if tol is None:
        tol = geometry.DEFAULT_TOL
    if grid < 16:
        raise CLIError(f"grid must be >= 16, got {grid}", EXIT_INPUT)
    if not (tol > 0 and math.isfinite(tol)):
        raise CLIError(f"tol must be positive, got {tol}", EXIT_INPUT)
    return grid, tol


def _load(path):
    if path == "-":
        return shapefile.loads(sys.stdin.read(), source="<stdin>")
    return shapefile.load(path)


def _spec(sf):
    try:
        return sf.spec()
    except (TypeError, ValueError) as exc:
        if isinstance(exc, StarShapeError):
            raise
        raise CLIError(f"invalid shape parameters: {exc}", EXIT_INPUT) from None


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------


def fmt17(x):
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    return format(float(x), ".17g")


def _open_out(path):
    if path == "-":
        return None
    try:
        return open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise CLIError(f"cannot write {path}: {exc.strerror or exc}", EXIT_WRITE) from None


def _write_text(path, text):
    if path == "-":
        sys.stdout.write(text)
        return
    fh = _open_out(path)
    with fh:
        fh.write(text)


def report_json(report: bounds.BoundReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def report_table(report: bounds.BoundReport) -> str:
    d = report.to_dict()
    lines = []
    for key in TABLE_ORDER:
        value = d.get(key)
        if value is None:
            continue
        tag = report.flags.get(key, "")
        lines.append(f"  {key:<24} {value:>22.12g}  {tag}")
    if report.reference:
        lines.append("  reference:")
        for key, value in report.reference.items():
            lines.append(f"    {key:<22} {value:>22.12g}")
    return "\n".join(lines) + "\n"


def sweep_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_HEADER)
    for row in rows:
        w.writerow([fmt17(v) for v in row])
    return buf.getvalue()


def parse_range(text):
    parts = text.split(":")
    if len(parts) != 3:
        raise CLIError(f"range {text!r} must look like lo:hi:steps", EXIT_INPUT)
    try:
        lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise CLIError(f"range {text!r} must look like lo:hi:steps", EXIT_INPUT) from None
    if steps < 2 or not lo < hi:
        raise CLIError(f"range {text!r} needs lo < hi and at least 2 steps", EXIT_INPUT)
    return lo, hi, steps


def _values(lo, hi, steps):
    return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]


# ---------------------------------------------------------------------------
# computations shared by commands and sweep workers
# ---------------------------------------------------------------------------


def shape_report(spec, *, grid, tol, cut_angle=None):
    boundary = spec.build()
    if isinstance(spec, _FAMILY_TYPES) and cut_angle is None:
        cut = spec.cut()
    else:
        angle = math.pi / 2 if cut_angle is None else cut_angle
        cut = cutbound.cut_through_center(boundary, angle)
    return bounds.bound_report(boundary, cut=cut, grid=grid, tol=tol,
                               reference=spec.reference())


def _verdict(report):
    if report.beta_upper is None:
        return ""
    return shapes.REFUTED if report.beta_lower_HP_claimed > report.beta_upper else shapes.NOT_REFUTED


def family_row(family, value, grid, tol):
    spec = shapes.FAMILIES[family](value)
    rep = shape_report(spec, grid=grid, tol=tol)
    verdict = shapes.hp_refutation_report(spec).verdict
    return (value, rep.omega_HP, rep.m, rep.M, rep.beta_lower_proven,
            rep.beta_lower_HP_claimed, rep.beta_upper, verdict)


def shapefile_row(sf, param, value, grid, tol):
    cast = int(round(value)) if shapefile.SCHEMA[sf.kind][param][0] is int else value
    spec = sf.with_param(param, cast).spec()
    rep = shape_report(spec, grid=grid, tol=tol)
    if isinstance(spec, _FAMILY_TYPES):
        verdict = shapes.hp_refutation_report(spec).verdict
    else:
        verdict = _verdict(rep)
    return (value, rep.omega_HP, rep.m, rep.M, rep.beta_lower_proven,
            rep.beta_lower_HP_claimed, rep.beta_upper, verdict)


def run_ordered(func, values, workers):
    """``[func(v) for v in values]``, optionally across processes; the
    result order follows ``values``."""
    if workers <= 1 or len(values) <= 1:
        return [func(v) for v in values]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, values))


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_bounds(args, out):
    sf = _load(args.shape)
    grid, tol = resolve_settings(args, sf)
    spec = _spec(sf)
    report = shape_report(spec, grid=grid, tol=tol, cut_angle=args.cut_angle)
    if args.json == "-":
        out.write(report_json(report))
        return EXIT_OK
    out.write(f"{sf.kind} {json.dumps(sf.params)}\n")
    out.write(report_table(report))
    if args.json:
        _write_text(args.json, report_json(report))
    return EXIT_OK


def cmd_counterexample(args, out):
    grid, tol = resolve_settings(args)
    family = args.family
    if args.sweep is None:
        if args.value is None:
            raise CLIError("give a parameter value or --sweep lo:hi:steps", EXIT_INPUT)
        try:
            ref = shapes.family_report(family, args.value)
        except ValueError as exc:
            raise CLIError(str(exc), EXIT_INPUT) from None
        out.write(f"family        {ref.family}\n")
        out.write(f"parameter     {ref.parameter:.17g}\n")
        out.write(f"omega         {ref.omega:.17g}\n")
        out.write(f"claimed beta2 {ref.claimed_beta2:.17g}  CLAIMED\n")
        out.write(f"upper beta2   {ref.upper_beta2:.17g}  PROVEN\n")
        out.write(f"margin        {ref.margin:.17g}\n")
        rel = "<" if ref.upper_beta2 < ref.claimed_beta2 else ">="
        out.write(f"verdict       {ref.verdict} (upper {ref.upper_beta2:.6g} {rel} "
                  f"claimed {ref.claimed_beta2:.6g})\n")
        return EXIT_OK

    lo, hi, steps = parse_range(args.sweep)
    values = _values(lo, hi, steps)
    try:
        for v in (lo, hi):
            shapes.FAMILIES[family](v)
    except ValueError as exc:
        raise CLIError(f"sweep range: {exc}", EXIT_INPUT) from None
    rows = run_ordered(partial(family_row, family, grid=grid, tol=tol), values, args.workers)
    _emit_sweep(args, out, rows)
    th = shapes.refutation_threshold(family, lo, hi, steps=steps)
    note = sys.stderr if args.csv == "-" else out
    if th is None:
        note.write(f"no refuting {family} parameter in [{lo:g}, {hi:g}]\n")
    else:
        side = ">=" if shapes.FAMILIES[family].extreme > 0 else "<="
        note.write(f"threshold: refuted for {shapes.FAMILIES[family].param_name} {side} "
                   f"{th.value:.3g} (bracket {th.refuting:.10g} / {th.other:.10g})\n")
    return EXIT_OK


def _emit_sweep(args, out, rows):
    if args.csv:
        _write_text(args.csv, sweep_csv(rows))
        return
    out.write(" ".join(f"{h:>14}" for h in SWEEP_HEADER) + "\n")
    for row in rows:
        cells = [f"{v:>14.8g}" if isinstance(v, float) else f"{str(v):>14}" for v in row]
        out.write(" ".join(cells) + "\n")


def cmd_check_star(args, out):
    sf = _load(args.shape)
    if args.center is not None:
        if sf.kind in shapefile.FIXED_CENTER:
            raise CLIError(f"{sf.kind!r} has a fixed center", EXIT_INPUT)
        sf = shapefile.ShapeFile(sf.kind, sf.params, tuple(args.center), sf.options)
    grid, tol = resolve_settings(args, sf)
    boundary = _spec(sf).build()
    scale = boundary.normalization_scale
    rho = geometry.rho_max(boundary, grid=grid, tol=tol)
    R = geometry.r_min(boundary, grid=grid, tol=tol)
    out.write(f"center   {boundary.center[0]:.12g} {boundary.center[1]:.12g}\n")
    out.write(f"rho_max  {rho * scale:.12g}\n")
    out.write(f"R_min    {R * scale:.12g}\n")
    if not rho > 0:
        out.write("verdict  NOT star-shaped with respect to a disk around the center\n")
        return EXIT_NOT_STAR
    rr = bounds.radii_ratio_from(rho, R)
    out.write(f"tau      {rr.tau:.12g}\n")
    out.write(f"psi      {rr.psi:.12g}\n")
    out.write("verdict  star-shaped\n")
    return EXIT_OK


def cmd_plot(args, out):
    sf = _load(args.shape)
    grid, tol = resolve_settings(args, sf)
    spec = _spec(sf)
    boundary = spec.build()
    title = args.title if args.title is not None else f"{sf.kind} {json.dumps(sf.params)}"
    text = svgplot.render_svg(boundary, title=title, grid=grid, tol=tol)
    _write_text(args.out, text)
    if args.out != "-":
        out.write(f"wrote {args.out}\n")
    return EXIT_OK


def cmd_sweep(args, out):
    sf = _load(args.shape)
    grid, tol = resolve_settings(args, sf)
    if args.param not in shapefile.SCHEMA[sf.kind]:
        raise CLIError(f"{args.param!r} is not a parameter of {sf.kind!r}", EXIT_INPUT)
    if shapefile.SCHEMA[sf.kind][args.param][0] not in (int, float):
        raise CLIError(f"{args.param!r} is not a numeric parameter", EXIT_INPUT)
    lo, hi, steps = parse_range(args.range)
    values = _values(lo, hi, steps)
    for v in (lo, hi):
        _spec(sf.with_param(args.param, v if shapefile.SCHEMA[sf.kind][args.param][0] is float
                            else int(round(v))))
    rows = run_ordered(partial(shapefile_row, sf, args.param, grid=grid, tol=tol),
                       values, args.workers)
    _emit_sweep(args, out, rows)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _common(p):
    p.add_argument("--grid", type=int, default=None,
                   help="grid points per 2*pi for sup/inf searches (env INFSUP_GRID)")
    p.add_argument("--tol", type=float, default=None,
                   help="angular refinement tolerance (env INFSUP_TOL)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="infsup",
        description="Certified bounds on the inf-sup constant of star-shaped plane domains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="full bound report for a shape file")
    p.add_argument("shape", help="JSON shape file ('-' for stdin)")
    p.add_argument("--json", metavar="OUT", help="also write the report as JSON ('-' for stdout only)")
    p.add_argument("--cut-angle", type=float, default=None,
                   help="direction of the cut through the center (default: vertical, "
                        "or the closed-form cut for counterexample families)")
    _common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("counterexample", help="Horgan-Payne refutation check")
    p.add_argument("family", choices=sorted(shapes.FAMILIES))
    p.add_argument("value", nargs="?", type=float)
    p.add_argument("--sweep", metavar="LO:HI:STEPS")
    p.add_argument("--csv", metavar="OUT", help="write sweep rows as CSV ('-' for stdout)")
    p.add_argument("--workers", type=int, default=1)
    _common(p)
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("check-star", help="star-shapedness diagnostics about a center")
    p.add_argument("shape")
    p.add_argument("--center", nargs=2, type=float, metavar=("X", "Y"))
    _common(p)
    p.set_defaults(func=cmd_check_star)

    p = sub.add_parser("plot", help="SVG of the boundary")
    p.add_argument("shape")
    p.add_argument("out", help="output SVG path ('-' for stdout)")
    p.add_argument("--title", default=None)
    _common(p)
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("sweep", help="sweep one numeric parameter of a shape file")
    p.add_argument("shape")
    p.add_argument("param")
    p.add_argument("range", metavar="LO:HI:STEPS")
    p.add_argument("--csv", metavar="OUT")
    p.add_argument("--workers", type=int, default=1)
    _common(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be at least 1")
    try:
        return args.func(args, out)
    except CLIError as exc:
        print(f"infsup: error: {exc}", file=sys.stderr)
        return exc.code
    except shapefile.ShapeFileError as exc:
        print(f"infsup: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except StarShapeError as exc:
        msg = str(exc)
        if exc.theta is not None and "theta" not in msg:
            msg += f" (theta={exc.theta:.6g})"
        print(f"infsup: not star-shaped: {msg}", file=sys.stderr)
        return EXIT_NOT_STAR
    except GeometryError as exc:
        print(f"infsup: invalid geometry: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NumericError, bounds.IdentityError) as exc:
        print(f"infsup: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
