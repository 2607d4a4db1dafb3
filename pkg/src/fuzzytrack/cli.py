"""Command-line front end: single inferences, CSV track filtering, and
Monte Carlo filter comparisons.

Exit codes: 0 success, 1 usage error (unknown flag or subcommand),
2 invalid data or domain error.  Output files are written atomically, so no
partial file is left behind on any error path.
"""

import argparse
import csv
import os
import sys
import tempfile

from .backend import backend_name
from .errors import DataFormatError
from .inference import InferenceConfig, controller
from .kalman import run_kalman
from .simulate import (DEFAULT_NOISE_VARIANCE, DEFAULT_PERIOD, DEFAULT_STEPS,
                       FAMILIES, GROWTH_DEFAULT_C1, GROWTH_DEFAULT_C2,
                       SATURATING_DEFAULT_C1, SATURATING_DEFAULT_C2,
                       TrajectorySpec, monte_carlo)
from .tracking import MeasurementSeries, run_filter


def _fmt(value: float) -> str:
    """12 significant digits; the CSV number format."""
    return f"{value:.12g}"


def _fmt_fixed(value: float) -> str:
    """12 decimal places for single printed angles; never "-0.000...0"."""
    text = f"{value:.12f}"
    if text.startswith("-") and float(text) == 0.0:
        text = text[1:]
    return text


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".part")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _read_track_csv(path: str):
    """Parse a `k,x` CSV; k must count up from 1 without gaps."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [c.strip().lstrip("﻿") for c in header] != ["k", "x"]:
            raise DataFormatError("input must start with the header 'k,x'")
        values = []
        for row_no, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 2:
                raise DataFormatError(
                    f"row {row_no}: expected 2 fields, got {len(row)}")
            try:
                k = int(row[0])
                x = float(row[1])
            except ValueError:
                raise DataFormatError(
                    f"row {row_no}: could not parse '{','.join(row)}'") from None
            if k != len(values) + 1:
                raise DataFormatError(
                    f"row {row_no}: expected k={len(values) + 1}, got {k}")
            values.append(x)
    return values


def _inference_config(args) -> InferenceConfig:
    return InferenceConfig(sigma=args.sigma, grid_points=args.grid)


def cmd_infer(args) -> int:
    adjustment = controller(args.theta, _inference_config(args))
    print(_fmt_fixed(adjustment))
    return 0


def cmd_track(args) -> int:
    values = _read_track_csv(args.input)
    series = MeasurementSeries.from_values(values, args.period)
    fuzzy = run_filter(series, _inference_config(args))

    columns = ["k", "x_meas", "x_fuzzy"]
    rows = [[str(k + 1), _fmt(x), _fmt(f)]
            for k, (x, f) in enumerate(zip(values, fuzzy))]
    if args.kalman:
        kalman = run_kalman(series, args.q, args.r)
        columns.append("x_kalman")
        for row, est in zip(rows, kalman):
            row.append(_fmt(est))

    lines = [",".join(columns)] + [",".join(row) for row in rows]
    _write_atomic(args.output, "\n".join(lines) + "\n")
    return 0


def cmd_compare(args) -> int:
    defaults = {
        "exp-growth": (GROWTH_DEFAULT_C1, GROWTH_DEFAULT_C2),
        "exp-saturating": (SATURATING_DEFAULT_C1, SATURATING_DEFAULT_C2),
    }[args.trajectory]
    c1 = defaults[0] if args.c1 is None else args.c1
    c2 = defaults[1] if args.c2 is None else args.c2
    traj = TrajectorySpec(args.trajectory, c1, c2, args.steps, args.period)
    summary = monte_carlo(traj, args.noise_var, args.seed, args.runs,
                          _inference_config(args), args.q, args.r,
                          workers=args.workers)

    lines = ["run,seed,C1,C2,winner"]
    for r in summary.results:
        lines.append(f"{r.run},{r.seed},{_fmt(r.fuzzy_error)},"
                     f"{_fmt(r.kalman_error)},{int(r.fuzzy_wins)}")
    _write_atomic(args.output, "\n".join(lines) + "\n")
    print(f"win_rate={_fmt(summary.win_rate)}")
    return 0


class _Parser(argparse.ArgumentParser):
    """Usage problems exit 1; data/domain problems exit 2 elsewhere."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_inference_flags(sub):
    sub.add_argument("--sigma", type=float, default=1.0,
                     help="bell width; the output is invariant to it")
    sub.add_argument("--grid", type=int, default=1201,
                     help="odd number of centroid quadrature nodes")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fuzzytrack",
                     description="Fuzzy tracking filter, Kalman baseline, "
                                 "and Monte Carlo comparison harness "
                                 f"(kernel backend: {backend_name()})")
    sub = parser.add_subparsers(dest="command", required=True)

    infer = sub.add_parser("infer", help="one controller evaluation")
    infer.add_argument("--theta", type=float, required=True,
                       help="heading-change angle in radians, within [-pi, pi]")
    _add_inference_flags(infer)
    infer.set_defaults(func=cmd_infer)

    track = sub.add_parser("track", help="filter a k,x CSV file")
    track.add_argument("--input", required=True, help="CSV with header k,x")
    track.add_argument("--period", type=float, required=True,
                       help="sampling period")
    track.add_argument("--output", required=True, help="output CSV path")
    track.add_argument("--kalman", action="store_true",
                       help="append a Kalman estimate column")
    track.add_argument("--q", type=float, default=1.0,
                       help="Kalman process variance")
    track.add_argument("--r", type=float, default=0.5,
                       help="Kalman measurement variance")
    _add_inference_flags(track)
    track.set_defaults(func=cmd_track)

    compare = sub.add_parser("compare",
                             help="Monte Carlo fuzzy-vs-Kalman comparison")
    compare.add_argument("--trajectory", choices=FAMILIES, required=True)
    compare.add_argument("--c1", type=float, default=None,
                         help="trajectory amplitude (family default if omitted)")
    compare.add_argument("--c2", type=float, default=None,
                         help="trajectory rate (family default if omitted)")
    compare.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    compare.add_argument("--period", type=float, default=DEFAULT_PERIOD)
    compare.add_argument("--noise-var", type=float,
                         default=DEFAULT_NOISE_VARIANCE,
                         help="measurement noise variance, below 0.5")
    compare.add_argument("--seed", type=int, default=7, help="base seed")
    compare.add_argument("--runs", type=int, default=30)
    compare.add_argument("--workers", type=int, default=1,
                         help="parallel comparison runs")
    compare.add_argument("--q", type=float, default=1.0,
                         help="Kalman process variance")
    compare.add_argument("--r", type=float, default=0.5,
                         help="Kalman measurement variance")
    compare.add_argument("--output", required=True, help="per-run CSV path")
    _add_inference_flags(compare)
    compare.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
