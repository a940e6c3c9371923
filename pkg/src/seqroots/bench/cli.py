"""Command-line benchmark harness.

Exit status: 0 converged (or sweep/generation finished), 1 solve did not
converge, 2 bad input, 3 numerical failure (collision or divergence).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..errors import IterationError, RootFindingError
from ..estimator import make_init, make_mode
from ..initializer import Explicit
from ..solver import DEFAULT_STATIONARY_RTOL, DEFAULT_TOL, SolverConfig
from .coeffio import (dump_json, export_trace, format_coeff_file, load_coeffs, parse_points,
                      read_text, write_table)
from .experiments import (ExperimentSpec, compare_baselines, radius_grid, run_radius_sweep,
                          run_schedule_sweep, run_solve)
from .generators import gen_random_poly, make_degenerate_poly

EXIT_OK = 0
EXIT_NOT_CONVERGED = 1
EXIT_INPUT = 2
EXIT_NUMERICAL = 3


class UsageError(Exception):
    pass


def _init(text):
    if text.startswith("explicit:"):
        return Explicit(parse_points(read_text(text[len("explicit:"):])))
    return make_init(text)


def _mode(text):
    if text == "hard":
        return make_mode("hard")
    if text.startswith("soft"):
        _, _, arg = text.partition(":")
        if not arg:
            return make_mode("soft")
        q, eps = (float(v) for v in arg.split(","))
        return make_mode("soft", q, eps)
    raise UsageError(f"--mode must be hard or soft:Q,EPS, got {text!r}")


def _int_list(text):
    return [int(v) for v in text.split(",") if v.strip()]


def _add_solver_flags(p, trace=True):
    p.add_argument("--coeffs", required=True,
                   help="coefficient file ('re im' per line, a_0 first) or builtin:NAME")
    p.add_argument("--init", default="unit-circle",
                   help="unit-circle | circle:R | spiral:R0,R1 | explicit:PATH")
    p.add_argument("--steps", type=int, default=1, help="correction steps per root (N)")
    p.add_argument("--max-rounds", type=int, default=100, help="maximum rounds (J)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--mode", default="hard", help="hard | soft:Q,EPS")
    p.add_argument("--reorder", action="store_true", help="least accurate roots first after each round")
    p.add_argument("--no-stationary", action="store_true",
                   help="require every residual below --tol, with no fixed-point fallback")
    if trace:
        p.add_argument("--trace", help="write per-step residual CSV here")
    p.add_argument("--out", help="output path (default: stdout)")


def build_parser():
    ap = argparse.ArgumentParser(prog="seqroots-bench", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve one polynomial and write a JSON result document")
    _add_solver_flags(s)
    s.add_argument("--method", default="sequential", choices=["sequential", "jacobi", "newton"])

    s = sub.add_parser("sweep-schedule", help="one row per N (iteration-schedule table)")
    _add_solver_flags(s, trace=False)
    s.add_argument("--steps-list", required=True, type=_int_list, help="comma-separated N values")

    s = sub.add_parser("sweep-radius", help="rows over N and circle radius r")
    _add_solver_flags(s, trace=False)
    s.add_argument("--steps-list", required=True, type=_int_list)
    s.add_argument("--r-min", type=float, default=0.2)
    s.add_argument("--r-max", type=float, default=2.2)
    s.add_argument("--r-steps", type=int, default=10, help="number of radius increments")
    s.add_argument("--first-converged", action="store_true",
                   help="keep only the first converging radius per N")

    s = sub.add_parser("compare-baselines", help="sequential scheme vs Jacobi and Newton-deflation")
    _add_solver_flags(s, trace=False)

    s = sub.add_parser("gen-random", help="random coefficient file")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--lo", type=float, default=-5.0)
    s.add_argument("--hi", type=float, default=5.0)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")

    s = sub.add_parser("gen-degenerate", help="coefficient file with a repeated root")
    s.add_argument("--root", default="1+0.5j", help="repeated root, e.g. 1+0.5j")
    s.add_argument("--multiplicity", type=int, required=True)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    return ap


def _spec(args, method="sequential"):
    poly = load_coeffs(args.coeffs)
    config = SolverConfig(
        steps_per_root=args.steps,
        max_rounds=args.max_rounds,
        tol=args.tol,
        mode=_mode(args.mode),
        reorder_by_accuracy=args.reorder,
        record_trace=bool(getattr(args, "trace", None)),
        stationary_rtol=None if args.no_stationary else DEFAULT_STATIONARY_RTOL,
    )
    return ExperimentSpec(poly, _init(args.init), config, method)


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _complex(text):
    return complex(text.replace("i", "j").replace(" ", ""))


def run(args) -> int:
    cmd = args.command
    if cmd == "solve":
        result, doc = run_solve(_spec(args, args.method))
        _emit(dump_json(doc), args.out)
        if args.trace and result.trace is not None:
            export_trace(result.trace, args.trace)
        return EXIT_OK if result.converged else EXIT_NOT_CONVERGED
    if cmd == "sweep-schedule":
        rows = run_schedule_sweep(_spec(args), args.steps_list)
        _emit(write_table(rows), args.out)
        return EXIT_OK
    if cmd == "sweep-radius":
        radii = radius_grid(args.r_min, args.r_max, args.r_steps)
        rows = run_radius_sweep(_spec(args), args.steps_list, radii, args.first_converged)
        _emit(write_table(rows), args.out)
        return EXIT_OK
    if cmd == "compare-baselines":
        _emit(dump_json(compare_baselines(_spec(args))), args.out)
        return EXIT_OK
    if cmd == "gen-random":
        p = gen_random_poly(args.degree, args.lo, args.hi, args.seed)
        head = [f"random degree {args.degree}, parts uniform in [{args.lo}, {args.hi}), seed {args.seed}"]
        _emit(format_coeff_file(p, head), args.out)
        return EXIT_OK
    if cmd == "gen-degenerate":
        root = _complex(args.root)
        p = make_degenerate_poly(root, args.multiplicity, args.degree, args.seed)
        head = [f"degree {args.degree}, root {root} with multiplicity {args.multiplicity}, seed {args.seed}"]
        _emit(format_coeff_file(p, head), args.out)
        return EXIT_OK
    raise UsageError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except IterationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (RootFindingError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
