"""Command line: ``rtinterp run|thread|unify|bench``.

Exit codes: 0 success, 1 source or parse error, 2 machine error during a
run, 3 unification failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench
from .asm import SourceErrors, load_program
from .machine import MachineError
from .naive import run_naive
from .terms import (BindingStore, parse_term_equation, print_bindings, term_variables,
                    unify_herbrand, unify_rational)
from .threaded import run_threaded
from .threader import dump_threaded, thread_program

EXIT_OK, EXIT_SOURCE, EXIT_RUNTIME, EXIT_UNIFY = 0, 1, 2, 3


def _read_program(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"{path}: {exc.strerror}", file=sys.stderr)
        return None
    try:
        return load_program(text, Path(path).stem)
    except SourceErrors as exc:
        for err in exc.errors:
            print(f"{path}:{err}", file=sys.stderr)
        return None


def cmd_run(args) -> int:
    prog = _read_program(args.file)
    if prog is None:
        return EXIT_SOURCE
    try:
        if args.engine == "naive":
            outcome = run_naive(prog, args.acc, args.step_limit)
        else:
            outcome = run_threaded(thread_program(prog), args.acc, args.step_limit)
    except MachineError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    print(bench.to_decimal(outcome.acc_out))
    return EXIT_OK


def cmd_thread(args) -> int:
    prog = _read_program(args.file)
    if prog is None:
        return EXIT_SOURCE
    print(dump_threaded(thread_program(prog)))
    return EXIT_OK


def cmd_unify(args) -> int:
    try:
        lhs, rhs = parse_term_equation(args.equation)
    except SourceErrors as exc:
        for err in exc.errors:
            print(err, file=sys.stderr)
        return EXIT_SOURCE
    unify = unify_herbrand if args.mode == "herbrand" else unify_rational
    outcome = unify(lhs, rhs, BindingStore())
    if not outcome:
        print(outcome.reason)
        return EXIT_UNIFY
    lines = print_bindings(term_variables(lhs, rhs), outcome.store)
    print("\n".join(lines) if lines else "true")
    return EXIT_OK


def cmd_bench(args) -> int:
    suite = bench.SUITES[args.suite]
    log = (lambda msg: print(msg, file=sys.stderr)) if args.verbose else None
    records = bench.run_suite(suite, args.repeats, log=log)
    bench.write_csv(records, args.csv)
    print(bench.summary(records))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rtinterp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run an assembly program")
    p.add_argument("file")
    p.add_argument("--engine", choices=("naive", "threaded"), default="threaded")
    p.add_argument("--acc", type=int, default=0, help="initial accumulator (the input)")
    p.add_argument("--step-limit", type=int, default=None)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("thread", help="print the threaded form of a program")
    p.add_argument("file")
    p.set_defaults(func=cmd_thread)

    p = sub.add_parser("unify", help="unify two terms, e.g. 'f(X,X)=f(g(Y),Y)'")
    p.add_argument("equation")
    p.add_argument("--mode", choices=("herbrand", "rational"), default="rational")
    p.set_defaults(func=cmd_unify)

    p = sub.add_parser("bench", help="time both engines on the benchmark programs")
    p.add_argument("--suite", choices=tuple(bench.SUITES), default="paper")
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--csv", default="bench.csv", help="output CSV path")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
