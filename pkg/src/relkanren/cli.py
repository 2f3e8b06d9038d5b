"""Command-line entry point: benchmarks, quine synthesis, evaluation.

Exit codes: 0 on success, 1 when a result is stuck or fails verification,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .goal import run_n
from .scheme import ParseError, eval_det, parse_sexpr, print_sexpr, print_value
from .scheme.synth import UnverifiedProgram, quineso, thrineso, twineso
from .stdlib import NIL, expo, from_binary, logo, num
from .stream import StepBudgetExceeded

CSV_HEADER = ("suite", "rep", "wall_ms", "count", "verified")


@dataclass
class BenchResult:
    suite: str
    wall_ms: float
    count: int
    verified: bool


def _suite_exp() -> tuple[int, bool]:
    rs = run_n(None, lambda r: expo(num(3), num(5), r))
    return len(rs), len(rs) == 1 and from_binary(rs[0]) == 243


def _suite_log() -> tuple[int, bool]:
    qs = run_n(1, lambda q: logo(num(243), num(3), q, NIL))
    return len(qs), len(qs) == 1 and from_binary(qs[0]) == 5


def _synthesis_suite(fn: Callable[[int], list], n: int) -> Callable[[], tuple[int, bool]]:
    def suite() -> tuple[int, bool]:
        try:
            found = fn(n)
        except UnverifiedProgram as exc:
            print(f"verification failed: {exc}", file=sys.stderr)
            return 0, False
        return len(found), len(found) == n

    return suite


SUITES: dict[str, Callable[[], tuple[int, bool]]] = {
    "exp": _suite_exp,
    "log": _suite_log,
    "quines": _synthesis_suite(quineso, 100),
    "twines": _synthesis_suite(twineso, 15),
    "thrines": _synthesis_suite(thrineso, 2),
}


def run_suite(name: str) -> BenchResult:
    start = time.monotonic()
    count, verified = SUITES[name]()
    wall_ms = (time.monotonic() - start) * 1000.0
    return BenchResult(name, wall_ms, count, verified)


def cmd_bench(args: argparse.Namespace) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    results = []
    for rep in range(1, args.reps + 1):
        r = run_suite(args.suite)
        results.append(r)
        writer.writerow((r.suite, rep, f"{r.wall_ms:.1f}", r.count, str(r.verified).lower()))
        sys.stdout.flush()
    ok = all(r.verified for r in results)
    median_ms = statistics.median(r.wall_ms for r in results)
    median_count = int(statistics.median(r.count for r in results))
    writer.writerow((args.suite, "median", f"{median_ms:.1f}", median_count, str(ok).lower()))
    return 0 if ok else 1


def cmd_quines(args: argparse.Namespace) -> int:
    try:
        for q in quineso(args.n, max_steps=args.budget):
            print(print_sexpr(q))
    except StepBudgetExceeded as exc:
        print(f"synthesis stalled: {exc}", file=sys.stderr)
        return 1
    except UnverifiedProgram as exc:
        print(str(exc), file=sys.stderr)
        return 1
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        expr = parse_sexpr(args.text)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    value = eval_det(expr)
    if value is None:
        print("stuck")
        return 1
    print(print_value(value))
    return 0


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relkanren", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    bench = sub.add_parser("bench", help="time a benchmark suite, CSV to stdout")
    bench.add_argument("--suite", required=True, choices=sorted(SUITES))
    bench.add_argument("--reps", type=_positive, default=3)
    bench.set_defaults(func=cmd_bench)

    quines = sub.add_parser("quines", help="print verified quines, one per line")
    quines.add_argument("-n", type=_positive, required=True)
    quines.add_argument("--budget", type=_positive, default=None, metavar="STEPS",
                        help="give up after this many search steps")
    quines.set_defaults(func=cmd_quines)

    ev = sub.add_parser("eval", help="evaluate an S-expression")
    ev.add_argument("text")
    ev.set_defaults(func=cmd_eval)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
