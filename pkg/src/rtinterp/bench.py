"""Timing harness comparing the naive and threaded interpreters.

Each (program, input, engine) cell is run ``repeats`` times and the median
wall time is kept. The threaded timing includes the threading pass.
"""

from __future__ import annotations

import csv
import statistics
import sys
import time
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence

from . import programs
from .asm import Program
from .naive import run_naive
from .threaded import run_threaded
from .threader import thread_program

PAPER_SUITE: Dict[str, Sequence[int]] = {
    "square": (40000, 45000, 50000, 55000, 60000, 65000),
    "fibo": (20000, 25000, 30000, 35000),
    "factorial": (300, 350, 400, 450, 500, 550),
}
QUICK_SUITE: Dict[str, Sequence[int]] = {
    name: tuple(n // 10 for n in inputs) for name, inputs in PAPER_SUITE.items()
}
SUITES = {"paper": PAPER_SUITE, "quick": QUICK_SUITE}
ENGINES = ("naive", "threaded")
CSV_HEADER = ("program", "engine", "input", "wall_time_ms", "steps", "scan_comparisons", "digest")


@contextmanager
def _unlimited_int_str():
    # fib(35000) has more digits than the default int->str conversion limit
    get = getattr(sys, "get_int_max_str_digits", None)
    if get is None:
        yield
        return
    old = get()
    sys.set_int_max_str_digits(0)
    try:
        yield
    finally:
        sys.set_int_max_str_digits(old)


def to_decimal(n: int) -> str:
    with _unlimited_int_str():
        return str(n)


def digest(n: int) -> str:
    """``<digit count>:<first 8>...<last 8>``, or all digits when 16 or fewer."""
    text = to_decimal(n)
    sign, digits = ("-", text[1:]) if text.startswith("-") else ("", text)
    if len(digits) <= 16:
        return f"{len(digits)}:{sign}{digits}"
    return f"{len(digits)}:{sign}{digits[:8]}...{digits[-8:]}"


@dataclass(frozen=True)
class BenchRecord:
    program: str
    engine: str
    input: int
    wall_time_ms: float
    steps: int
    scan_comparisons: int
    output_digest: str

    def row(self) -> tuple:
        return (self.program, self.engine, self.input, f"{self.wall_time_ms:.3f}",
                self.steps, self.scan_comparisons, self.output_digest)


def _interpret(engine: str, prog: Program, acc: int):
    if engine == "naive":
        return run_naive(prog, acc)
    return run_threaded(thread_program(prog), acc)


def measure(name: str, prog: Program, engine: str, acc: int, repeats: int = 5) -> BenchRecord:
    times = []
    outcome = None
    for _ in range(repeats):
        start = time.perf_counter()
        outcome = _interpret(engine, prog, acc)
        times.append((time.perf_counter() - start) * 1000.0)
    return BenchRecord(name, engine, acc, statistics.median(times), outcome.steps,
                       outcome.scan_comparisons, digest(outcome.acc_out))


def run_suite(suite: Dict[str, Sequence[int]], repeats: int = 5,
              sources: Optional[Dict[str, Program]] = None, log=None) -> List[BenchRecord]:
    """Benchmark every program/input pair of ``suite`` on both engines."""
    records = []
    for name, inputs in suite.items():
        prog = sources[name] if sources and name in sources else programs.get(name)
        for acc in inputs:
            pair = [measure(name, prog, engine, acc, repeats) for engine in ENGINES]
            if pair[0].output_digest != pair[1].output_digest or pair[0].steps != pair[1].steps:
                raise AssertionError(f"engines disagree on {name}({acc}): {pair}")
            if log is not None:
                log(f"{name:>10} {acc:>7}  naive {pair[0].wall_time_ms:9.1f} ms"
                    f"  threaded {pair[1].wall_time_ms:9.1f} ms")
            records.extend(pair)
    return records


def write_csv(records: Iterable[BenchRecord], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for rec in records:
            writer.writerow(rec.row())


def speedups(records: Iterable[BenchRecord]) -> Dict[tuple, float]:
    """naive/threaded median time per (program, input)."""
    by_key: Dict[tuple, Dict[str, float]] = {}
    for rec in records:
        by_key.setdefault((rec.program, rec.input), {})[rec.engine] = rec.wall_time_ms
    return {k: v["naive"] / v["threaded"] for k, v in by_key.items()
            if "naive" in v and "threaded" in v and v["threaded"] > 0}


def summary(records: List[BenchRecord]) -> str:
    times = {(r.program, r.input, r.engine): r.wall_time_ms for r in records}
    lines = [f"{'program':>10} {'input':>7} {'naive ms':>10} {'threaded ms':>12} {'speedup':>8}"]
    for (prog, acc), ratio in speedups(records).items():
        lines.append(f"{prog:>10} {acc:>7} {times[prog, acc, 'naive']:>10.1f} "
                     f"{times[prog, acc, 'threaded']:>12.1f} {ratio:>8.2f}")
    return "\n".join(lines)
