"""
Timing the two engines
======================

Runs the benchmark grid (inputs scaled down 10x by default; pass ``paper``
for the full-size inputs) and prints naive/threaded median times.
"""

import sys

from rtinterp import bench

suite = bench.SUITES[sys.argv[1] if len(sys.argv) > 1 else "quick"]
records = bench.run_suite(suite, repeats=3)
print(bench.summary(records))
