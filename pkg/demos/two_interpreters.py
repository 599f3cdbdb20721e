"""
Two interpreters for one accumulator machine
============================================

The same Fibonacci program runs on both engines. The naive engine searches
the program for a label on every taken jump; the threaded engine follows a
reference stored in the jump node.
"""

from rtinterp import programs
from rtinterp.asm import format_program
from rtinterp.naive import run_naive
from rtinterp.threaded import run_threaded
from rtinterp.threader import thread_program

fibo = programs.get("fibo")
print(format_program(fibo))

# the input goes in the accumulator, the output is read back from it
naive = run_naive(fibo, 30)
threaded = run_threaded(thread_program(fibo), 30)
print("fib(30) =", naive.acc_out, threaded.acc_out)

# same number of executed instructions; only the naive engine scans
print("steps:", naive.steps, threaded.steps)
print("label inspections:", naive.scan_comparisons, threaded.scan_comparisons)

# values are unbounded Python ints
big = run_threaded(thread_program(programs.get("factorial")), 100).acc_out
print("100! has", len(str(big)), "digits")
