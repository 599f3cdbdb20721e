"""Two interpreters for a toy accumulator machine, and rational-tree unification.

``run_naive`` finds jump targets by scanning the program; ``run_threaded``
first rewrites the program into a possibly cyclic continuation graph and then
just follows references.
"""

from .asm import (SourceError, SourceErrors, format_program, load_program, parse_program,
                  validate)
from .machine import MachineError, MachineOutcome
from .naive import run_naive
from .threaded import run_threaded
from .threader import ThreadedProgram, dump_threaded, thread_program

__all__ = [
    "MachineError", "MachineOutcome", "SourceError", "SourceErrors", "ThreadedProgram",
    "dump_threaded", "format_program", "load_program", "parse_program", "run_naive",
    "run_threaded", "thread_program", "validate",
]
