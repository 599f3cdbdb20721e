"""Direct interpreter: jumps are resolved by scanning the program for the label.

Every jump rescans from the first instruction, so a jump costs O(n) in the
program length. There is deliberately no label index.
"""

from __future__ import annotations

from typing import Optional

from .asm import Program, validate
from .machine import (ADD_IMM, ADD_MEM, JEZ, JMP, JNEZ, LOAD_IMM, LOAD_MEM, NOP, STO,
                      SUB_IMM, SUB_MEM, MachineOutcome, check_limit, limit_exceeded, lower,
                      uninitialized)
from .memory import dic_empty


def run_naive(prog: Program, acc_in: int, step_limit: Optional[int] = None) -> MachineOutcome:
    """Run ``prog`` with ``acc_in`` in the accumulator.

    Returns the accumulator once control falls off the end of the program,
    along with the number of executed instructions and the number of
    instructions inspected while searching for jump targets.
    Raises MachineError on a read of unwritten memory or when more than
    ``step_limit`` instructions would execute.
    """
    validate(prog)
    limit = check_limit(step_limit)
    labels = [li.label for li in prog.instrs]
    code = [lower(li.instr) for li in prog.instrs]
    n = len(code)

    mem = dic_empty()
    acc = acc_in
    pc = 0
    steps = 0
    scans = 0
    while pc < n:
        if steps == limit:
            raise limit_exceeded(pc, limit)
        op, arg = code[pc]
        steps += 1
        if op == LOAD_MEM:
            if arg not in mem:
                raise uninitialized(pc, arg, steps - 1)
            acc = mem[arg]
            pc += 1
        elif op == STO:
            mem[arg] = acc
            pc += 1
        elif op == LOAD_IMM:
            acc = arg
            pc += 1
        elif op == ADD_MEM:
            if arg not in mem:
                raise uninitialized(pc, arg, steps - 1)
            acc += mem[arg]
            pc += 1
        elif op == SUB_IMM:
            acc -= arg
            pc += 1
        elif op == ADD_IMM:
            acc += arg
            pc += 1
        elif op == SUB_MEM:
            if arg not in mem:
                raise uninitialized(pc, arg, steps - 1)
            acc -= mem[arg]
            pc += 1
        elif op == NOP:
            pc += 1
        elif op == JMP or (op == JEZ and acc == 0) or (op == JNEZ and acc != 0):
            # search from the head of the program, one inspection per instruction
            pc = 0
            while labels[pc] != arg:
                pc += 1
            scans += pc + 1
        else:
            pc += 1
    return MachineOutcome(acc, steps, scans, mem)
