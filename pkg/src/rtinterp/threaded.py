"""Interpreter for threaded programs: control transfer is a NodeRef dereference."""

from __future__ import annotations

from typing import Optional

from .asm import Imm
from .machine import (ADD_IMM, ADD_MEM, JEZ, JMP, JNEZ, LOAD_IMM, LOAD_MEM, NOP, STO,
                      SUB_IMM, SUB_MEM, MachineOutcome, check_limit, limit_exceeded,
                      uninitialized)
from .memory import dic_empty
from .threader import ThreadedProgram

_OPS = {"load": (LOAD_IMM, LOAD_MEM), "add": (ADD_IMM, ADD_MEM), "sub": (SUB_IMM, SUB_MEM)}
_FIXED = {"sto": STO, "nop": NOP, "jmp": JMP, "jez": JEZ, "jnez": JNEZ}


def _lower(node) -> tuple:
    if node.kind in _OPS:
        imm_op, mem_op = _OPS[node.kind]
        if isinstance(node.operand, Imm):
            return imm_op, node.operand.value, node.next, node.target
        return mem_op, node.operand.name, node.next, node.target
    if node.kind == "end":
        return None
    return _FIXED[node.kind], node.operand, node.next, node.target


def run_threaded(t: ThreadedProgram, acc_in: int,
                 step_limit: Optional[int] = None) -> MachineOutcome:
    """Run a threaded program from its entry node until it reaches ``end``.

    Same observable behaviour as ``run_naive`` on the source program;
    ``scan_comparisons`` is always 0.
    """
    limit = check_limit(step_limit)
    nodes = [_lower(node) for node in t.nodes]
    end = t.end

    mem = dic_empty()
    acc = acc_in
    ref = t.entry
    steps = 0
    while ref != end:
        if steps == limit:
            raise limit_exceeded(ref, limit)
        op, arg, nxt, target = nodes[ref]
        steps += 1
        if op == LOAD_MEM:
            if arg not in mem:
                raise uninitialized(ref, arg, steps - 1)
            acc = mem[arg]
            ref = nxt
        elif op == STO:
            mem[arg] = acc
            ref = nxt
        elif op == LOAD_IMM:
            acc = arg
            ref = nxt
        elif op == ADD_MEM:
            if arg not in mem:
                raise uninitialized(ref, arg, steps - 1)
            acc += mem[arg]
            ref = nxt
        elif op == SUB_IMM:
            acc -= arg
            ref = nxt
        elif op == ADD_IMM:
            acc += arg
            ref = nxt
        elif op == SUB_MEM:
            if arg not in mem:
                raise uninitialized(ref, arg, steps - 1)
            acc -= mem[arg]
            ref = nxt
        elif op == NOP:
            ref = nxt
        elif op == JMP or (op == JEZ and acc == 0) or (op == JNEZ and acc != 0):
            ref = target
        else:
            ref = nxt
    return MachineOutcome(acc, steps, 0, mem)
