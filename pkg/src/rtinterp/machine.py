"""Outcome and error types shared by both interpreters, plus opcode lowering."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .asm import Add, Imm, Jez, Jmp, Jnez, Load, Nop, Sto, Sub

UNINITIALIZED_READ = "UninitializedRead"
STEP_LIMIT_EXCEEDED = "StepLimitExceeded"


@dataclass(frozen=True)
class MachineOutcome:
    acc_out: int
    steps: int
    scan_comparisons: int
    memory: dict = field(default_factory=dict, compare=False, repr=False)


class MachineError(Exception):
    """A run that did not halt normally.

    ``at`` is the index of the instruction being executed (for a step-limit
    stop, the one that would have executed next).
    """

    def __init__(self, kind: str, at: int, detail: str, steps: int = 0):
        self.kind = kind
        self.at = at
        self.detail = detail
        self.steps = steps
        super().__init__(f"{kind} at instruction {at}: {detail}")

    def key(self):
        return (self.kind, self.at, self.steps)


def uninitialized(at: int, name: str, steps: int) -> MachineError:
    return MachineError(UNINITIALIZED_READ, at, f"read of unwritten memory {name!r}", steps)


def limit_exceeded(at: int, limit: int) -> MachineError:
    return MachineError(STEP_LIMIT_EXCEEDED, at, f"step limit {limit} reached", limit)


# Integer opcodes for the dispatch loops. Immediate and memory operands get
# separate opcodes so the loops never inspect operand types.
LOAD_IMM, LOAD_MEM, ADD_IMM, ADD_MEM, SUB_IMM, SUB_MEM, STO, JMP, JEZ, JNEZ, NOP = range(11)

_OPERAND_OPS = {Load: (LOAD_IMM, LOAD_MEM), Add: (ADD_IMM, ADD_MEM), Sub: (SUB_IMM, SUB_MEM)}
_JUMP_OPS = {Jmp: JMP, Jez: JEZ, Jnez: JNEZ}


def lower(instr) -> tuple:
    """``(opcode, argument)`` for one instruction.

    The argument is an int for immediates, a memory name, a jump's target
    label, or None for ``nop``.
    """
    kind = type(instr)
    if kind in _OPERAND_OPS:
        imm_op, mem_op = _OPERAND_OPS[kind]
        if isinstance(instr.operand, Imm):
            return imm_op, instr.operand.value
        return mem_op, instr.operand.name
    if kind is Sto:
        return STO, instr.name
    if kind in _JUMP_OPS:
        return _JUMP_OPS[kind], instr.target
    if kind is Nop:
        return NOP, None
    raise TypeError(f"not an instruction: {instr!r}")


def check_limit(limit: Optional[int]) -> Optional[int]:
    if limit is not None and limit < 0:
        raise ValueError("step limit must be non-negative")
    return limit
