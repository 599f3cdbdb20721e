"""Accumulator assembly language: instruction set, parser, validator, formatter.

Source syntax is one instruction per line::

    [label:] mnemonic [operand]    ; comment

``load``, ``add`` and ``sub`` take an integer or a memory name, ``sto`` takes a
memory name, the three jumps take a code label and ``nop`` takes nothing.
Code labels and memory names live in separate namespaces, so ``sto end`` next
to an ``end:`` label is legal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

IDENT = r"[a-z][A-Za-z0-9_]*"
_IDENT_RE = re.compile(rf"^{IDENT}$")
_INT_RE = re.compile(r"^[+-]?[0-9]+$")
_LABEL_RE = re.compile(rf"^\s*({IDENT})\s*:(.*)$")


# -- operands ---------------------------------------------------------------

@dataclass(frozen=True)
class Imm:
    value: int

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Mem:
    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not _IDENT_RE.match(self.name):
            raise ValueError(f"bad memory name {self.name!r}")

    def __str__(self) -> str:
        return self.name


Operand = Union[Imm, Mem]


# -- instructions -----------------------------------------------------------

@dataclass(frozen=True)
class Load:
    operand: Operand
    mnemonic = "load"


@dataclass(frozen=True)
class Add:
    operand: Operand
    mnemonic = "add"


@dataclass(frozen=True)
class Sub:
    operand: Operand
    mnemonic = "sub"


@dataclass(frozen=True)
class Sto:
    name: str
    mnemonic = "sto"


@dataclass(frozen=True)
class Jmp:
    target: str
    mnemonic = "jmp"


@dataclass(frozen=True)
class Jez:
    target: str
    mnemonic = "jez"


@dataclass(frozen=True)
class Jnez:
    target: str
    mnemonic = "jnez"


@dataclass(frozen=True)
class Nop:
    mnemonic = "nop"


Instr = Union[Load, Add, Sub, Sto, Jmp, Jez, Jnez, Nop]
JUMPS = (Jmp, Jez, Jnez)
_ARITH = {"load": Load, "add": Add, "sub": Sub}
_BRANCH = {"jmp": Jmp, "jez": Jez, "jnez": Jnez}


def operand_text(instr: Instr) -> Optional[str]:
    """The operand of ``instr`` as it appears in source, or None for ``nop``."""
    if isinstance(instr, (Load, Add, Sub)):
        return str(instr.operand)
    if isinstance(instr, Sto):
        return instr.name
    if isinstance(instr, JUMPS):
        return instr.target
    return None


@dataclass(frozen=True)
class LabeledInstr:
    label: Optional[str]
    instr: Instr
    # source line, kept out of equality so that round trips compare equal
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Program:
    instrs: tuple
    name: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "instrs", tuple(self.instrs))

    def __len__(self) -> int:
        return len(self.instrs)

    def __iter__(self):
        return iter(self.instrs)


def program(items: Iterable, name: Optional[str] = None) -> Program:
    """Build a Program from instructions or ``(label, instr)`` pairs."""
    instrs = []
    for i, item in enumerate(items):
        if isinstance(item, LabeledInstr):
            instrs.append(item)
        elif isinstance(item, tuple):
            instrs.append(LabeledInstr(item[0], item[1], i + 1))
        else:
            instrs.append(LabeledInstr(None, item, i + 1))
    return Program(tuple(instrs), name)


# -- errors -----------------------------------------------------------------

PARSE_ERROR = "ParseError"
DUPLICATE_LABEL = "DuplicateLabel"
UNDEFINED_TARGET = "UndefinedTarget"


@dataclass(frozen=True)
class SourceError:
    kind: str
    line: int
    detail: str
    ident: Optional[str] = None

    def __str__(self) -> str:
        return f"line {self.line}: {self.kind}: {self.detail}"


class SourceErrors(Exception):
    """Raised with every problem found in a source text or program."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("\n".join(str(e) for e in self.errors))


# -- parsing ----------------------------------------------------------------

def _parse_operand(tok: str) -> Operand:
    if _INT_RE.match(tok):
        return Imm(int(tok))
    if _IDENT_RE.match(tok):
        return Mem(tok)
    raise ValueError(f"bad operand {tok!r}")


def _parse_instr(tokens: list) -> Instr:
    op, args = tokens[0], tokens[1:]
    if op == "nop":
        if args:
            raise ValueError("nop takes no operand")
        return Nop()
    if len(args) != 1:
        raise ValueError(f"{op} takes exactly one operand")
    arg = args[0]
    if op in _ARITH:
        return _ARITH[op](_parse_operand(arg))
    if op == "sto":
        if not _IDENT_RE.match(arg):
            raise ValueError(f"sto needs a memory name, got {arg!r}")
        return Sto(arg)
    if op in _BRANCH:
        if not _IDENT_RE.match(arg):
            raise ValueError(f"{op} needs a code label, got {arg!r}")
        return _BRANCH[op](arg)
    raise ValueError(f"unknown mnemonic {op!r}")


def parse_program(text: str, name: Optional[str] = None) -> Program:
    """Parse assembly source into a Program.

    Every malformed line is reported; the resulting :class:`SourceErrors`
    carries one ``ParseError`` per bad line. Label resolution is left to
    :func:`validate`.
    """
    instrs = []
    errors = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split(";", 1)[0]
        if not body.strip():
            continue
        label = None
        m = _LABEL_RE.match(body)
        if m:
            label, body = m.group(1), m.group(2)
        tokens = body.split()
        if not tokens:
            errors.append(SourceError(PARSE_ERROR, lineno, f"label {label!r} has no instruction"))
            continue
        try:
            instr = _parse_instr(tokens)
        except ValueError as exc:
            errors.append(SourceError(PARSE_ERROR, lineno, str(exc)))
            continue
        instrs.append(LabeledInstr(label, instr, lineno))
    if errors:
        raise SourceErrors(errors)
    return Program(tuple(instrs), name)


def validate(prog: Program) -> None:
    """Check label uniqueness and that every jump target is defined.

    Returns None when the program is well formed, raises SourceErrors otherwise.
    """
    errors = []
    defined = {}
    for i, li in enumerate(prog.instrs):
        line = li.line or i + 1
        if li.label is None:
            continue
        if li.label in defined:
            errors.append(SourceError(DUPLICATE_LABEL, line,
                                      f"label {li.label!r} already defined on line {defined[li.label]}",
                                      li.label))
        else:
            defined[li.label] = line
    for i, li in enumerate(prog.instrs):
        if isinstance(li.instr, JUMPS) and li.instr.target not in defined:
            errors.append(SourceError(UNDEFINED_TARGET, li.line or i + 1,
                                      f"jump to undefined label {li.instr.target!r}",
                                      li.instr.target))
    if errors:
        raise SourceErrors(errors)


def load_program(text: str, name: Optional[str] = None) -> Program:
    """Parse and validate in one go."""
    prog = parse_program(text, name)
    validate(prog)
    return prog


def format_instr(li: LabeledInstr) -> str:
    operand = operand_text(li.instr)
    body = li.instr.mnemonic if operand is None else f"{li.instr.mnemonic} {operand}"
    return body if li.label is None else f"{li.label}: {body}"


def format_program(prog: Program) -> str:
    return "".join(format_instr(li) + "\n" for li in prog.instrs)
