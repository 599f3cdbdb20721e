"""Rewrite a program into a continuation graph.

Every node holds direct references to the node(s) that run after it, so a jump
is a plain dereference. Backward jumps make the graph cyclic and forward jumps
make two paths meet at the same node: the graph is a finite representation of
a rational tree.

Nodes live in an arena and a NodeRef is an index into it. Node ``i`` is the
``i``-th instruction and the last node is ``end``. Building happens in two
passes: the first reserves a slot per instruction and records which slot each
label names, the second fills every slot with its successor references.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, NamedTuple, Optional, Tuple

from .asm import Add, Jez, Jmp, Jnez, Load, Nop, Program, Sto, Sub, validate
from .mu import MuPrinter

NodeRef = int


class Node(NamedTuple):
    kind: str
    operand: object = None
    next: Optional[NodeRef] = None
    target: Optional[NodeRef] = None

    # jump vocabulary
    @property
    def cont(self) -> Optional[NodeRef]:
        return self.target

    @property
    def yes(self) -> Optional[NodeRef]:
        return self.target

    @property
    def no(self) -> Optional[NodeRef]:
        return self.next

    def successors(self) -> Tuple[NodeRef, ...]:
        """Referenced nodes, jump target first."""
        return tuple(r for r in (self.target, self.next) if r is not None)


END = Node("end")

_SEQUENTIAL = {Load: "load", Add: "add", Sub: "sub", Sto: "sto", Nop: "nop"}
_BRANCHING = {Jmp: "jmp", Jez: "jez", Jnez: "jnez"}


@dataclass(frozen=True)
class ThreadedProgram:
    nodes: Tuple[Node, ...]
    entry: NodeRef
    label_table: Dict[str, NodeRef]

    @property
    def end(self) -> NodeRef:
        return len(self.nodes) - 1

    def __getitem__(self, ref: NodeRef) -> Node:
        return self.nodes[ref]

    def __len__(self) -> int:
        return len(self.nodes)

    def reachable(self) -> list:
        """NodeRefs reachable from the entry, in depth-first preorder."""
        seen = set()
        order = []
        stack = [self.entry]
        while stack:
            ref = stack.pop()
            if ref in seen:
                continue
            seen.add(ref)
            order.append(ref)
            stack.extend(reversed(self.nodes[ref].successors()))
        return order

    def has_cycle(self) -> bool:
        """True when some cycle is reachable from the entry."""
        state = {}
        stack = [(self.entry, iter(self.nodes[self.entry].successors()))]
        state[self.entry] = 1
        while stack:
            ref, it = stack[-1]
            for succ in it:
                mark = state.get(succ)
                if mark == 1:
                    return True
                if mark is None:
                    state[succ] = 1
                    stack.append((succ, iter(self.nodes[succ].successors())))
                    break
            else:
                stack.pop()
                state[ref] = 2
        return False


def thread_program(prog: Program) -> ThreadedProgram:
    validate(prog)
    n = len(prog.instrs)
    end = n

    # pass 1: one slot per instruction, labels point at their slot
    label_table = {li.label: i for i, li in enumerate(prog.instrs) if li.label is not None}

    # pass 2: fill slots with successor references
    nodes = []
    for i, li in enumerate(prog.instrs):
        instr = li.instr
        fall_through = i + 1 if i + 1 < n else end
        kind = type(instr)
        if kind in _BRANCHING:
            target = label_table[instr.target]
            # an unconditional jump has no fall-through
            nxt = None if kind is Jmp else fall_through
            nodes.append(Node(_BRANCHING[kind], None, nxt, target))
        elif kind is Sto:
            nodes.append(Node("sto", instr.name, fall_through))
        elif kind is Nop:
            nodes.append(Node("nop", None, fall_through))
        else:
            nodes.append(Node(_SEQUENTIAL[kind], instr.operand, fall_through))
    nodes.append(END)
    return ThreadedProgram(tuple(nodes), 0, label_table)


def _expand(t: ThreadedProgram):
    def expand(ref):
        node = t.nodes[ref]
        if node.kind == "end":
            return "end", ()
        if node.kind == "jmp":
            return "jmp", (node.target,)
        if node.kind in ("jez", "jnez"):
            return node.kind, (node.yes, node.no)
        if node.kind == "nop":
            return "nop", (node.next,)
        return node.kind, (str(node.operand), node.next)
    return expand


def shared_or_cyclic(t: ThreadedProgram) -> set:
    """Reachable nodes referenced more than once, counting the entry as a reference."""
    counts = {t.entry: 1}
    for ref in t.reachable():
        for succ in t.nodes[ref].successors():
            counts[succ] = counts.get(succ, 0) + 1
    return {ref for ref, c in counts.items() if c > 1}


def dump_threaded(t: ThreadedProgram) -> str:
    """Print the graph reachable from the entry as a single term.

    Each node is printed once; nodes that are shared or that close a cycle
    are anchored, e.g. ``loop: jmp loop`` dumps as ``#1:jmp(@1)``.
    """
    printer = MuPrinter(_expand(t), key=lambda ref: ref, anchored=shared_or_cyclic(t))
    return printer.render(t.entry)
