"""
Programs as rational trees
==========================

Threading turns the instruction list into a graph where each node points at
what runs next. Forward jumps make two paths meet in one node, backward
jumps close a cycle. The dump writes shared or cyclic nodes once, as
``#n:`` anchors referred to by ``@n``.
"""

from rtinterp import programs
from rtinterp.asm import parse_program
from rtinterp.threader import dump_threaded, thread_program

fragments = {
    "straight line": "sto ind\nload 0\nsto prev\nload 1\nsto curr\nload ind\n",
    "forward jump": "jez is_zero\nload in\nis_zero: sub acum\nsto out\n",
    "backward jump": "loop: load data\nsub 1\nsto data\njnez loop\nload in\n",
    "smallest loop": "loop: jmp loop\n",
}
for title, text in fragments.items():
    t = thread_program(parse_program(text))
    print(f"{title:>14}: {dump_threaded(t)}  cyclic={t.has_cycle()}")

# the forward jump and the fall-through reach the very same node
t = thread_program(parse_program(fragments["forward jump"]))
jez = t[t.entry]
print("shared node:", jez.yes, "==", t[jez.no].next)

# the square program: one loop, one forward exit
print(dump_threaded(thread_program(programs.get("square"))))
