"""Finite text for possibly cyclic term graphs.

A node that must not be printed twice gets an anchor ``#n:`` in front of its
first printing; later occurrences print as ``@n``. Anchors are numbered from 1
in the order the printer first meets them, so output is deterministic.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable


class _Lit(str):
    pass


class MuPrinter:
    """Render nodes of one graph, sharing anchors across calls.

    ``expand(node)`` returns ``(head, args)``; an arg is either a child node or
    a plain ``str`` printed verbatim. ``key(node)`` gives node identity and
    ``anchored`` is the set of keys that get anchors.
    """

    def __init__(self, expand: Callable, key: Callable[[object], Hashable],
                 anchored: Iterable[Hashable], normalize: Callable = lambda n: n):
        self.expand = expand
        self.key = key
        self.normalize = normalize
        self.anchored = set(anchored)
        self.ids = {}

    def render(self, root) -> str:
        out = []
        stack = [root]
        while stack:
            item = stack.pop()
            if isinstance(item, _Lit):
                out.append(item)
                continue
            node = self.normalize(item)
            k = self.key(node)
            if k in self.ids:
                out.append(f"@{self.ids[k]}")
                continue
            if k in self.anchored:
                self.ids[k] = len(self.ids) + 1
                out.append(f"#{self.ids[k]}:")
            head, args = self.expand(node)
            if not args:
                out.append(head)
                continue
            out.append(head + "(")
            stack.append(_Lit(")"))
            for i in range(len(args) - 1, -1, -1):
                arg = args[i]
                stack.append(_Lit(arg) if isinstance(arg, str) else arg)
                if i:
                    stack.append(_Lit(", "))
        return "".join(out)


def back_edge_targets(roots: Iterable, children: Callable, key: Callable) -> set:
    """Keys of nodes entered again while still on the DFS stack (cycle heads)."""
    on_stack = set()
    done = set()
    targets = set()
    for root in roots:
        if key(root) in done:
            continue
        # (node, iterator over its children) frames
        stack = [(root, iter(children(root)))]
        on_stack.add(key(root))
        while stack:
            node, it = stack[-1]
            for child in it:
                ck = key(child)
                if ck in on_stack:
                    targets.add(ck)
                elif ck not in done:
                    on_stack.add(ck)
                    stack.append((child, iter(children(child))))
                    break
            else:
                stack.pop()
                k = key(node)
                on_stack.discard(k)
                done.add(k)
    return targets
