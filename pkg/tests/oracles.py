"""Independent reference computations used to freeze expected values."""

from rtinterp.terms import BindingStore, Var


def square(n):
    return n * n


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


ORACLES = {"square": square, "fibo": fib, "factorial": factorial}


def bisimilar(t1, t2, store=None):
    """Equality of rational trees by partition refinement.

    Collects every node reachable from both roots, starts from blocks keyed
    by functor/arity (unbound variables each in their own block) and refines
    by children's blocks until nothing changes.
    """
    s = store or BindingStore()
    nodes = {}
    stack = [t1, t2]
    while stack:
        x = s.deref(stack.pop())
        if id(x) in nodes:
            continue
        nodes[id(x)] = x
        if not isinstance(x, Var):
            stack.extend(x.args)

    def initial(x):
        return ("var", id(x)) if isinstance(x, Var) else (x.functor, len(x.args))

    block = {k: initial(x) for k, x in nodes.items()}
    n_blocks = len(set(block.values()))
    while True:
        sig = {}
        for k, x in nodes.items():
            kids = () if isinstance(x, Var) else tuple(block[id(s.deref(a))] for a in x.args)
            sig[k] = (block[k], kids)
        names = {}
        for v in sig.values():
            names.setdefault(v, len(names))
        block = {k: names[sig[k]] for k in nodes}
        if len(names) == n_blocks:
            break
        n_blocks = len(names)
    return block[id(s.deref(t1))] == block[id(s.deref(t2))]
