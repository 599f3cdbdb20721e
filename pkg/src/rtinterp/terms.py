"""First-order terms as possibly cyclic graphs, and unification over them.

Two unifiers share one binding store:

* :func:`unify_herbrand` performs the occurs check, so it only ever builds
  finite terms and fails with ``OccursViolation`` on ``X = g(X)``.
* :func:`unify_rational` omits it. Binding ``X`` to ``g(X)`` then yields a
  cyclic graph standing for the infinite tree ``g(g(g(...)))``. Structs
  already being unified are remembered, so it terminates on cyclic inputs too.

Variables are bound through a union-find store. A variable is only ever
bound to another variable after both are dereferenced and distinct, so
variable chains never loop; cycles only go through Struct arguments.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from .asm import PARSE_ERROR, SourceError, SourceErrors
from .mu import MuPrinter, back_edge_targets

CLASH = "clash"
OCCURS_VIOLATION = "occurs-violation"

_fresh = itertools.count(1)


class Var:
    __slots__ = ("name",)

    def __init__(self, name: Optional[str] = None):
        self.name = name if name is not None else f"_G{next(_fresh)}"

    def __repr__(self):
        return f"Var({self.name})"


class Struct:
    """``functor(args...)``; a constant is a Struct with no arguments.

    ``args`` is a mutable list so that cyclic graphs can be tied directly.
    """

    __slots__ = ("functor", "args")

    def __init__(self, functor: str, args: Iterable = ()):
        self.functor = functor
        self.args = list(args)

    @property
    def arity(self) -> int:
        return len(self.args)

    def __repr__(self):
        return f"Struct({self.functor}/{len(self.args)})"


Term = object  # Var | Struct

_UNBOUND = object()


class BindingStore:
    """Variable bindings with union by rank and path compression.

    Every change made during a unification is trailed, so a failed
    unification leaves the store exactly as it found it.
    """

    def __init__(self):
        self.bindings: Dict[Var, Term] = {}
        self.rank: Dict[Var, int] = {}
        self._trail: Optional[list] = None

    def _set(self, var: Var, value: Term):
        if self._trail is not None:
            self._trail.append((var, self.bindings.get(var, _UNBOUND)))
        self.bindings[var] = value

    def _undo(self, trail: list):
        for var, old in reversed(trail):
            if old is _UNBOUND:
                del self.bindings[var]
            else:
                self.bindings[var] = old

    def deref(self, t: Term) -> Term:
        """Follow variable bindings to an unbound variable or a Struct."""
        if not isinstance(t, Var) or t not in self.bindings:
            return t
        chain = []
        while isinstance(t, Var) and t in self.bindings:
            chain.append(t)
            t = self.bindings[t]
        for var in chain[:-1]:
            if self.bindings[var] is not t:
                self._set(var, t)
        return t

    def binding(self, var: Var) -> Term:
        """The term ``var`` is directly bound to, or the variable itself."""
        return self.bindings.get(var, var)

    def is_bound(self, var: Var) -> bool:
        return var in self.bindings

    def _union(self, a: Var, b: Var):
        ra, rb = self.rank.get(a, 0), self.rank.get(b, 0)
        if ra < rb:
            self._set(a, b)
        elif ra > rb:
            self._set(b, a)
        else:
            self._set(b, a)
            self.rank[a] = ra + 1

    def copy(self) -> "BindingStore":
        other = BindingStore()
        other.bindings = dict(self.bindings)
        other.rank = dict(self.rank)
        return other


@dataclass
class UnifyOutcome:
    """Result of a unification; truthy on success.

    On failure ``reason`` is ``clash`` or ``occurs-violation`` and the store
    is unchanged.
    """

    store: BindingStore
    reason: Optional[str] = None

    def __bool__(self):
        return self.reason is None

    @property
    def success(self) -> bool:
        return self.reason is None


class _StructClasses:
    """Union-find over Struct nodes assumed equal during one traversal.

    Merging two structs as soon as their functors agree is the coinductive
    step: when the pair comes round again through a cycle it is already
    one class. Each merge removes a class, so the work is near linear.
    """

    def __init__(self):
        self.parent = {}

    def find(self, x):
        parent = self.parent
        root = x
        while id(root) in parent:
            root = parent[id(root)]
        while x is not root:
            up = parent[id(x)]
            parent[id(x)] = root
            x = up
        return root

    def merge(self, a, b):
        self.parent[id(a)] = b


def _unify(t1: Term, t2: Term, s: BindingStore, occurs: bool) -> UnifyOutcome:
    trail = []
    s._trail = trail
    try:
        classes = _StructClasses()
        stack = [(t1, t2)]
        while stack:
            a, b = stack.pop()
            a = s.deref(a)
            b = s.deref(b)
            if a is b:
                continue
            if isinstance(a, Var):
                if isinstance(b, Var):
                    s._union(a, b)
                    continue
                a, b = b, a
            if isinstance(b, Var):
                # b unbound, a a Struct
                if occurs and occurs_check(b, a, s):
                    s._undo(trail)
                    return UnifyOutcome(s, OCCURS_VIOLATION)
                s._set(b, a)
                continue
            a = classes.find(a)
            b = classes.find(b)
            if a is b:
                continue
            if a.functor != b.functor or len(a.args) != len(b.args):
                s._undo(trail)
                return UnifyOutcome(s, CLASH)
            classes.merge(a, b)
            stack.extend(zip(reversed(a.args), reversed(b.args)))
        return UnifyOutcome(s)
    finally:
        s._trail = None


def unify_rational(t1: Term, t2: Term, s: Optional[BindingStore] = None) -> UnifyOutcome:
    """Unify without occurs check; the result may bind a variable to a term containing it."""
    return _unify(t1, t2, BindingStore() if s is None else s, occurs=False)


def unify_herbrand(t1: Term, t2: Term, s: Optional[BindingStore] = None) -> UnifyOutcome:
    """Unify with occurs check. Cyclic inputs are rejected as occurs violations."""
    s = BindingStore() if s is None else s
    if is_cyclic(t1, s) or is_cyclic(t2, s):
        return UnifyOutcome(s, OCCURS_VIOLATION)
    return _unify(t1, t2, s, occurs=True)


def _edges(t: Term, s: BindingStore) -> List[Term]:
    """One step of the term graph: a bound variable leads to its binding."""
    if isinstance(t, Var):
        value = s.bindings.get(t, _UNBOUND)
        return [] if value is _UNBOUND else [value]
    return t.args


def occurs_check(v: Var, t: Term, s: Optional[BindingStore] = None) -> bool:
    """True iff ``v`` can be reached from ``t`` through arguments and bindings."""
    s = BindingStore() if s is None else s
    seen = set()
    stack = [t]
    while stack:
        x = stack.pop()
        if x is v:
            return True
        if id(x) in seen:
            continue
        seen.add(id(x))
        stack.extend(_edges(x, s))
    return False


def is_cyclic(t: Term, s: Optional[BindingStore] = None) -> bool:
    s = BindingStore() if s is None else s
    return bool(back_edge_targets([t], lambda x: _edges(x, s), id))


def equal_rational(t1: Term, t2: Term, s: Optional[BindingStore] = None) -> bool:
    """Whether two terms denote the same (possibly infinite) tree.

    Decided by bisimulation: functors and arities must agree at every pair of
    corresponding positions, and nodes already paired up are assumed equal.
    Distinct unbound variables are different.
    """
    s = BindingStore() if s is None else s
    classes = _StructClasses()
    stack = [(t1, t2)]
    while stack:
        a, b = stack.pop()
        a = s.deref(a)
        b = s.deref(b)
        if a is b:
            continue
        if isinstance(a, Var) or isinstance(b, Var):
            return False
        a = classes.find(a)
        b = classes.find(b)
        if a is b:
            continue
        if a.functor != b.functor or len(a.args) != len(b.args):
            return False
        classes.merge(a, b)
        stack.extend(zip(a.args, b.args))
    return True


def resolve(t: Term, s: BindingStore) -> Term:
    """Copy of ``t`` with every bound variable replaced by its value.

    Unbound variables are kept as they are. Cycles in the input become cycles
    in the copy.
    """
    copies = {}

    def copy_of(x):
        x = s.deref(x)
        if isinstance(x, Var):
            return x, False
        if id(x) in copies:
            return copies[id(x)], False
        c = Struct(x.functor)
        copies[id(x)] = c
        return c, True

    root, fresh = copy_of(t)
    stack = [(t, root)] if fresh else []
    while stack:
        src, dst = stack.pop()
        src = s.deref(src)
        for arg in src.args:
            c, fresh = copy_of(arg)
            dst.args.append(c)
            if fresh:
                stack.append((arg, c))
    return root


def term_variables(*terms: Term) -> List[Var]:
    """Variables of the given (undereferenced) terms in order of first appearance."""
    out = []
    seen = set()
    for t in terms:
        stack = [t]
        while stack:
            x = stack.pop()
            if id(x) in seen:
                continue
            seen.add(id(x))
            if isinstance(x, Var):
                out.append(x)
            else:
                stack.extend(reversed(x.args))
    return out


# -- printing ---------------------------------------------------------------

def _printer(roots: List[Term], s: BindingStore) -> MuPrinter:
    def children(x):
        return [] if isinstance(x, Var) else [s.deref(a) for a in x.args]

    derefed = [s.deref(r) for r in roots]
    anchored = back_edge_targets(derefed, children, id)

    def expand(x):
        if isinstance(x, Var):
            return x.name, ()
        return x.functor, x.args

    return MuPrinter(expand, key=id, anchored=anchored, normalize=s.deref)


def print_term(t: Term, s: Optional[BindingStore] = None) -> str:
    """Render a term; cycles use ``#n:``/``@n`` anchors, finite terms print plainly."""
    s = BindingStore() if s is None else s
    return _printer([t], s).render(t)


def print_bindings(variables: List[Var], s: BindingStore) -> List[str]:
    """``Name = term`` lines for each variable that is bound, sharing anchors."""
    bound = [v for v in variables if s.deref(v) is not v]
    printer = _printer(bound, s)
    return [f"{v.name} = {printer.render(v)}" for v in bound]


# -- parsing ----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:([A-Z_][A-Za-z0-9_']*)|([a-z][A-Za-z0-9_']*)|(.))")


class _TermParser:
    def __init__(self, text: str, env: Dict[str, Var]):
        self.text = text
        self.env = env
        self.tokens = []
        for m in _TOKEN_RE.finditer(text):
            if m.group(1):
                self.tokens.append(("var", m.group(1), m.start(1)))
            elif m.group(2):
                self.tokens.append(("atom", m.group(2), m.start(2)))
            elif m.group(3):
                self.tokens.append(("punct", m.group(3), m.start(3)))
        self.pos = 0

    def error(self, msg: str):
        col = self.tokens[self.pos][2] + 1 if self.pos < len(self.tokens) else len(self.text) + 1
        raise SourceErrors([SourceError(PARSE_ERROR, 1, f"column {col}: {msg}")])

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None, None)

    def expect(self, punct: str):
        kind, value, _ = self.peek()
        if kind != "punct" or value != punct:
            self.error(f"expected {punct!r}")
        self.pos += 1

    def term(self) -> Term:
        kind, value, _ = self.peek()
        if kind == "var":
            self.pos += 1
            if value == "_":
                return Var()
            return self.env.setdefault(value, Var(value))
        if kind != "atom":
            self.error("expected a term")
        self.pos += 1
        args = []
        if self.peek()[:2] == ("punct", "("):
            self.pos += 1
            args.append(self.term())
            while self.peek()[:2] == ("punct", ","):
                self.pos += 1
                args.append(self.term())
            self.expect(")")
        return Struct(value, args)

    def done(self) -> bool:
        return self.pos == len(self.tokens)


def parse_term(text: str, env: Optional[Dict[str, Var]] = None) -> Term:
    """Parse ``f(X, g(a))`` syntax; variables with the same name share ``env``."""
    p = _TermParser(text, {} if env is None else env)
    t = p.term()
    if not p.done():
        p.error("unexpected input after term")
    return t


def parse_term_equation(text: str, env: Optional[Dict[str, Var]] = None) -> Tuple[Term, Term]:
    """Parse ``lhs = rhs``; repeated variable names denote one variable."""
    p = _TermParser(text, {} if env is None else env)
    lhs = p.term()
    p.expect("=")
    rhs = p.term()
    if not p.done():
        p.error("unexpected input after equation")
    return lhs, rhs
