"""
Unification with and without occurs check
=========================================

``f(X, X) = f(g(Y), Y)`` reduces to ``X = g(X)``. With the occurs check it
fails; without it, ``X`` becomes the infinite tree ``g(g(g(...)))``, held as
a one-node cycle.
"""

from rtinterp.terms import (BindingStore, Struct, Var, equal_rational, parse_term_equation,
                            print_bindings, term_variables, unify_herbrand, unify_rational)

lhs, rhs = parse_term_equation("f(X, X) = f(g(Y), Y)")
print("herbrand:", unify_herbrand(lhs, rhs).reason)
out = unify_rational(lhs, rhs)
print("rational:", print_bindings(term_variables(lhs, rhs), out.store))

# two finite spellings of the same infinite tree compare equal
s = BindingStore()
x, y = Var("X"), Var("Y")
unify_rational(x, Struct("f", [x]), s)
unify_rational(y, Struct("f", [Struct("f", [y])]), s)
print("X = f(X) equals Y = f(f(Y)):", equal_rational(x, y, s))

# q'(X, Y, f(X), f(Y)) :- X = Y, X = a.  called as q'(A, B, A, B)
env = {}
call, head = parse_term_equation("q'(A, B, A, B) = q'(X, Y, f(X), f(Y))", env)
s = BindingStore()
print("head:", unify_rational(call, head, s).reason or "ok")
print("X = Y:", unify_rational(env["X"], env["Y"], s).reason or "ok")
print("X = a:", unify_rational(env["X"], Struct("a"), s).reason or "ok")

# q :- p(X, X).  p(X, Y) :- Y = s(X).   succeeds only without occurs check
for unify in (unify_rational, unify_herbrand):
    x = Var("X")
    print(unify.__name__, unify(x, Struct("s", [x])).reason or "succeeds")
