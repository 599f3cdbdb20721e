import threading

import pytest

from oracles import bisimilar
from rtinterp.asm import SourceErrors, parse_program
from rtinterp.terms import (CLASH, OCCURS_VIOLATION, BindingStore, Struct, Var, equal_rational,
                            is_cyclic, occurs_check, parse_term, parse_term_equation,
                            print_bindings, print_term, resolve, term_variables, unify_herbrand,
                            unify_rational)
from rtinterp.threader import dump_threaded, thread_program


def mu(functor):
    """The infinite tree functor(functor(functor(...)))."""
    node = Struct(functor)
    node.args.append(node)
    return node


def run_with_timeout(fn, seconds=1.0):
    result = {}
    worker = threading.Thread(target=lambda: result.setdefault("value", fn()), daemon=True)
    worker.start()
    worker.join(seconds)
    assert not worker.is_alive(), f"did not finish within {seconds}s"
    return result["value"]


# -- parsing ----------------------------------------------------------------

def test_parse_equation():
    lhs, rhs = parse_term_equation("f(X, X) = f(g(Y), Y)")
    assert lhs.functor == "f" and lhs.args[0] is lhs.args[1]
    x = lhs.args[0]
    assert isinstance(x, Var) and x.name == "X"
    g, y = rhs.args
    assert g.functor == "g" and g.args[0] is y and y.name == "Y"


def test_parse_same_variable():
    lhs, rhs = parse_term_equation("X = X")
    assert isinstance(lhs, Var) and lhs is rhs


def test_parse_error():
    with pytest.raises(SourceErrors) as exc:
        parse_term_equation("f(X")
    assert exc.value.errors[0].kind == "ParseError"


@pytest.mark.parametrize("text", ["f(X) = ", "= a", "f(X)) = a", "a = b = c", "f(,) = a", "X"])
def test_parse_errors(text):
    with pytest.raises(SourceErrors):
        parse_term_equation(text)


def test_parse_constants_primes_and_anonymous():
    t = parse_term("q'(a, _, _, X')")
    assert t.functor == "q'" and t.arity == 4
    assert t.args[0].arity == 0
    assert t.args[1] is not t.args[2]
    assert t.args[3].name == "X'"


# -- Herbrand ---------------------------------------------------------------

def test_herbrand_occurs_violation():
    lhs, rhs = parse_term_equation("f(X, X) = f(g(Y), Y)")
    s = BindingStore()
    out = unify_herbrand(lhs, rhs, s)
    assert not out and out.reason == OCCURS_VIOLATION
    # all-or-nothing: the X = g(Y) step was undone
    assert s.bindings == {}


def test_herbrand_simple_binding():
    env = {}
    lhs, rhs = parse_term_equation("X = g(Y)", env)
    out = unify_herbrand(lhs, rhs)
    assert out
    assert out.store.binding(env["X"]) is rhs
    assert not out.store.is_bound(env["Y"])


def test_herbrand_clash():
    out = unify_herbrand(*parse_term_equation("f(a) = g(a)"))
    assert out.reason == CLASH


def test_arity_clash():
    assert unify_rational(*parse_term_equation("f(a) = f(a, b)")).reason == CLASH


def test_herbrand_rejects_cyclic_input():
    out = unify_herbrand(mu("g"), Var("X"))
    assert out.reason == OCCURS_VIOLATION


# -- rational ---------------------------------------------------------------

def test_rational_builds_cyclic_solution():
    env = {}
    lhs, rhs = parse_term_equation("f(X, X) = f(g(Y), Y)", env)
    out = unify_rational(lhs, rhs)
    assert out
    s = out.store
    assert equal_rational(env["X"], mu("g"), s)
    assert equal_rational(env["Y"], mu("g"), s)
    # X = g(Y) with Y = g(Y): the cycle runs through Y
    assert occurs_check(env["Y"], s.binding(env["Y"]), s)
    assert not occurs_check(env["X"], s.binding(env["X"]), s)
    assert print_term(env["X"], s) == "#1:g(@1)"
    assert print_bindings([env["X"], env["Y"]], s) == ["X = #1:g(@1)", "Y = @1"]


def test_jmp_construction_matches_threaded_loop():
    # T = jmp(C), T = C
    s = BindingStore()
    t, c = Var("T"), Var("C")
    assert unify_rational(t, Struct("jmp", [c]), s)
    assert unify_rational(t, c, s)
    node = s.deref(t)
    assert node.functor == "jmp" and s.deref(node.args[0]) is node
    loop = dump_threaded(thread_program(parse_program("loop: jmp loop")))
    assert print_term(t, s) == loop == "#1:jmp(@1)"


def test_q_prime_terminates_with_clash():
    def scenario():
        env = {}
        call, head = parse_term_equation("q'(A, B, A, B) = q'(X, Y, f(X), f(Y))", env)
        s = BindingStore()
        steps = [unify_rational(call, head, s).reason,
                 unify_rational(env["X"], env["Y"], s).reason,
                 unify_rational(env["X"], Struct("a"), s).reason]
        return steps, s, env

    steps, s, env = run_with_timeout(scenario, 1.0)
    assert steps == [None, None, CLASH]
    assert equal_rational(env["X"], mu("f"), s)


def test_q_original_fails_in_both_modes():
    for unify in (unify_herbrand, unify_rational):
        env = {}
        s = BindingStore()
        call, head = parse_term_equation("q(X, Y, X, Y) = q(X1, Y1, U, V)", env)
        assert unify(call, head, s)
        assert unify(env["X1"], env["Y1"], s)
        assert unify(env["X1"], Struct("a"), s)
        assert unify(env["U"], Struct("f", [env["X1"]]), s).reason == CLASH


def test_first_order_witness():
    # q :- p(X, X).   p(X, Y) :- Y = s(X).
    for unify, expected in ((unify_rational, None), (unify_herbrand, OCCURS_VIOLATION)):
        s = BindingStore()
        x, x2 = Var("X"), Var("X'")
        assert unify(x, x2, s)
        assert unify(x, Struct("s", [x2]), s).reason == expected
    assert not unify_herbrand(*parse_term_equation("X = s(X)"))
    assert unify_rational(*parse_term_equation("X = s(X)"))


def test_rational_unifies_two_cyclic_terms():
    a = mu("f")
    b = Struct("f")
    b.args.append(Struct("f", [b]))
    assert run_with_timeout(lambda: bool(unify_rational(a, b)))
    assert not unify_rational(mu("f"), mu("g"))


def test_failure_restores_store():
    env = {}
    s = BindingStore()
    lhs, rhs = parse_term_equation("h(X, Y, Z, b) = h(Y, Z, a, c)", env)
    assert unify_rational(lhs, rhs, s).reason == CLASH
    assert s.bindings == {}


def test_variable_chains_compress():
    s = BindingStore()
    vs = [Var(f"V{i}") for i in range(50)]
    for a, b in zip(vs, vs[1:]):
        assert unify_rational(a, b, s)
    assert unify_rational(vs[0], Struct("a"), s)
    for v in vs:
        assert s.deref(v).functor == "a"


# -- occurs check -----------------------------------------------------------

def test_occurs_check_examples():
    x, y = Var("X"), Var("Y")
    assert occurs_check(x, Struct("g", [x]))
    assert not occurs_check(x, Struct("g", [y]))
    assert not occurs_check(x, mu("f"))


def test_occurs_check_through_bindings():
    s = BindingStore()
    x, y = Var("X"), Var("Y")
    assert unify_rational(y, Struct("h", [x]), s)
    assert occurs_check(x, Struct("g", [y]), s)


# -- equality ---------------------------------------------------------------

def test_equal_rational_examples():
    s = BindingStore()
    x, y = Var("X"), Var("Y")
    assert unify_rational(x, Struct("f", [x]), s)
    assert unify_rational(y, Struct("f", [Struct("f", [y])]), s)
    assert equal_rational(x, y, s)
    assert bisimilar(x, y, s)
    assert equal_rational(parse_term("f(a)"), parse_term("f(a)"))
    assert not equal_rational(mu("f"), mu("g"))
    assert not equal_rational(Var("X"), Var("X"))


# -- printing ---------------------------------------------------------------

def test_print_examples():
    assert print_term(parse_term("f(g(a), b)")) == "f(g(a), b)"
    s = BindingStore()
    x = Var("X")
    unify_rational(x, Struct("g", [x]), s)
    assert print_term(x, s) == "#1:g(@1)"


def test_acyclic_sharing_prints_without_anchors():
    shared = parse_term("g(a)")
    assert print_term(Struct("f", [shared, shared])) == "f(g(a), g(a))"


def test_print_unbound_and_var_bindings():
    env = {}
    lhs, rhs = parse_term_equation("f(X, Y) = f(Y, Z)", env)
    out = unify_rational(lhs, rhs)
    lines = print_bindings(term_variables(lhs, rhs), out.store)
    assert len(lines) == 2
    assert all(line.endswith(" = X") or line.endswith(" = Z") or line.endswith(" = Y")
               for line in lines)


def test_resolve_applies_bindings():
    env = {}
    lhs, rhs = parse_term_equation("f(X, Y) = f(g(Y), a)", env)
    out = unify_herbrand(lhs, rhs)
    assert print_term(resolve(env["X"], out.store)) == "g(a)"
    assert not is_cyclic(resolve(lhs, out.store))
    cyc = unify_rational(*parse_term_equation("X = k(X, b)", env := {}))
    assert is_cyclic(resolve(env["X"], cyc.store))
    assert print_term(resolve(env["X"], cyc.store)) == "#1:k(@1, b)"
