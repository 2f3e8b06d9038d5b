import pytest
from hypothesis import assume, given, strategies as st

from relkanren import conj, eq, run_n
from relkanren.core import Var, extract, inject
from relkanren.scheme import (
    LogicSExprType,
    LogicSym,
    LogicVClosure,
    LogicVData,
    ParseError,
    SCons,
    SNil,
    Sym,
    VClosure,
    VData,
    eval_det,
    evalo,
    lookupo,
    mirroro,
    not_in_envo,
    parse_sexpr,
    print_sexpr,
    print_value,
    quineso,
    slist,
    twineso,
    verify_cycle,
)
from relkanren.scheme.evaldet import _Evaluator, _OutOfFuel
from relkanren.scheme.sexpr import lslist, show_term
from relkanren.scheme.synth import Grounder, ground_terms
from relkanren.stdlib import NIL, LogicCons, LogicPair, llist
from relkanren.stream import StepBudgetExceeded

QUINE = (
    "((lambda (x) (list x (list (quote quote) x)))"
    " (quote (lambda (x) (list x (list (quote quote) x)))))"
)


def p(text):
    return parse_sexpr(text)


# -- reading and printing -------------------------------------------------------------


def test_parse_examples():
    assert p("a") == Sym("a")
    assert p("()") == SNil()
    assert p("(a b)") == SCons(Sym("a"), SCons(Sym("b"), SNil()))
    assert p("'a") == slist(Sym("quote"), Sym("a"))
    assert p("(a . b)") == SCons(Sym("a"), Sym("b"))
    assert p("  ( a  ( b ) )  ") == slist(Sym("a"), slist(Sym("b")))


@pytest.mark.parametrize("text", ["", "(", ")", "(a", "a b", "(. a)", "(a . )", "(a . b c)", "'"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_sexpr(text)


def test_print_examples():
    assert print_sexpr(p("'a")) == "(quote a)"
    assert print_sexpr(p("(a . (b . ()))")) == "(a b)"
    assert print_sexpr(p("(a . b)")) == "(a . b)"
    assert print_value(VData(p("(x y)"))) == "(x y)"
    assert print_value(VClosure("x", Sym("x"), [])) == "#closure"


symbol_names = st.sampled_from(["a", "b", "x", "quote", "list", "lambda", "foo-1", "?"])
sexprs = st.recursive(
    st.one_of(st.builds(Sym, symbol_names), st.just(SNil())),
    lambda sub: st.builds(SCons, sub, sub),
    max_leaves=12,
)


@given(sexprs)
def test_print_then_parse_round_trips(s):
    assert parse_sexpr(print_sexpr(s)) == s


def test_show_term_with_variables():
    t = lslist(LogicSym("lambda"), lslist(LogicSym(Var(1))), Var(2))
    assert show_term(t) == "(lambda (_.1) _.2)"


# -- the deterministic evaluator -------------------------------------------------------


@pytest.mark.parametrize("text, want", [
    ("(quote a)", "a"),
    ("(quote (a b))", "(a b)"),
    ("(list)", "()"),
    ("(list (quote a) (quote b))", "(a b)"),
    ("((lambda (x) x) (quote a))", "a"),
    ("((lambda (x) (list x x)) (quote a))", "(a a)"),
    ("(((lambda (x) (lambda (y) x)) (quote a)) (quote b))", "a"),
    ("((lambda (lambda) lambda) (quote c))", "c"),
    ("((lambda (quote) (quote (list))) (lambda (y) y))", "()"),
    (QUINE, QUINE),
])
def test_eval_det_examples(text, want):
    got = eval_det(p(text))
    assert isinstance(got, VData) and got.datum == p(want)


@pytest.mark.parametrize("text", [
    "x",
    "(quote a b)",
    "((quote a) (quote b))",
    "(list (lambda (x) x))",
    "(lambda (x y) x)",
    "(lambda x x)",
    "((lambda (x) x))",
    "((lambda (quote) (quote a)) (lambda (y) y))",
])
def test_eval_det_stuck(text):
    assert eval_det(p(text)) is None


def test_eval_det_closure_and_divergence():
    assert eval_det(p("(lambda (x) x)")) == VClosure("x", Sym("x"), [])
    omega = p("((lambda (x) (x x)) (lambda (x) (x x)))")
    assert eval_det(omega, fuel=10_000) is None


# -- environments ------------------------------------------------------------------------


def env_of(*pairs):
    return llist(*[LogicPair(k, v) for k, v in pairs])


A, B = LogicVData(LogicSym("a")), LogicVData(LogicSym("b"))


def test_lookupo():
    env = env_of(("x", A), ("y", B))
    assert run_n(None, lambda v: lookupo("y", env, v)) == [B]
    assert run_n(None, lambda v: lookupo("z", env, v)) == []


def test_lookupo_takes_the_first_binding():
    env = env_of(("x", A), ("x", B))
    assert run_n(None, lambda v: lookupo("x", env, v)) == [A]


def test_lookupo_backward_respects_shadowing():
    env = env_of(("x", A), ("y", A), ("x", B))
    assert sorted(run_n(None, lambda n: lookupo(n, env, A))) == ["x", "y"]
    assert run_n(None, lambda n: lookupo(n, env, B)) == []


def test_not_in_envo():
    env = env_of(("x", A))
    assert len(run_n(None, lambda q: not_in_envo("y", env))) == 1
    assert run_n(None, lambda q: not_in_envo("x", env)) == []
    assert len(run_n(None, lambda q: not_in_envo("x", NIL))) == 1


def test_mirroro():
    s = inject(p("(a b)"))
    assert run_n(None, lambda v: mirroro(s, v)) == [LogicVData(s)]
    assert run_n(None, lambda s2: mirroro(s2, LogicVData(s))) == [s]


# -- evalo ------------------------------------------------------------------------------


def evalo_forward(expr):
    return [extract(v) for v in run_n(None, lambda out: evalo(inject(expr), NIL, out))]


def test_evalo_examples():
    assert evalo_forward(p("(quote a)")) == [VData(Sym("a"))]
    assert evalo_forward(p("(list (quote a) (quote b))")) == [VData(p("(a b)"))]
    assert evalo_forward(p("(lambda (x) x)")) == [VClosure("x", Sym("x"), [])]
    assert evalo_forward(p("((lambda (x) x) (quote a))")) == [VData(Sym("a"))]
    assert evalo_forward(p("x")) == []


def test_evalo_respects_shadowing():
    assert evalo_forward(p("((lambda (lambda) lambda) (quote c))")) == [VData(Sym("c"))]
    assert evalo_forward(p("((lambda (quote) (quote a)) (lambda (y) y))")) == []
    assert evalo_forward(p("((lambda (list) (list (quote a))) (lambda (y) y))")) == [VData(Sym("a"))]


def test_classic_quine():
    q = p(QUINE)
    assert verify_cycle((q,))
    assert evalo_forward(q) == [VData(q)]
    assert len(run_n(1, lambda v: conj(eq(v, inject(q)), evalo(v, NIL, LogicVData(v))))) == 1


def test_evalo_backward_finds_quoted_data():
    got = run_n(3, lambda e: evalo(e, NIL, LogicVData(inject(Sym("a")))), LogicSExprType)
    progs = ground_terms(tuple(got))
    assert progs[0] == p("(quote a)")
    for prog in progs:
        assert eval_det(prog) == VData(Sym("a"))


# Random ground programs.  About a third evaluate to a value; the rest are
# stuck, and evalo must then fail as well.

names = st.sampled_from(["x", "y", "quote", "list", "lambda"])


def programs():
    leaf = st.one_of(
        st.builds(Sym, names),
        st.builds(lambda d: slist(Sym("quote"), d), sexprs),
    )

    def extend(sub):
        return st.one_of(
            st.builds(lambda es: slist(Sym("list"), *es), st.lists(sub, max_size=3)),
            st.builds(lambda x, b: slist(Sym("lambda"), slist(Sym(x)), b), names, sub),
            st.builds(lambda f, a: slist(f, a), sub, sub),
            st.builds(lambda es: slist(*es), st.lists(sub, max_size=3)),
        )

    return st.recursive(leaf, extend, max_leaves=8)


def terminates(expr, fuel=5_000):
    try:
        _Evaluator(fuel).eval(expr, [])
        return True
    except (_OutOfFuel, RecursionError):
        return False


@given(programs())
def test_evalo_agrees_with_eval_det(expr):
    assume(terminates(expr))
    want = eval_det(expr)
    try:
        got = [extract(v) for v in run_n_budget(expr)]
    except StepBudgetExceeded:
        pytest.fail(f"evalo did not finish on a terminating program: {print_sexpr(expr)}")
    assert got == ([] if want is None else [want])


def run_n_budget(expr):
    from relkanren.goal import run

    return list(run(lambda out: evalo(inject(expr), NIL, out), max_steps=500_000))


# -- synthesis -------------------------------------------------------------------------


def test_quines_are_verified_and_distinct():
    qs = quineso(5)
    assert len(qs) == 5 and len(set(qs)) == 5
    for q in qs:
        assert eval_det(q) == VData(q)


def test_one_twine():
    (a, b), = twineso(1)
    assert a != b
    assert eval_det(a) == VData(b) and eval_det(b) == VData(a)


def test_verify_cycle_rejects_bad_groups():
    q = p(QUINE)
    assert not verify_cycle((q, q))
    assert not verify_cycle((p("(quote a)"),))


def test_grounder_uses_fresh_names():
    t = lslist(LogicSym("x0"), Var(5), LogicSym(Var(6)), Var(5))
    (g,) = ground_terms((t,))
    assert g == p("(x0 x1 x2 x1)")
    gr = Grounder.for_terms((t,))
    assert "quote" in gr.taken and "x0" in gr.taken
