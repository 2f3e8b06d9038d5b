"""Goals and the combinators that build relational programs.

A goal is a callable taking a :class:`~relkanren.core.State` and returning a
stream of ``(state, result)`` pairs.  Most goals produce ``None`` as their
result; :func:`fresh_vars` and :func:`bind` support passing values along.
"""

from __future__ import annotations

import functools
import inspect
from types import FunctionType
from typing import Any, Callable, Iterable, Iterator, Optional, Sequence, Union

from .core import (
    ANY,
    EMPTY_STATE,
    LogicType,
    State,
    Var,
    disunify_terms,
    unify_terms,
    walk,
)
from .stream import Stream, _mplus, _nothing, bind_goal, bind_stream, iterate, map_stream

Goal = Callable[[State], Stream]
FreshSpec = Union[LogicType, Sequence[LogicType], None]

MAX_FRESH_ARITY = 7


def successo(x: Any = None) -> Goal:
    def goal(state: State) -> Stream:
        return ((state, x), _nothing)

    return goal


def _fail(state: State) -> Stream:
    return None


def failo() -> Goal:
    return _fail


def eq(a: Any, b: Any) -> Goal:
    """Unify two terms of the same type."""

    def goal(state: State) -> Stream:
        state = unify_terms(a, b, state)
        if state is None:
            return None
        return ((state, None), _nothing)

    return goal


def neq(a: Any, b: Any) -> Goal:
    """Constrain two terms of the same type to stay distinct."""

    def goal(state: State) -> Stream:
        state = disunify_terms(a, b, state)
        if state is None:
            return None
        return ((state, None), _nothing)

    return goal


def conj(g1: Goal, g2: Goal) -> Goal:
    """Run ``g2`` in every state produced by ``g1``; keep ``g2``'s result."""

    def goal(state: State) -> Stream:
        return bind_goal(g1(state), g2)

    return goal


def conj_many(goals: Iterable[Goal]) -> Goal:
    goals = list(goals)
    if not goals:
        return successo()
    if len(goals) == 1:
        return goals[0]
    first = goals[0]
    rest = goals[1:]

    def goal(state: State) -> Stream:
        s = first(state)
        for g in rest:
            s = bind_goal(s, g)
        return s

    return goal


def disj(g1: Goal, g2: Goal) -> Goal:
    """Interleave the answers of two goals."""

    def goal(state: State) -> Stream:
        return lambda: _mplus(g1(state), lambda: g2(state))

    return goal


def _mplus_all(goals: Sequence[Goal], i: int, state: State) -> Stream:
    if i == len(goals) - 1:
        return goals[i](state)
    return _mplus(goals[i](state), lambda: _mplus_all(goals, i + 1, state))


def disj_many(goals: Iterable[Goal]) -> Goal:
    goals = list(goals)
    if not goals:
        return _fail

    def goal(state: State) -> Stream:
        return lambda: _mplus_all(goals, 0, state)

    return goal


def conde(alternatives: Iterable[Iterable[Goal]]) -> Goal:
    """Disjunction of conjunctions; each alternative is a list of goals."""
    return disj_many([conj_many(alt) for alt in alternatives])


def _arity(body: Callable) -> int:
    code = getattr(body, "__code__", None)
    if code is not None and not code.co_flags & inspect.CO_VARARGS:
        n = code.co_argcount
        if inspect.ismethod(body):
            n -= 1
        return n
    params = inspect.signature(body).parameters.values()
    return sum(
        1
        for p in params
        if p.kind in (p.POSITIONAL_ONLY, p.POSITIONAL_OR_KEYWORD)
        and p.default is p.empty
    )


_ARITY_CACHE: dict = {}


def fresh_spec(spec: FreshSpec, body: Optional[Callable] = None) -> tuple:
    """Normalise a fresh-variable spec into a tuple of logical types.

    ``spec`` is a single type, a sequence of types, or ``None`` (as many
    untyped variables as ``body`` takes).
    """
    if spec is None:
        if body is None:
            raise ValueError("an untyped fresh spec needs a body to count")
        plain = type(body) is FunctionType and body.__defaults__ is None
        if plain:
            found = _ARITY_CACHE.get(body.__code__)
            if found is not None:
                return found
        types: tuple = (ANY,) * _arity(body)
    elif isinstance(spec, LogicType):
        types = (spec,)
    else:
        types = tuple(spec)
    if not 1 <= len(types) <= MAX_FRESH_ARITY:
        raise ValueError(
            f"fresh allocates between 1 and {MAX_FRESH_ARITY} variables, got {len(types)}"
        )
    if spec is None and plain:
        _ARITY_CACHE[body.__code__] = types
    return types


def allocate(state: State, types: tuple) -> tuple[tuple, State]:
    n = state.max_var_id
    k = len(types)
    vs = tuple(map(Var, range(n, n + k), types))
    return vs, State(state.subst, state.diseq, n + k)


def fresh(body: Callable[..., Goal], types: FreshSpec = None) -> Goal:
    """Introduce new variables and run the goal ``body`` builds from them."""
    types = fresh_spec(types, body)
    k = len(types)
    if k == 1:
        t0 = types[0]

        def goal1(state: State) -> Stream:
            n = state.max_var_id
            st = State(state.subst, state.diseq, n + 1)
            return body(Var(n, t0))(st)

        return goal1

    def goal(state: State) -> Stream:
        vs, st = allocate(state, types)
        return body(*vs)(st)

    return goal


def fresh_vars(*types: LogicType) -> Goal:
    """Goal whose result is a tuple of new variables (a single one if one
    type is given)."""
    spec = fresh_spec(types if types else (ANY,))

    def goal(state: State) -> Stream:
        vs, st = allocate(state, spec)
        return ((st, vs[0] if len(vs) == 1 else vs), _nothing)

    return goal


def bind(g: Goal, k: Callable[[Any], Goal]) -> Goal:
    """Sequence ``g`` with a goal computed from its result."""

    def cont(pair: tuple) -> Stream:
        return k(pair[1])(pair[0])

    def goal(state: State) -> Stream:
        return bind_stream(g(state), cont)

    return goal


def fmap(g: Goal, f: Callable[[Any], Any]) -> Goal:
    def goal(state: State) -> Stream:
        return map_stream(g(state), lambda pair: (pair[0], f(pair[1])))

    return goal


def delay(thunk: Callable[[], Goal]) -> Goal:
    """Build the goal only when it runs; breaks eager recursion."""

    def goal(state: State) -> Stream:
        return lambda: thunk()(state)

    return goal


def relation(fn: Callable[..., Goal]) -> Callable[..., Goal]:
    """Make a relation build its body only when the goal runs.

    Recursive relations call themselves while building goals; without the
    delay, building would never finish.  Suspension is left to the
    disjunctions inside the body.
    """

    @functools.wraps(fn)
    def wrapper(*args: Any) -> Goal:
        def goal(state: State) -> Stream:
            return fn(*args)(state)

        return goal

    return wrapper


def solve(goal: Goal, state: State = EMPTY_STATE) -> Iterator[tuple[State, Any]]:
    """All ``(state, result)`` answers of ``goal``, lazily."""
    return iterate(goal(state))


def run(
    relation: Callable[..., Goal],
    types: FreshSpec = None,
    max_steps: Optional[int] = None,
) -> Iterator[Any]:
    """Lazily enumerate answers to ``relation``, deep-walked.

    The relation receives new query variables (ids ``0..k-1``).  A single
    variable is reported as is, several as a tuple.  ``max_steps`` bounds
    the search (see :func:`~relkanren.stream.iterate`).
    """
    types = fresh_spec(types, relation)
    vs, state = allocate(EMPTY_STATE, types)
    goal = relation(*vs)
    single = len(vs) == 1
    for st, _ in iterate(goal(state), max_steps):
        if single:
            yield walk(st, vs[0])
        else:
            yield tuple(walk(st, v) for v in vs)


def run_n(
    n: Optional[int], relation: Callable[..., Goal], types: FreshSpec = None
) -> list:
    """The first ``n`` answers (all of them when ``n`` is ``None``)."""
    out = []
    if n is not None and n <= 0:
        return out
    for answer in run(relation, types):
        out.append(answer)
        if n is not None and len(out) >= n:
            break
    return out
