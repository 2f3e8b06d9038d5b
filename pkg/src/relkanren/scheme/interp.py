"""A relational interpreter for a tiny Scheme.

Supported forms: ``(quote d)``, ``(list e ...)``, variables,
``(lambda (x) body)`` and single-argument application.  Values are either
plain data (``VData``) or closures (``VClosure``); since no S-expression can
denote a closure, quoted data can never forge one.
"""

from __future__ import annotations

from typing import Any

from ..goal import Goal, conj_many, disj_many, eq, fresh, neq, relation
from ..stdlib.types import NIL, LogicCons, LogicPair
from .sexpr import LogicSCons, LogicSNil, LogicSym, LogicVClosure, LogicVData, lslist

QUOTE = LogicSym("quote")
LIST = LogicSym("list")
LAMBDA = LogicSym("lambda")
SNIL = LogicSNil()


@relation
def lookupo(x: Any, env: Any, v: Any) -> Goal:
    """``v`` is the value of the first binding of ``x`` in ``env``."""
    return fresh(lambda y, w, rest: conj_many([
        eq(env, LogicCons(LogicPair(y, w), rest)),
        disj_many([
            conj_many([eq(y, x), eq(w, v)]),
            conj_many([neq(y, x), lookupo(x, rest, v)]),
        ]),
    ]))


@relation
def not_in_envo(x: Any, env: Any) -> Goal:
    """``x`` is bound nowhere in ``env``."""
    return disj_many([
        fresh(lambda y, w, rest: conj_many([
            eq(env, LogicCons(LogicPair(y, w), rest)),
            neq(y, x),
            not_in_envo(x, rest),
        ])),
        eq(env, NIL),
    ])


@relation
def proper_listo(es: Any, env: Any, ds: Any) -> Goal:
    """Each expression of ``es`` evaluates to data; ``ds`` collects it."""
    return disj_many([
        conj_many([eq(es, SNIL), eq(ds, SNIL)]),
        fresh(lambda e, rest, d, drest: conj_many([
            eq(es, LogicSCons(e, rest)),
            eq(ds, LogicSCons(d, drest)),
            evalo(e, env, LogicVData(d)),
            proper_listo(rest, env, drest),
        ])),
    ])


@relation
def evalo(expr: Any, env: Any, out: Any) -> Goal:
    """``expr`` evaluates to ``out`` in ``env``."""
    return disj_many([
        fresh(lambda d: conj_many([
            eq(expr, lslist(QUOTE, d)),
            not_in_envo("quote", env),
            eq(out, LogicVData(d)),
        ])),
        fresh(lambda es, ds: conj_many([
            eq(expr, LogicSCons(LIST, es)),
            not_in_envo("list", env),
            eq(out, LogicVData(ds)),
            proper_listo(es, env, ds),
        ])),
        fresh(lambda x: conj_many([
            eq(expr, LogicSym(x)),
            lookupo(x, env, out),
        ])),
        fresh(lambda x, body: conj_many([
            eq(expr, lslist(LAMBDA, lslist(LogicSym(x)), body)),
            not_in_envo("lambda", env),
            eq(out, LogicVClosure(x, body, env)),
        ])),
        fresh(lambda rator, rand, x, body, cenv, arg: conj_many([
            eq(expr, lslist(rator, rand)),
            evalo(rator, env, LogicVClosure(x, body, cenv)),
            evalo(rand, env, arg),
            evalo(body, LogicCons(LogicPair(x, arg), cenv), out),
        ])),
    ])


def mirroro(s: Any, v: Any) -> Goal:
    """``v`` is the closure-free value that looks exactly like ``s``."""
    return eq(v, LogicVData(s))


def quine_goal(q: Any) -> Goal:
    return evalo(q, NIL, LogicVData(q))


def twine_goal(p: Any, q: Any) -> Goal:
    return conj_many([
        neq(p, q),
        evalo(p, NIL, LogicVData(q)),
        evalo(q, NIL, LogicVData(p)),
    ])


def thrine_goal(p: Any, q: Any, r: Any) -> Goal:
    return conj_many([
        neq(p, q),
        neq(q, r),
        neq(p, r),
        evalo(p, NIL, LogicVData(q)),
        evalo(q, NIL, LogicVData(r)),
        evalo(r, NIL, LogicVData(p)),
    ])
