"""List and tree relations."""

from __future__ import annotations

from typing import Any

from ..goal import Goal, conj_many, disj_many, eq, fresh, relation
from ..match import matche
from .types import NIL, LogicCons, LogicEmpty, LogicLeaf, LogicListType, LogicNil, LogicNode


@relation
def appendo(xs: Any, ys: Any, zs: Any) -> Goal:
    """``xs ++ ys == zs``, by matching on ``xs``."""
    return (
        matche()
        .on(LogicNil.pattern, lambda: eq(ys, zs))
        .on(LogicCons.pattern, lambda x, xs2: fresh(
            lambda zs2: conj_many([
                eq(zs, LogicCons(x, zs2)),
                appendo(xs2, ys, zs2),
            ]),
            LogicListType,
        ))
    )(xs)


@relation
def leaveso(t: Any, xs: Any) -> Goal:
    """``xs`` is the left-to-right list of leaf values of tree ``t``."""
    return disj_many([
        conj_many([eq(t, LogicEmpty()), eq(xs, NIL)]),
        fresh(lambda x: conj_many([
            eq(t, LogicLeaf(x)),
            eq(xs, LogicCons(x, NIL)),
        ])),
        fresh(lambda l, r, as_, bs: conj_many([
            eq(t, LogicNode(l, r)),
            leaveso(l, as_),
            leaveso(r, bs),
            appendo(as_, bs, xs),
        ])),
    ])


@relation
def lengtho(xs: Any, n: int) -> Goal:
    """``xs`` is a list of exactly ``n`` elements (``n`` a Python int)."""
    if n == 0:
        return eq(xs, NIL)
    return fresh(lambda h, t: conj_many([eq(xs, LogicCons(h, t)), lengtho(t, n - 1)]))
