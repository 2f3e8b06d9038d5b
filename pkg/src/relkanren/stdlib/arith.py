"""Relational arithmetic on little-endian binary numerals.

A numeral is a logical list of :class:`Bit`, least significant bit first,
with no trailing zero: 0 is ``[]``, 1 is ``[1]``, 6 is ``[0, 1, 1]``.
Relations follow Kiselyov et al.'s pure declarative arithmetic, so they
terminate whenever one argument is fresh and the rest are ground.
"""

from __future__ import annotations

from typing import Any

from ..core import inject
from ..goal import Goal, conde, conj_many, disj_many, eq, fresh, relation
from .lists import appendo
from .types import NIL, Bit, LogicCons, LogicList, list_items, llist

Z = Bit.ZERO
O = Bit.ONE


def to_binary(n: int) -> list[Bit]:
    if n < 0:
        raise ValueError(f"numerals are non-negative, got {n}")
    out = []
    while n:
        out.append(Bit(n & 1))
        n >>= 1
    return out


def from_binary(bs: Any) -> int:
    """Decode a plain bit list or a ground logical numeral."""
    if isinstance(bs, LogicList):
        bs = list_items(bs)
    bs = list(bs)
    if bs and bs[-1] != 1:
        raise ValueError(f"non-canonical numeral (trailing zero): {bs!r}")
    n = 0
    for i, b in enumerate(bs):
        if b not in (0, 1):
            raise ValueError(f"not a bit: {b!r}")
        n |= int(b) << i
    return n


def num(n: int) -> Any:
    """The logical numeral for ``n``."""
    return inject(to_binary(n))


ONE = llist(O)
TWO = llist(Z, O)
THREE = llist(O, O)


def poso(n: Any) -> Goal:
    """``n`` is positive."""
    return fresh(lambda a, d: eq(n, LogicCons(a, d)))


def gt1o(n: Any) -> Goal:
    """``n`` is greater than one."""
    return fresh(lambda a, ad, dd: eq(n, llist(a, ad, tail=dd)))


_ADDER_TABLE = [
    # b, x, y, r, c
    (Z, Z, Z, Z, Z),
    (O, Z, Z, O, Z),
    (Z, O, Z, O, Z),
    (O, O, Z, Z, O),
    (Z, Z, O, O, Z),
    (O, Z, O, Z, O),
    (Z, O, O, Z, O),
    (O, O, O, O, O),
]
_ADDER_ROWS = [llist(*row) for row in _ADDER_TABLE]


def full_addero(b: Any, x: Any, y: Any, r: Any, c: Any) -> Goal:
    """``b + x + y == r + 2c`` on single bits."""
    args = llist(b, x, y, r, c)
    return disj_many([eq(args, row) for row in _ADDER_ROWS])


@relation
def addero(d: Any, n: Any, m: Any, r: Any) -> Goal:
    """``d + n + m == r`` where ``d`` is a carry bit."""
    return conde([
        [eq(d, Z), eq(m, NIL), eq(n, r)],
        [eq(d, Z), eq(n, NIL), eq(m, r), poso(m)],
        [eq(d, O), eq(m, NIL), addero(Z, n, ONE, r)],
        [eq(d, O), eq(n, NIL), poso(m), addero(Z, ONE, m, r)],
        [eq(n, ONE), eq(m, ONE), fresh(lambda a, c: conj_many([
            eq(r, llist(a, c)),
            full_addero(d, O, O, a, c),
        ]))],
        [eq(n, ONE), gen_addero(d, n, m, r)],
        [eq(m, ONE), gt1o(n), gt1o(r), addero(d, ONE, n, r)],
        [gt1o(n), gen_addero(d, n, m, r)],
    ])


@relation
def gen_addero(d: Any, n: Any, m: Any, r: Any) -> Goal:
    return fresh(lambda a, b, c, e, x, y, z: conj_many([
        eq(n, LogicCons(a, x)),
        eq(m, LogicCons(b, y)), poso(y),
        eq(r, LogicCons(c, z)), poso(z),
        full_addero(d, a, b, c, e),
        addero(e, x, y, z),
    ]))


def pluso(n: Any, m: Any, k: Any) -> Goal:
    """``n + m == k``."""
    return addero(Z, n, m, k)


def minuso(n: Any, m: Any, k: Any) -> Goal:
    """``n - m == k``."""
    return pluso(m, k, n)


@relation
def multo(n: Any, m: Any, p: Any) -> Goal:
    """``n * m == p``."""
    return conde([
        [eq(n, NIL), eq(p, NIL)],
        [poso(n), eq(m, NIL), eq(p, NIL)],
        [eq(n, ONE), poso(m), eq(m, p)],
        [gt1o(n), eq(m, ONE), eq(n, p)],
        [fresh(lambda x, z: conj_many([
            eq(n, LogicCons(Z, x)), poso(x),
            eq(p, LogicCons(Z, z)), poso(z),
            gt1o(m),
            multo(x, m, z),
        ]))],
        [fresh(lambda x, y: conj_many([
            eq(n, LogicCons(O, x)), poso(x),
            eq(m, LogicCons(Z, y)), poso(y),
            multo(m, n, p),
        ]))],
        [fresh(lambda x, y: conj_many([
            eq(n, LogicCons(O, x)), poso(x),
            eq(m, LogicCons(O, y)), poso(y),
            odd_multo(x, n, m, p),
        ]))],
    ])


@relation
def odd_multo(x: Any, n: Any, m: Any, p: Any) -> Goal:
    return fresh(lambda q: conj_many([
        bound_multo(q, p, n, m),
        multo(x, m, q),
        pluso(LogicCons(Z, q), m, p),
    ]))


@relation
def bound_multo(q: Any, p: Any, n: Any, m: Any) -> Goal:
    # Bounds the length of q by that of p, so multo terminates.
    return disj_many([
        conj_many([eq(q, NIL), fresh(lambda a, d: eq(p, LogicCons(a, d)))]),
        fresh(lambda a0, a1, a2, x, y, z: conj_many([
            eq(q, LogicCons(a0, x)),
            eq(p, LogicCons(a1, y)),
            disj_many([
                conj_many([
                    eq(n, NIL),
                    eq(m, LogicCons(a2, z)),
                    bound_multo(x, y, z, NIL),
                ]),
                conj_many([
                    eq(n, LogicCons(a2, z)),
                    bound_multo(x, y, z, m),
                ]),
            ]),
        ])),
    ])


@relation
def eq_lengtho(n: Any, m: Any) -> Goal:
    """``n`` and ``m`` have the same bit length."""
    return conde([
        [eq(n, NIL), eq(m, NIL)],
        [eq(n, ONE), eq(m, ONE)],
        [fresh(lambda a, x, b, y: conj_many([
            eq(n, LogicCons(a, x)), poso(x),
            eq(m, LogicCons(b, y)), poso(y),
            eq_lengtho(x, y),
        ]))],
    ])


@relation
def lt_lengtho(n: Any, m: Any) -> Goal:
    """``n`` has fewer bits than ``m``."""
    return conde([
        [eq(n, NIL), poso(m)],
        [eq(n, ONE), gt1o(m)],
        [fresh(lambda a, x, b, y: conj_many([
            eq(n, LogicCons(a, x)), poso(x),
            eq(m, LogicCons(b, y)), poso(y),
            lt_lengtho(x, y),
        ]))],
    ])


def le_lengtho(n: Any, m: Any) -> Goal:
    return disj_many([eq_lengtho(n, m), lt_lengtho(n, m)])


@relation
def lesso(n: Any, m: Any) -> Goal:
    """``n < m``."""
    return disj_many([
        lt_lengtho(n, m),
        conj_many([
            eq_lengtho(n, m),
            fresh(lambda x: conj_many([poso(x), pluso(n, x, m)])),
        ]),
    ])


def leqo(n: Any, m: Any) -> Goal:
    """``n <= m``."""
    return disj_many([eq(n, m), lesso(n, m)])


@relation
def divo(n: Any, m: Any, q: Any, r: Any) -> Goal:
    """``n == m * q + r`` with ``r < m``."""
    return conde([
        [eq(r, n), eq(q, NIL), lesso(n, m)],
        [eq(q, ONE), eq_lengtho(n, m), pluso(r, m, n), lesso(r, m)],
        [
            lt_lengtho(m, n),
            lesso(r, m),
            poso(q),
            fresh(lambda nh, nl, qh, ql, qlm, qlmr, rr: fresh(lambda rh: conj_many([
                splito(n, r, nl, nh),
                splito(q, r, ql, qh),
                disj_many([
                    conj_many([
                        eq(nh, NIL),
                        eq(qh, NIL),
                        minuso(nl, r, qlm),
                        multo(ql, m, qlm),
                    ]),
                    conj_many([
                        poso(nh),
                        multo(ql, m, qlm),
                        pluso(qlm, r, qlmr),
                        minuso(qlmr, nl, rr),
                        splito(rr, r, NIL, rh),
                        divo(nh, m, qh, rh),
                    ]),
                ]),
            ]))),
        ],
    ])


@relation
def splito(n: Any, r: Any, l: Any, h: Any) -> Goal:
    """Split ``n`` into low bits ``l`` (as long as ``r``, plus one) and high
    bits ``h``: ``n == l + 2^(|r|+1) * h``."""
    return disj_many([
        conj_many([eq(n, NIL), eq(h, NIL), eq(l, NIL)]),
        fresh(lambda b, n2: conj_many([
            eq(n, llist(Z, b, tail=n2)),
            eq(r, NIL),
            eq(h, LogicCons(b, n2)),
            eq(l, NIL),
        ])),
        fresh(lambda n2: conj_many([
            eq(n, LogicCons(O, n2)),
            eq(r, NIL),
            eq(n2, h),
            eq(l, ONE),
        ])),
        fresh(lambda b, n2, a, r2: conj_many([
            eq(n, llist(Z, b, tail=n2)),
            eq(r, LogicCons(a, r2)),
            eq(l, NIL),
            splito(LogicCons(b, n2), r2, NIL, h),
        ])),
        fresh(lambda n2, a, r2: conj_many([
            eq(n, LogicCons(O, n2)),
            eq(r, LogicCons(a, r2)),
            eq(l, ONE),
            splito(n2, r2, NIL, h),
        ])),
        fresh(lambda b, n2, a, r2, l2: conj_many([
            eq(n, LogicCons(b, n2)),
            eq(r, LogicCons(a, r2)),
            eq(l, LogicCons(b, l2)),
            poso(l2),
            splito(n2, r2, l2, h),
        ])),
    ])


@relation
def exp2o(n: Any, b: Any, q: Any) -> Goal:
    """Helper for logo with base a power of two."""
    return disj_many([
        conj_many([eq(n, ONE), eq(q, NIL)]),
        conj_many([
            gt1o(n),
            eq(q, ONE),
            fresh(lambda s: splito(n, b, s, ONE)),
        ]),
        fresh(lambda q1, b2: conj_many([
            eq(q, LogicCons(Z, q1)),
            poso(q1),
            lt_lengtho(b, n),
            appendo(b, LogicCons(O, b), b2),
            exp2o(n, b2, q1),
        ])),
        fresh(lambda q1, nh, b2, s: conj_many([
            eq(q, LogicCons(O, q1)),
            poso(q1),
            poso(nh),
            splito(n, b, s, nh),
            appendo(b, LogicCons(O, b), b2),
            exp2o(nh, b2, q1),
        ])),
    ])


@relation
def repeated_mulo(n: Any, q: Any, nq: Any) -> Goal:
    """``n ** q == nq``, for ground ``q``."""
    return disj_many([
        conj_many([poso(n), eq(q, NIL), eq(nq, ONE)]),
        conj_many([eq(q, ONE), eq(n, nq)]),
        conj_many([
            gt1o(q),
            fresh(lambda q1, nq1: conj_many([
                pluso(q1, ONE, q),
                repeated_mulo(n, q1, nq1),
                multo(nq1, n, nq),
            ])),
        ]),
    ])


@relation
def logo(n: Any, b: Any, q: Any, r: Any) -> Goal:
    """``n == b ** q + r`` with ``b ** (q + 1) > n``."""

    def general(bw1, bw, nw, nw1, ql1, ql, s):
        return conj_many([
            exp2o(b, NIL, bw1),
            pluso(bw1, ONE, bw),
            lt_lengtho(q, n),
            fresh(lambda q1, bwq1: conj_many([
                pluso(q, ONE, q1),
                multo(bw, q1, bwq1),
                lesso(nw1, bwq1),
            ])),
            exp2o(n, NIL, nw1),
            pluso(nw1, ONE, nw),
            divo(nw, bw, ql1, s),
            pluso(ql, ONE, ql1),
            le_lengtho(ql, q),
            fresh(lambda bql, qh, s2, qdh, qd: conj_many([
                repeated_mulo(b, ql, bql),
                divo(nw, bw1, qh, s2),
                pluso(ql, qdh, qh),
                pluso(ql, qd, q),
                leqo(qd, qdh),
                fresh(lambda bqd, bq1, bq: conj_many([
                    repeated_mulo(b, qd, bqd),
                    multo(bql, bqd, bq),
                    multo(b, bq, bq1),
                    pluso(bq, r, n),
                    lesso(n, bq1),
                ])),
            ])),
        ])

    return conde([
        [eq(n, ONE), poso(b), eq(q, NIL), eq(r, NIL)],
        [eq(q, NIL), lesso(n, b), pluso(r, ONE, n)],
        [eq(q, ONE), gt1o(b), eq_lengtho(n, b), pluso(r, b, n)],
        [eq(b, ONE), poso(q), pluso(r, ONE, n)],
        [eq(b, NIL), poso(q), eq(r, n)],
        [
            eq(b, TWO),
            fresh(lambda a, ad, dd: conj_many([
                poso(dd),
                eq(n, llist(a, ad, tail=dd)),
                exp2o(n, NIL, q),
                fresh(lambda s: splito(n, dd, r, s)),
            ])),
        ],
        [
            fresh(lambda a, ad, add, ddd: disj_many([
                eq(b, THREE),
                eq(b, llist(a, ad, add, tail=ddd)),
            ])),
            lt_lengtho(b, n),
            fresh(general),
        ],
    ])


def expo(b: Any, q: Any, n: Any) -> Goal:
    """``b ** q == n``."""
    return logo(n, b, q, NIL)
