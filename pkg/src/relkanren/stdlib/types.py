"""Logical counterparts of the standard data types.

Python lists become ``LogicNil`` / ``LogicCons`` chains and 2-tuples become
``LogicPair``.  Trees and results are small dataclass families derived the
same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Any, Generic, Iterable, TypeVar

from ..core import LogicValue, Var, register_atom
from ..logicgen import (
    ConstructorDescriptor,
    FieldDescriptor,
    TermField,
    TypeDescriptor,
    derive_logic_type,
    make_logic,
)

A = TypeVar("A")
B = TypeVar("B")


class Bit(IntEnum):
    """A binary digit; an atom compared by equality."""

    ZERO = 0
    ONE = 1

    def __repr__(self) -> str:
        return str(int(self))


register_atom(Bit)


# -- lists -------------------------------------------------------------------------


def _list_view(xs: list) -> tuple[str, tuple]:
    if xs:
        return "Cons", (xs[0], xs[1:])
    return "Nil", ()


def _list_build(name: str, values: tuple) -> list:
    if name == "Nil":
        return []
    head, tail = values
    return [head, *tail]


LIST_DESCRIPTOR = TypeDescriptor(
    "List",
    (
        ConstructorDescriptor("Nil"),
        ConstructorDescriptor(
            "Cons",
            (
                FieldDescriptor("head", TermField(A)),
                FieldDescriptor("tail", TermField("List")),
            ),
        ),
    ),
    params=("a",),
    plain_view=_list_view,
    plain_build=_list_build,
    plain_types=(list,),
)

LogicListType = derive_logic_type(LIST_DESCRIPTOR)
LogicList = LogicListType.base
LogicNil = LogicListType["Nil"]
LogicCons = LogicListType["Cons"]

NIL = LogicNil()


def llist(*items: Any, tail: Any = NIL) -> Any:
    """A logical list of the given terms, ending in ``tail``."""
    out = tail
    for x in reversed(items):
        out = LogicCons(x, out)
    return out


def cons(head: Any, tail: Any) -> Any:
    return LogicCons(head, tail)


def list_items(term: Any) -> list:
    """Elements of a walked proper logical list; raises on a partial list."""
    out = []
    while term.__class__ is LogicCons:
        out.append(term.logicHead)
        term = term.logicTail
    if term.__class__ is not LogicNil:
        raise ValueError(f"not a proper list: ends in {term!r}")
    return out


# -- pairs -------------------------------------------------------------------------


def _pair_view(p: tuple) -> tuple[str, tuple]:
    if len(p) != 2:
        raise TypeError(f"only 2-tuples have a logical counterpart, got {len(p)}-tuple")
    return "Pair", (p[0], p[1])


PAIR_DESCRIPTOR = TypeDescriptor(
    "Pair",
    (
        ConstructorDescriptor(
            "Pair",
            (FieldDescriptor("fst", TermField(A)), FieldDescriptor("snd", TermField(B))),
        ),
    ),
    params=("a", "b"),
    plain_view=_pair_view,
    plain_build=lambda name, values: tuple(values),
    plain_types=(tuple,),
)

LogicPairType = derive_logic_type(PAIR_DESCRIPTOR)
LogicPair = LogicPairType["Pair"]


# -- trees -------------------------------------------------------------------------


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Leaf(Generic[A]):
    value: A


@dataclass(frozen=True)
class Node(Generic[A]):
    left: "Tree[A]"
    right: "Tree[A]"


# Only used in annotations; resolved by name.
Tree = Any

LogicTreeType = make_logic("Tree", Empty, Leaf, Node, params=("a",))
LogicEmpty = LogicTreeType["Empty"]
LogicLeaf = LogicTreeType["Leaf"]
LogicNode = LogicTreeType["Node"]


# -- results -----------------------------------------------------------------------


@dataclass(frozen=True)
class Ok(Generic[A]):
    value: A


@dataclass(frozen=True)
class Fail(Generic[B]):
    error: B


LogicResultType = make_logic("Result", Ok, Fail, params=("a", "b"))
LogicOk = LogicResultType["Ok"]
LogicFail = LogicResultType["Fail"]


def is_ground(term: Any) -> bool:
    if term.__class__ is Var:
        return False
    if isinstance(term, LogicValue):
        return all(is_ground(c) for c in term.children())
    return True


def bits(items: Iterable[int]) -> list[Bit]:
    return [Bit(b) for b in items]
