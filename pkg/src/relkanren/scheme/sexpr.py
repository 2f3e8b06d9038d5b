"""S-expressions, interpreter values, and their text form."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, Iterable, Union

from ..core import Var
from ..logicgen import make_logic

RESERVED = ("quote", "list", "lambda")


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class SNil:
    pass


@dataclass(frozen=True)
class SCons:
    car: "SExpr"
    cdr: "SExpr"


SExpr = Union[Sym, SNil, SCons]


@dataclass(frozen=True)
class VData:
    """A value that is plain data: quoted or built with ``list``."""

    datum: SExpr


@dataclass(frozen=True)
class VClosure:
    param: str
    body: SExpr
    # innermost binding first; a list of (name, value) pairs
    env: list = field(hash=False)


Val = Union[VData, VClosure]

LogicSExprType = make_logic("SExpr", Sym, SNil, SCons)
LogicSym = LogicSExprType["Sym"]
LogicSNil = LogicSExprType["SNil"]
LogicSCons = LogicSExprType["SCons"]

LogicValType = make_logic("Val", VData, VClosure)
LogicVData = LogicValType["VData"]
LogicVClosure = LogicValType["VClosure"]


def slist(*items: SExpr, tail: SExpr = SNil()) -> SExpr:
    out = tail
    for x in reversed(items):
        out = SCons(x, out)
    return out


def lslist(*items: Any, tail: Any = None) -> Any:
    """Logical S-expression list of the given terms."""
    out = LogicSNil() if tail is None else tail
    for x in reversed(items):
        out = LogicSCons(x, out)
    return out


# -- parsing -------------------------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, message: str, pos: int) -> None:
        self.pos = pos
        super().__init__(f"{message} at position {pos}")


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(')|([^\s()';]+))")


def _tokens(text: str) -> list[tuple[str, int]]:
    out = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            return out
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        out.append((m.group(m.lastindex), start))
        pos = m.end()


def parse_sexpr(text: str) -> SExpr:
    """Parse one S-expression; ``'d`` reads as ``(quote d)``."""
    toks = _tokens(text)
    if not toks:
        raise ParseError("empty input", 0)
    expr, i = _parse(toks, 0, len(text))
    if i != len(toks):
        raise ParseError("trailing input", toks[i][1])
    return expr


def _parse(toks: list, i: int, end: int) -> tuple[SExpr, int]:
    if i >= len(toks):
        raise ParseError("unexpected end of input", end)
    tok, pos = toks[i]
    if tok == "(":
        items = []
        tail: SExpr = SNil()
        i += 1
        while True:
            if i >= len(toks):
                raise ParseError("unclosed parenthesis", pos)
            t, p = toks[i]
            if t == ")":
                return slist(*items, tail=tail), i + 1
            if t == ".":
                if not items:
                    raise ParseError("dot with nothing before it", p)
                tail, i = _parse(toks, i + 1, end)
                if i >= len(toks) or toks[i][0] != ")":
                    raise ParseError("expected ) after dotted tail", toks[i][1] if i < len(toks) else end)
                return slist(*items, tail=tail), i + 1
            item, i = _parse(toks, i, end)
            items.append(item)
    if tok == ")":
        raise ParseError("unexpected )", pos)
    if tok == "'":
        datum, i = _parse(toks, i + 1, end)
        return slist(Sym("quote"), datum), i
    if tok == ".":
        raise ParseError("unexpected .", pos)
    return Sym(tok), i + 1


# -- printing ------------------------------------------------------------------------


def print_sexpr(s: SExpr) -> str:
    """Canonical text: no quote sugar, single spaces, dotted tails."""
    parts: list[str] = []
    _print(s, parts)
    return "".join(parts)


def _print(s: Any, out: list) -> None:
    if isinstance(s, Sym):
        out.append(s.name)
    elif isinstance(s, SNil):
        out.append("()")
    elif isinstance(s, SCons):
        out.append("(")
        _print(s.car, out)
        s = s.cdr
        while isinstance(s, SCons):
            out.append(" ")
            _print(s.car, out)
            s = s.cdr
        if not isinstance(s, SNil):
            out.append(" . ")
            _print(s, out)
        out.append(")")
    else:
        raise TypeError(f"not an S-expression: {s!r}")


def print_value(v: Val) -> str:
    if isinstance(v, VClosure):
        return "#closure"
    return print_sexpr(v.datum)


def show_term(t: Any) -> str:
    """Text of a logical S-expression that may still hold variables."""
    if t.__class__ is Var:
        return repr(t)
    if isinstance(t, LogicSym):
        return repr(t.logicName) if t.logicName.__class__ is Var else t.logicName
    if isinstance(t, LogicSNil):
        return "()"
    if isinstance(t, LogicSCons):
        parts = [show_term(t.logicCar)]
        t = t.logicCdr
        while isinstance(t, LogicSCons):
            parts.append(show_term(t.logicCar))
            t = t.logicCdr
        if isinstance(t, LogicSNil):
            return "(" + " ".join(parts) + ")"
        return "(" + " ".join(parts) + " . " + show_term(t) + ")"
    return repr(t)


def symbols(s: SExpr) -> set[str]:
    out = set()
    stack = [s]
    while stack:
        x = stack.pop()
        if isinstance(x, Sym):
            out.add(x.name)
        elif isinstance(x, SCons):
            stack.append(x.car)
            stack.append(x.cdr)
    return out


def sexpr_size(s: SExpr) -> int:
    n = 0
    stack = [s]
    while stack:
        x = stack.pop()
        n += 1
        if isinstance(x, SCons):
            stack.append(x.car)
            stack.append(x.cdr)
    return n


def from_items(items: Iterable[SExpr]) -> SExpr:
    return slist(*items)
