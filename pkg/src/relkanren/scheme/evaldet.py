"""Deterministic evaluator with the same semantics as ``evalo``.

Used as the oracle that checks synthesized programs.  Returns ``None``
for stuck programs and for programs that run out of fuel.
"""

from __future__ import annotations

from typing import Optional

from .sexpr import SCons, SExpr, SNil, Sym, Val, VClosure, VData

DEFAULT_FUEL = 10**6


class _OutOfFuel(Exception):
    pass


def _lookup(name: str, env: list) -> Optional[Val]:
    for key, value in env:
        if key == name:
            return value
    return None


def _bound(name: str, env: list) -> bool:
    return any(key == name for key, _ in env)


def _items(s: SExpr) -> Optional[list]:
    out = []
    while isinstance(s, SCons):
        out.append(s.car)
        s = s.cdr
    return out if isinstance(s, SNil) else None


class _Evaluator:
    def __init__(self, fuel: int) -> None:
        self.fuel = fuel

    def eval(self, expr: SExpr, env: list) -> Optional[Val]:
        self.fuel -= 1
        if self.fuel < 0:
            raise _OutOfFuel
        if isinstance(expr, Sym):
            return _lookup(expr.name, env)
        items = _items(expr)
        if not items:
            return None
        head = items[0]
        if isinstance(head, Sym) and not _bound(head.name, env):
            if head.name == "quote":
                return VData(items[1]) if len(items) == 2 else None
            if head.name == "list":
                data = []
                for e in items[1:]:
                    v = self.eval(e, env)
                    if not isinstance(v, VData):
                        return None
                    data.append(v.datum)
                out: SExpr = SNil()
                for d in reversed(data):
                    out = SCons(d, out)
                return VData(out)
            if head.name == "lambda":
                if len(items) != 3:
                    return None
                params = _items(items[1])
                if params is None or len(params) != 1 or not isinstance(params[0], Sym):
                    return None
                return VClosure(params[0].name, items[2], env)
        if len(items) != 2:
            return None
        f = self.eval(items[0], env)
        if not isinstance(f, VClosure):
            return None
        a = self.eval(items[1], env)
        if a is None:
            return None
        return self.eval(f.body, [(f.param, a)] + f.env)


def eval_det(expr: SExpr, env: Optional[list] = None, fuel: int = DEFAULT_FUEL) -> Optional[Val]:
    """Evaluate ``expr``; ``None`` if it is stuck or diverges."""
    try:
        return _Evaluator(fuel).eval(expr, list(env or []))
    except (_OutOfFuel, RecursionError):
        return None
