"""Quine, twine and thrine synthesis, checked by the deterministic evaluator."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterator, Optional

from ..core import Var, extract
from ..goal import run
from .evaldet import eval_det
from .interp import quine_goal, thrine_goal, twine_goal
from .sexpr import RESERVED, SExpr, LogicSCons, LogicSExprType, LogicSNil, LogicSym, VData, symbols


class UnverifiedProgram(AssertionError):
    """A synthesized program failed the deterministic check."""


@dataclass
class Grounder:
    """Replace leftover variables with symbol names not used elsewhere.

    Every variable gets its own name, so disequalities between distinct
    variables, or between a variable and a symbol, keep holding.
    """

    taken: set
    names: dict

    @classmethod
    def for_terms(cls, terms: tuple) -> "Grounder":
        taken = set(RESERVED)
        for t in terms:
            _collect_symbols(t, taken)
        return cls(taken, {})

    def name(self, v: Var) -> str:
        found = self.names.get(v.id)
        if found is None:
            for i in itertools.count():
                candidate = f"x{i}"
                if candidate not in self.taken:
                    break
            self.taken.add(candidate)
            found = self.names[v.id] = candidate
        return found

    def ground(self, t: Any) -> Any:
        if t.__class__ is Var:
            return LogicSym(self.name(t))
        if isinstance(t, LogicSym):
            n = t.logicName
            return LogicSym(self.name(n)) if n.__class__ is Var else t
        if isinstance(t, LogicSCons):
            return LogicSCons(self.ground(t.logicCar), self.ground(t.logicCdr))
        if isinstance(t, LogicSNil):
            return t
        raise TypeError(f"not an S-expression term: {t!r}")


def _collect_symbols(t: Any, out: set) -> None:
    stack = [t]
    while stack:
        x = stack.pop()
        if isinstance(x, LogicSym):
            if x.logicName.__class__ is not Var:
                out.add(x.logicName)
        elif isinstance(x, LogicSCons):
            stack.append(x.logicCar)
            stack.append(x.logicCdr)


def ground_terms(terms: tuple) -> tuple:
    """Ground a group of walked S-expression terms consistently."""
    g = Grounder.for_terms(terms)
    out = tuple(extract(g.ground(t)) for t in terms)
    assert all(x is not None for x in out)
    return out


def evaluates_to(p: SExpr, q: SExpr) -> bool:
    return eval_det(p) == VData(q)


def verify_cycle(programs: tuple) -> bool:
    """Each program evaluates to the next one, the last one to the first,
    and (for more than one) all programs differ."""
    k = len(programs)
    if k > 1 and len(set(programs)) != k:
        return False
    return all(evaluates_to(programs[i], programs[(i + 1) % k]) for i in range(k))


def _synthesize(
    arity: int, relation: Callable[..., Any], n: int, max_steps: Optional[int]
) -> list[tuple]:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    out = []
    answers = run(relation, (LogicSExprType,) * arity, max_steps=max_steps)
    for answer in answers:
        terms = answer if arity > 1 else (answer,)
        programs = ground_terms(terms)
        if not verify_cycle(programs):
            raise UnverifiedProgram(f"synthesized program failed verification: {programs!r}")
        out.append(programs)
        if len(out) >= n:
            break
    return out


def quineso(n: int, max_steps: Optional[int] = None) -> list[SExpr]:
    """``n`` verified quines."""
    return [p for (p,) in _synthesize(1, quine_goal, n, max_steps)]


def twineso(n: int, max_steps: Optional[int] = None) -> list[tuple[SExpr, SExpr]]:
    """``n`` verified pairs ``(p, q)``: p evaluates to q and q to p, p != q."""
    return _synthesize(2, twine_goal, n, max_steps)


def thrineso(n: int, max_steps: Optional[int] = None) -> list[tuple[SExpr, SExpr, SExpr]]:
    """``n`` verified three-cycles of pairwise distinct programs."""
    return _synthesize(3, thrine_goal, n, max_steps)


def iter_quines(max_steps: Optional[int] = None) -> Iterator[SExpr]:
    for answer in run(quine_goal, (LogicSExprType,), max_steps=max_steps):
        (p,) = ground_terms((answer,))
        yield p


__all__ = [
    "Grounder",
    "UnverifiedProgram",
    "evaluates_to",
    "ground_terms",
    "iter_quines",
    "quineso",
    "symbols",
    "thrineso",
    "twineso",
    "verify_cycle",
]
