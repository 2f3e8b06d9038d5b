"""First-class patterns and relational matching.

A :class:`Pattern` is a bidirectional view of one constructor: it can match
a logical value (``try_match``) and build one from field terms (``build``).
Matchers are built by adding branches to a terminator; branches are tried
in the order they were added::

    appendo_on = (
        matche()
        .on(LogicNil.pattern, lambda: eq(ys, zs))
        .on(LogicCons.pattern, lambda x, xs2: ...)
    )(xs)

The exhaustive variant (``matche_exhaustive`` / ``on_tagged`` /
``enter_tagged``) tracks which constructors have been claimed and refuses to
build a matcher that misses one or claims one twice.  Both errors are raised
while the matcher is being built, before any goal runs.
"""

from __future__ import annotations

from typing import Any, Callable, Optional, Sequence

from .core import ANY, LogicType, State, Var, unify_terms
from .goal import Goal, _mplus_all, fresh, fresh_spec
from .stream import Stream


class ExhaustivenessError(Exception):
    """Base class for matcher construction errors."""


class MissingCasesError(ExhaustivenessError):
    def __init__(self, type_name: str, missing: Sequence[str]) -> None:
        self.type_name = type_name
        self.missing = tuple(sorted(missing))
        super().__init__(
            f"non-exhaustive match on {type_name}: missing {', '.join(self.missing)}"
        )


class DuplicateCaseError(ExhaustivenessError):
    def __init__(self, type_name: str, tag: str) -> None:
        self.type_name = type_name
        self.tag = tag
        super().__init__(f"case {tag} of {type_name} is already checked")


class Pattern:
    """Matches and builds one constructor of a derived logical type."""

    __slots__ = ("owner", "cls", "tag", "arity", "_ctor", "_spec")

    def __init__(self, owner: Any, cls: type, ctor: Any) -> None:
        self.owner = owner
        self.cls = cls
        self.tag = ctor.name
        self.arity = len(ctor.fields)
        self._ctor = ctor
        self._spec: Optional[tuple] = None

    def try_match(self, value: Any) -> Optional[tuple]:
        if value.__class__ is self.cls:
            return value.children()
        return None

    def build(self, *fields: Any) -> Any:
        return self.cls(*fields)

    @property
    def binding_spec(self) -> tuple:
        """Runtime types of the variables a match on this pattern binds."""
        if self._spec is None:
            from .logicgen import AtomicField, resolve_type

            if any(isinstance(f.shape, AtomicField) for f in self._ctor.fields):
                raise TypeError(
                    f"pattern {self.tag} cannot bind atomic fields to variables"
                )
            self._spec = tuple(resolve_type(f.shape.type) for f in self._ctor.fields)
        return self._spec

    def __repr__(self) -> str:
        return f"Pattern({self.owner!r}.{self.tag})"


class ExhaustivePattern:
    """A pattern that claims its constructor when used with ``on_tagged``."""

    __slots__ = ("pattern",)

    def __init__(self, pattern: Pattern) -> None:
        self.pattern = pattern

    @property
    def tag(self) -> str:
        return self.pattern.tag

    @property
    def owner(self) -> Any:
        return self.pattern.owner

    def __repr__(self) -> str:
        return f"ExhaustivePattern({self.pattern.owner!r}.{self.tag})"


def _branch_goal(pattern: Pattern, handler: Callable[..., Goal], term: Any) -> Goal:
    """fresh fields; term == build(fields); handler(fields)."""
    build = pattern.cls
    if pattern.arity == 0:
        value = build()

        def goal0(state: State) -> Stream:
            state = unify_terms(term, value, state)
            if state is None:
                return None
            return handler()(state)

        return goal0

    def body(*vs: Var) -> Goal:
        def goal(state: State) -> Stream:
            state = unify_terms(term, build(*vs), state)
            if state is None:
                return None
            return handler(*vs)(state)

        return goal

    return fresh(body, pattern.binding_spec)


class Matcher:
    """An ordered set of branches; calling it on a term gives a goal."""

    __slots__ = ("branches",)

    def __init__(self, branches: Sequence[tuple] = ()) -> None:
        self.branches = tuple(branches)

    def on(self, pattern: Pattern, handler: Callable[..., Goal]) -> "Matcher":
        return on(pattern, handler, self)

    def __call__(self, term: Any) -> Goal:
        goals = [_branch_goal(p, h, term) for p, h in self.branches]
        if not goals:
            return _fail
        if len(goals) == 1:
            g = goals[0]
            return lambda state: (lambda: g(state))
        return lambda state: (lambda: _mplus_all(goals, 0, state))


def _fail(state: State) -> Stream:
    return None


def matche() -> Matcher:
    """The matcher with no branches; it fails on every term."""
    return Matcher()


def on(
    pattern: Pattern,
    handler: Callable[..., Goal],
    rest: Callable[[Any], Goal],
) -> Any:
    """Add a branch after those of ``rest``."""
    if isinstance(pattern, ExhaustivePattern):
        raise TypeError("on() takes a plain pattern; use on_tagged() for tagged ones")
    pattern.binding_spec  # atomic-field constructors are rejected here
    if isinstance(rest, Matcher):
        return Matcher(rest.branches + ((pattern, handler),))

    def matcher(term: Any) -> Goal:
        other = rest(term)
        last = _branch_goal(pattern, handler, term)
        return lambda state: (lambda: _mplus_all((other, last), 0, state))

    return matcher


# -- exhaustive matching --------------------------------------------------------


class ExhaustiveMatcher:
    """Branches built with :func:`on_tagged`, tracking claimed constructors."""

    __slots__ = ("type", "branches", "checked")

    def __init__(
        self,
        type: Optional[LogicType] = None,
        branches: Sequence[tuple] = (),
    ) -> None:
        self.type = type
        self.branches = tuple(branches)
        self.checked = frozenset(p.tag for p, _ in self.branches)

    def on(self, pattern: ExhaustivePattern, handler: Callable[..., Goal]) -> "ExhaustiveMatcher":
        return on_tagged(pattern, handler, self)

    def remaining(self) -> frozenset:
        if self.type is None:
            return frozenset()
        return frozenset(self.type.tags) - self.checked  # type: ignore[attr-defined]

    def enter(self, dispatch: bool = True) -> Callable[[Any], Goal]:
        return enter_tagged(self, dispatch=dispatch)


def matche_exhaustive(type: Optional[LogicType] = None) -> ExhaustiveMatcher:
    """Terminator for exhaustive matching; every case must be claimed
    before :func:`enter_tagged` accepts the matcher."""
    return ExhaustiveMatcher(type)


def on_tagged(
    pattern: ExhaustivePattern,
    handler: Callable[..., Goal],
    rest: ExhaustiveMatcher,
) -> ExhaustiveMatcher:
    if not isinstance(pattern, ExhaustivePattern):
        raise TypeError("on_tagged() needs a tagged pattern (e.g. LogicOk.tagged)")
    if not isinstance(rest, ExhaustiveMatcher):
        raise TypeError("on_tagged() extends an exhaustive matcher")
    owner = pattern.owner
    if rest.type is not None and rest.type is not owner:
        raise TypeError(f"pattern for {owner!r} used in a match on {rest.type!r}")
    if pattern.tag in rest.checked:
        raise DuplicateCaseError(repr(owner), pattern.tag)
    pattern.pattern.binding_spec
    return ExhaustiveMatcher(owner, rest.branches + ((pattern.pattern, handler),))


def enter_tagged(matcher: ExhaustiveMatcher, dispatch: bool = True) -> Callable[[Any], Goal]:
    """Check coverage and turn an exhaustive matcher into ``term -> goal``.

    With ``dispatch`` on, a scrutinee that is already a constructed value
    runs only the branch for its constructor.
    """
    if not isinstance(matcher, ExhaustiveMatcher):
        raise TypeError("enter_tagged() needs an exhaustive matcher")
    if matcher.type is None:
        raise ExhaustivenessError("cannot check coverage: scrutinee type unknown")
    missing = matcher.remaining()
    if missing:
        raise MissingCasesError(repr(matcher.type), missing)
    naive = Matcher(matcher.branches)
    if not dispatch:
        return naive
    table = {p.cls: (p, h) for p, h in matcher.branches}

    def enter(term: Any) -> Goal:
        fallback = naive(term)

        def goal(state: State) -> Stream:
            picked = ground_dispatch(table, term, state)
            if picked is None:
                return fallback(state)
            if picked is False:
                return None
            handler, fields = picked
            return lambda: handler(*fields)(state)

        return goal

    return enter


def ground_dispatch(table: dict, term: Any, state: State) -> Any:
    """Pick the branch for an already-constructed scrutinee.

    Returns ``(handler, fields)``, ``None`` when the scrutinee is an unbound
    variable, or ``False`` when no branch matches.
    """
    get = state.subst.get
    while term.__class__ is Var:
        bound = get(term.id)
        if bound is None:
            return None
        term = bound
    found = table.get(term.__class__)
    if found is None:
        return False
    return found[1], term.children()


__all__ = [
    "ANY",
    "DuplicateCaseError",
    "ExhaustiveMatcher",
    "ExhaustivePattern",
    "ExhaustivenessError",
    "Matcher",
    "MissingCasesError",
    "Pattern",
    "enter_tagged",
    "fresh_spec",
    "ground_dispatch",
    "matche",
    "matche_exhaustive",
    "on",
    "on_tagged",
]
