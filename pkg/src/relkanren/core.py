"""Terms, substitutions, disequality constraints and unification.

A term is either a :class:`Var` or a logical value.  Logical values are
instances of :class:`LogicValue` subclasses (usually generated by
:mod:`relkanren.logicgen`) or atoms (``int``, ``bool``, ``str``, ...), whose
logical representation is the plain value itself.

Substitutions are triangular: a bound variable may point at a term that
contains other bound variables.  All variables, whatever their type, live in
one integer-keyed persistent map.
"""

from __future__ import annotations

from typing import Any, Callable, Generic, Iterator, Optional, TypeVar

import immutables

T = TypeVar("T")

#: Assert runtime type tags whenever a variable gets bound.
CHECK_TYPES = __debug__

_EMPTY_MAP: immutables.Map = immutables.Map()


class LogicType:
    """Runtime tag describing which logical type a variable stands for."""

    def accepts(self, value: Any) -> bool:
        raise NotImplementedError

    def compatible(self, other: LogicType) -> bool:
        return other is ANY or self == other


class _AnyType(LogicType):
    def accepts(self, value: Any) -> bool:
        return True

    def compatible(self, other: LogicType) -> bool:
        return True

    def __repr__(self) -> str:
        return "ANY"


ANY: LogicType = _AnyType()


class Atomic(LogicType):
    """A base type unified by plain equality."""

    def __init__(self, pytype: type, name: Optional[str] = None) -> None:
        self.pytype = pytype
        self.name = name or pytype.__name__

    def accepts(self, value: Any) -> bool:
        return isinstance(value, self.pytype)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Atomic) and other.pytype is self.pytype

    def __hash__(self) -> int:
        return hash(self.pytype)

    def __repr__(self) -> str:
        return self.name


INT = Atomic(int)
BOOL = Atomic(bool)
STR = Atomic(str)
#: Symbols are plain strings.
SYMBOL = STR


class Var(Generic[T]):
    """A unification variable.  Only the engine allocates these."""

    __slots__ = ("id", "type")

    def __init__(self, id: int, type: LogicType = ANY) -> None:
        self.id = id
        self.type = type

    def __eq__(self, other: object) -> bool:
        return other.__class__ is Var and other.id == self.id  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash(("Var", self.id))

    def __repr__(self) -> str:
        return f"_.{self.id}"


class LogicValue:
    """Base class of constructed logical values.

    Subclasses provide ``_unify``, ``_walk``, ``_occurs``, ``_extract`` and
    ``_map``; a class attribute ``tag`` names the constructor and
    ``_fields`` lists the slot names in declaration order.
    """

    __slots__ = ()
    tag: str = ""
    _fields: tuple[str, ...] = ()
    _term_fields: tuple[bool, ...] = ()
    logic_type: Any = None

    def _unify(self, other: Any, state: State) -> Optional[State]:
        raise NotImplementedError

    def _walk(self, state: State) -> LogicValue:
        raise NotImplementedError

    def _occurs(self, var: Var, state: State) -> bool:
        raise NotImplementedError

    def _extract(self) -> Any:
        raise NotImplementedError

    def _map(self, fn: Callable[[Any], Any]) -> LogicValue:
        raise NotImplementedError

    def children(self) -> tuple:
        return tuple(getattr(self, f) for f in self._fields)


class State:
    """Search state: substitution, disequality store and variable counter."""

    __slots__ = ("subst", "diseq", "max_var_id")

    def __init__(
        self,
        subst: immutables.Map = _EMPTY_MAP,
        diseq: immutables.Map = _EMPTY_MAP,
        max_var_id: int = 0,
    ) -> None:
        self.subst = subst
        self.diseq = diseq
        self.max_var_id = max_var_id

    def bind(self, var: Var, term: Any) -> Optional[State]:
        return add_subst(var, term, self)

    def __repr__(self) -> str:
        return (
            f"State(subst={dict(self.subst)!r}, diseq={dict(self.diseq)!r}, "
            f"max_var_id={self.max_var_id})"
        )


class _Probe(State):
    # Records new bindings instead of checking constraints.  Used to compute
    # the prefix a unification would add.
    __slots__ = ("prefix",)

    def __init__(self, subst, max_var_id, prefix=None) -> None:
        self.subst = subst
        self.diseq = _EMPTY_MAP
        self.max_var_id = max_var_id
        self.prefix = prefix

    def bind(self, var, term):
        if CHECK_TYPES:
            _check_binding(var, term)
        return _Probe(
            self.subst.set(var.id, term), self.max_var_id, ((var, term), self.prefix)
        )


EMPTY_STATE = State()


def empty_state() -> State:
    return EMPTY_STATE


def fresh_var_id(state: State, type: LogicType = ANY) -> tuple[Var, State]:
    n = state.max_var_id
    return Var(n, type), State(state.subst, state.diseq, n + 1)


def _check_binding(var: Var, term: Any) -> None:
    expected = var.type
    if expected is ANY:
        return
    if term.__class__ is Var:
        ok = expected.compatible(term.type)
    else:
        ok = expected.accepts(term)
    if not ok:
        raise TypeError(f"cannot bind {var!r} of type {expected!r} to {term!r}")


def lookup_subst(var: Var, subst: immutables.Map) -> Any:
    """Return the term bound to ``var`` (one step, no chasing) or ``None``."""
    term = subst.get(var.id)
    if term is not None and CHECK_TYPES:
        _check_binding(var, term)
    return term


def shallow_walk(state: State, term: Any) -> Any:
    get = state.subst.get
    while term.__class__ is Var:
        bound = get(term.id)
        if bound is None:
            return term
        term = bound
    return term


def walk(state: State, term: Any) -> Any:
    """Deep walk: resolve every variable reachable from ``term``."""
    get = state.subst.get
    while term.__class__ is Var:
        bound = get(term.id)
        if bound is None:
            return term
        term = bound
    if isinstance(term, LogicValue):
        return term._walk(state)
    return term


def occurs_check(var: Var, term: Any, state: State) -> bool:
    get = state.subst.get
    while term.__class__ is Var:
        if term.id == var.id:
            return True
        bound = get(term.id)
        if bound is None:
            return False
        term = bound
    if isinstance(term, LogicValue):
        return term._occurs(var, state)
    return False


def unify_terms(a: Any, b: Any, state: State) -> Optional[State]:
    get = state.subst.get
    while a.__class__ is Var:
        bound = get(a.id)
        if bound is None:
            break
        a = bound
    while b.__class__ is Var:
        bound = get(b.id)
        if bound is None:
            break
        b = bound
    if a.__class__ is Var:
        if b.__class__ is Var:
            if a.id == b.id:
                return state
            return state.bind(a, b)
        if isinstance(b, LogicValue) and b._occurs(a, state):
            return None
        return state.bind(a, b)
    if b.__class__ is Var:
        if isinstance(a, LogicValue) and a._occurs(b, state):
            return None
        return state.bind(b, a)
    if isinstance(a, LogicValue):
        return a._unify(b, state)
    return state if a == b else None


def add_subst(var: Var, term: Any, state: State) -> Optional[State]:
    """Extend the substitution and re-check constraints attached to ``var``."""
    if CHECK_TYPES and var.type is not ANY:
        _check_binding(var, term)
    diseq = state.diseq
    pending = diseq.get(var.id)
    new = State(state.subst.set(var.id, term), diseq, state.max_var_id)
    if pending is None:
        return new
    new.diseq = diseq.delete(var.id)
    for prefix in pending:
        new = _recheck(prefix, new)
        if new is None:
            return None
    return new


def _unify_prefix(pairs, state: State):
    """Unify every pair in a probe.  Returns ``False`` when the pairs cannot
    unify, otherwise the (possibly empty) list of new bindings."""
    probe: Optional[State] = _Probe(state.subst, state.max_var_id)
    for left, right in pairs:
        probe = unify_terms(left, right, probe)  # type: ignore[arg-type]
        if probe is None:
            return False
    out = []
    node = probe.prefix  # type: ignore[union-attr]
    while node is not None:
        out.append(node[0])
        node = node[1]
    out.reverse()
    return out


def _recheck(prefix, state: State) -> Optional[State]:
    bindings = _unify_prefix(prefix, state)
    if bindings is False:
        return state
    if not bindings:
        return None
    return _attach(tuple(bindings), state)


def _attach(prefix, state: State) -> State:
    # Attach to the lowest-id bound variable; when that variable is bound to
    # another variable, the constraint is also attached there, since the two
    # can become equal by binding either one.
    first_var, first_term = min(prefix, key=lambda pair: pair[0].id)
    diseq = state.diseq
    keys = [first_var.id]
    if first_term.__class__ is Var:
        keys.append(first_term.id)
    for key in keys:
        diseq = diseq.set(key, diseq.get(key, ()) + (prefix,))
    return State(state.subst, diseq, state.max_var_id)


def disunify_terms(a: Any, b: Any, state: State) -> Optional[State]:
    bindings = _unify_prefix(((a, b),), state)
    if bindings is False:
        return state
    if not bindings:
        return None
    return _attach(tuple(bindings), state)


def diseq_violations(state: State) -> list:
    """Stored constraint prefixes that already hold under ``state``."""
    bad = []
    for prefixes in state.diseq.values():
        for prefix in prefixes:
            if _unify_prefix(prefix, state) == []:
                bad.append(prefix)
    return bad


def constraints(state: State) -> Iterator[tuple]:
    seen = set()
    for prefixes in state.diseq.values():
        for prefix in prefixes:
            if id(prefix) not in seen:
                seen.add(id(prefix))
                yield prefix


# -- injection / extraction -------------------------------------------------

_INJECTORS: dict[type, Callable[[Any], Any]] = {}


def _identity(x: Any) -> Any:
    return x


for _atom in (int, bool, str):
    _INJECTORS[_atom] = _identity


def register_injector(pytype: type, fn: Callable[[Any], Any]) -> None:
    _INJECTORS[pytype] = fn


def register_atom(pytype: type) -> None:
    _INJECTORS[pytype] = _identity


def inject(value: Any) -> Any:
    """Convert a plain value into a variable-free logical value."""
    try:
        fn = _INJECTORS[value.__class__]
    except KeyError:
        for klass in value.__class__.__mro__[1:]:
            if klass in _INJECTORS:
                fn = _INJECTORS[klass]
                break
        else:
            raise TypeError(f"no logical counterpart for {type(value).__name__}")
    return fn(value)


def extract(term: Any) -> Any:
    """Convert a logical value back to a plain value; ``None`` if any
    variable remains."""
    if term.__class__ is Var:
        return None
    if isinstance(term, LogicValue):
        return term._extract()
    return term


# -- reification --------------------------------------------------------------


def map_vars(term: Any, fn: Callable[[Var], Any]) -> Any:
    if term.__class__ is Var:
        return fn(term)
    if isinstance(term, LogicValue):
        return term._map(lambda t: map_vars(t, fn))
    return term


def term_vars(term: Any) -> list[Var]:
    """Distinct variables of a (deep-walked) term in order of appearance."""
    seen: dict[int, Var] = {}

    def visit(v: Var) -> Var:
        seen.setdefault(v.id, v)
        return v

    map_vars(term, visit)
    return list(seen.values())


def reify(term: Any) -> Any:
    """Renumber the variables of a walked term from 0, by first appearance."""
    names: dict[int, Var] = {}

    def rename(v: Var) -> Var:
        if v.id not in names:
            names[v.id] = Var(len(names), v.type)
        return names[v.id]

    return map_vars(term, rename)
