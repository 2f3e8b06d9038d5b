"""Derive logical counterparts of algebraic data types.

Given a :class:`TypeDescriptor` (or a family of dataclasses, one per
constructor) this module generates

* a base class ``Logic<Type>`` and one class ``Logic<Ctor>`` per
  constructor, every field holding a term ("maximal" logical types);
* the protocol methods used by the core (unify, walk, occurs check,
  inject, extract);
* one pattern per constructor, plain and exhaustiveness-aware.

Methods are generated as specialised source code, much like
:mod:`dataclasses` builds ``__init__``.  Passing ``codegen=False`` instead
binds the descriptor-driven ``generic_*`` functions, which walk the
descriptor at run time.
"""

from __future__ import annotations

import dataclasses
import keyword
import typing
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional, Sequence, Union

from . import core
from .core import (
    ANY,
    BOOL,
    INT,
    STR,
    LogicType,
    LogicValue,
    State,
    Var,
    extract,
    inject,
    occurs_check,
    register_injector,
    unify_terms,
    walk,
)


class DerivationError(TypeError):
    """The type declaration uses a construct that cannot be derived."""


# -- descriptors --------------------------------------------------------------


@dataclass(frozen=True)
class TermField:
    """A field holding a term: a variable or a logical value.

    ``type`` is a :class:`~relkanren.core.LogicType`, a Python type, a type
    variable, or a string naming a type (resolved lazily).
    """

    type: Any = None


@dataclass(frozen=True)
class AtomicField:
    """A field holding a plain base value compared by equality."""

    pytype: type = object


FieldShape = Union[TermField, AtomicField]


@dataclass(frozen=True)
class FieldDescriptor:
    name: Optional[str]
    shape: FieldShape


@dataclass(frozen=True)
class ConstructorDescriptor:
    name: str
    fields: tuple = ()
    plain: Optional[type] = None

    @property
    def arity(self) -> int:
        return len(self.fields)


@dataclass(frozen=True)
class TypeDescriptor:
    """Shape of an algebraic type: a sum of constructors, each a product of
    fields.

    ``plain_view`` maps a plain value to ``(constructor name, field values)``
    and ``plain_build`` does the reverse; by default constructors are
    dataclasses and their fields are read by name.
    """

    name: str
    constructors: tuple = ()
    params: tuple = ()
    plain_view: Optional[Callable[[Any], tuple]] = field(default=None, compare=False)
    plain_build: Optional[Callable[[str, tuple], Any]] = field(
        default=None, compare=False
    )
    plain_types: tuple = ()

    def __post_init__(self) -> None:
        names = [c.name for c in self.constructors]
        dupes = sorted({n for n in names if names.count(n) > 1})
        if dupes:
            raise DerivationError(f"{self.name}: duplicate constructor names {dupes}")

    def constructor(self, name: str) -> ConstructorDescriptor:
        for c in self.constructors:
            if c.name == name:
                return c
        raise KeyError(name)


def logic_name(name: str) -> str:
    """``Foo`` becomes ``LogicFoo``."""
    return "Logic" + name


def logic_field_name(name: str) -> str:
    """``fooBar`` becomes ``logicFooBar``."""
    return "logic" + name[:1].upper() + name[1:]


def _slot_names(ctor: ConstructorDescriptor) -> tuple[str, ...]:
    out = []
    for i, f in enumerate(ctor.fields):
        out.append(logic_field_name(f.name) if f.name else f"_{i}")
    if len(set(out)) != len(out):
        raise DerivationError(f"{ctor.name}: field names collide after renaming: {out}")
    for n in out:
        if not n.isidentifier() or keyword.iskeyword(n):
            raise DerivationError(f"{ctor.name}: field name {n!r} is not an identifier")
    return tuple(out)


# -- type resolution ------------------------------------------------------------

#: plain type name -> derived logical type, for resolving string references
_BY_PLAIN_NAME: dict[str, "DerivedType"] = {}
#: plain Python class -> derived logical type
_BY_PLAIN_CLASS: dict[type, "DerivedType"] = {}

_ATOMIC_TYPES = {int: INT, bool: BOOL, str: STR}


def resolve_type(expr: Any) -> LogicType:
    """Best-effort runtime tag for a field's declared type."""
    if expr is None or isinstance(expr, typing.TypeVar):
        return ANY
    if isinstance(expr, LogicType):
        return expr
    if isinstance(expr, str):
        head = expr.split("[", 1)[0].strip().strip("'\"")
        found = _BY_PLAIN_NAME.get(head)
        if found is not None:
            return found
        return {"int": INT, "bool": BOOL, "str": STR}.get(head, ANY)
    if isinstance(expr, typing.ForwardRef):
        return resolve_type(expr.__forward_arg__)
    origin = typing.get_origin(expr)
    if origin is not None:
        return resolve_type(origin)
    if expr in _ATOMIC_TYPES:
        return _ATOMIC_TYPES[expr]
    if isinstance(expr, type):
        found = _BY_PLAIN_CLASS.get(expr)
        if found is not None:
            return found
        if expr in core._INJECTORS and core._INJECTORS[expr] is core._identity:
            return core.Atomic(expr)
    return ANY


# -- derived type ----------------------------------------------------------------


class DerivedType(LogicType):
    """The logical counterpart of an algebraic type.

    Acts as the runtime type tag for variables of this type and gives
    access to the generated constructor classes and patterns.
    """

    def __init__(self, descriptor: TypeDescriptor, base: type) -> None:
        self.descriptor = descriptor
        self.name = logic_name(descriptor.name)
        self.base = base
        self.classes: dict[str, type] = {}
        self.tags = frozenset(c.name for c in descriptor.constructors)
        self.has_instance = False

    def accepts(self, value: Any) -> bool:
        return isinstance(value, self.base)

    def compatible(self, other: LogicType) -> bool:
        return other is ANY or other is self

    def __repr__(self) -> str:
        return self.name

    def __getitem__(self, ctor_name: str) -> type:
        return self.classes[ctor_name]

    def __iter__(self):
        return iter(self.classes[c.name] for c in self.descriptor.constructors)

    def pattern(self, ctor_name: str):
        return self.classes[ctor_name].pattern

    def tagged(self, ctor_name: str):
        return self.classes[ctor_name].tagged

    # plain conversions
    def view(self, plain: Any) -> tuple[str, tuple]:
        d = self.descriptor
        if d.plain_view is not None:
            return d.plain_view(plain)
        for c in d.constructors:
            if c.plain is not None and plain.__class__ is c.plain:
                return c.name, tuple(getattr(plain, f.name) for f in c.fields)
        raise TypeError(f"{plain!r} is not a value of {d.name}")

    def build_plain(self, ctor_name: str, values: tuple) -> Any:
        d = self.descriptor
        if d.plain_build is not None:
            return d.plain_build(ctor_name, values)
        plain = d.constructor(ctor_name).plain
        if plain is None:
            raise TypeError(f"{d.name}.{ctor_name} has no plain counterpart")
        return plain(*values)

    def inject(self, plain: Any) -> LogicValue:
        return generic_inject(self, plain)

    def extract(self, value: Any) -> Any:
        return extract(value)


# -- the generic (descriptor-driven) protocol ------------------------------------


def _derived(d: Union[TypeDescriptor, DerivedType]) -> DerivedType:
    if isinstance(d, DerivedType):
        return d
    found = _BY_PLAIN_NAME.get(d.name)
    if found is None or found.descriptor is not d:
        raise KeyError(f"no logical type derived for {d.name}")
    return found


def generic_unify(
    d: Union[TypeDescriptor, DerivedType], left: LogicValue, right: LogicValue, state: State
) -> Optional[State]:
    if left.__class__ is not right.__class__:
        return None
    ctor = _derived(d).descriptor.constructor(left.tag)
    for slot, fd in zip(left._fields, ctor.fields):
        a = getattr(left, slot)
        b = getattr(right, slot)
        if isinstance(fd.shape, AtomicField):
            if a != b:
                return None
            continue
        state = unify_terms(a, b, state)  # type: ignore[assignment]
        if state is None:
            return None
    return state


def generic_walk(d: Union[TypeDescriptor, DerivedType], state: State, value: LogicValue) -> LogicValue:
    ctor = _derived(d).descriptor.constructor(value.tag)
    args = []
    for slot, fd in zip(value._fields, ctor.fields):
        x = getattr(value, slot)
        args.append(x if isinstance(fd.shape, AtomicField) else walk(state, x))
    return value.__class__(*args)


def generic_occurs_check(
    d: Union[TypeDescriptor, DerivedType], var: Var, value: LogicValue, state: State
) -> bool:
    ctor = _derived(d).descriptor.constructor(value.tag)
    for slot, fd in zip(value._fields, ctor.fields):
        if isinstance(fd.shape, TermField) and occurs_check(var, getattr(value, slot), state):
            return True
    return False


def generic_inject(d: Union[TypeDescriptor, DerivedType], plain: Any) -> LogicValue:
    dt = _derived(d)
    name, values = dt.view(plain)
    ctor = dt.descriptor.constructor(name)
    args = [
        v if isinstance(fd.shape, AtomicField) else inject(v)
        for fd, v in zip(ctor.fields, values)
    ]
    return dt.classes[name](*args)


def generic_extract(d: Union[TypeDescriptor, DerivedType], value: Any) -> Any:
    if value.__class__ is Var:
        return None
    dt = _derived(d)
    ctor = dt.descriptor.constructor(value.tag)
    out = []
    for slot, fd in zip(value._fields, ctor.fields):
        x = getattr(value, slot)
        if isinstance(fd.shape, TermField):
            x = extract(x)
            if x is None:
                return None
        out.append(x)
    return dt.build_plain(ctor.name, tuple(out))


# -- code generation ---------------------------------------------------------------


def _class_source(cls_name: str, ctor: ConstructorDescriptor, slots: tuple) -> str:
    """Source of the protocol methods for one constructor class."""
    term = [isinstance(f.shape, TermField) for f in ctor.fields]
    lines = []
    emit = lines.append

    emit(f"def _unify(self, other, state):")
    emit(f"    if other.__class__ is not {cls_name}:")
    emit(f"        return None")
    for slot, is_term in zip(slots, term):
        if is_term:
            emit(f"    a = self.{slot}; b = other.{slot}")
            emit(f"    if a is not b:")
            emit(f"        state = unify_terms(a, b, state)")
            emit(f"        if state is None:")
            emit(f"            return None")
        else:
            emit(f"    if self.{slot} != other.{slot}:")
            emit(f"        return None")
    emit(f"    return state")

    emit(f"def _walk(self, state):")
    if any(term):
        parts = [
            f"walk(state, self.{s})" if t else f"self.{s}" for s, t in zip(slots, term)
        ]
        emit(f"    return {cls_name}({', '.join(parts)})")
    else:
        emit(f"    return self")

    emit(f"def _occurs(self, var, state):")
    checks = [f"occurs_check(var, self.{s}, state)" for s, t in zip(slots, term) if t]
    emit(f"    return {' or '.join(checks) if checks else 'False'}")

    emit(f"def _map(self, fn):")
    if any(term):
        parts = [f"fn(self.{s})" if t else f"self.{s}" for s, t in zip(slots, term)]
        emit(f"    return {cls_name}({', '.join(parts)})")
    else:
        emit(f"    return self")

    emit(f"def _extract(self):")
    names = []
    for i, (slot, is_term) in enumerate(zip(slots, term)):
        if is_term:
            emit(f"    x{i} = extract(self.{slot})")
            emit(f"    if x{i} is None:")
            emit(f"        return None")
        else:
            emit(f"    x{i} = self.{slot}")
        names.append(f"x{i}")
    tup = "(" + "".join(n + ", " for n in names) + ")"
    emit(f"    return build_plain({ctor.name!r}, {tup})")
    return "\n".join(lines)


def _make_class(base: type, ctor: ConstructorDescriptor) -> type:
    slots = _slot_names(ctor)
    cls_name = logic_name(ctor.name)
    params = ", ".join(slots)
    assigns = "\n".join(f"    self.{s} = {s}" for s in slots) or "    pass"
    eqs = " and ".join(f"self.{s} == other.{s}" for s in slots) or "True"
    src = (
        f"def __init__(self{', ' if slots else ''}{params}):\n{assigns}\n"
        f"def __eq__(self, other):\n"
        f"    return other.__class__ is self.__class__ and {eqs}\n"
        f"def __hash__(self):\n"
        f"    return hash(({ctor.name!r}, {''.join(f'self.{s}, ' for s in slots)}))\n"
    )
    namespace: dict[str, Any] = {}
    exec(src, {}, namespace)

    def __repr__(self) -> str:
        inner = ", ".join(repr(getattr(self, s)) for s in slots)
        return f"{cls_name}({inner})" if slots else cls_name

    body = dict(namespace)
    body.update(
        __slots__=slots,
        __repr__=__repr__,
        tag=ctor.name,
        _fields=slots,
        _term_fields=tuple(isinstance(f.shape, TermField) for f in ctor.fields),
        __module__=base.__module__,
        __qualname__=cls_name,
    )
    return type(cls_name, (base,), body)


def _install_protocol(dt: DerivedType, codegen: bool) -> None:
    d = dt.descriptor
    for ctor in d.constructors:
        cls = dt.classes[ctor.name]
        if codegen:
            ns: dict[str, Any] = {
                cls.__name__: cls,
                "unify_terms": unify_terms,
                "walk": walk,
                "occurs_check": occurs_check,
                "extract": extract,
                "build_plain": dt.build_plain,
            }
            out: dict[str, Any] = {}
            exec(_class_source(cls.__name__, ctor, cls._fields), ns, out)
            for name, fn in out.items():
                setattr(cls, name, fn)
        else:
            cls._unify = lambda self, other, state, _d=dt: generic_unify(_d, self, other, state)
            cls._walk = lambda self, state, _d=dt: generic_walk(_d, state, self)
            cls._occurs = lambda self, var, state, _d=dt: generic_occurs_check(_d, var, self, state)
            cls._extract = lambda self, _d=dt: generic_extract(_d, self)
            cls._map = lambda self, fn: self.__class__(
                *(fn(getattr(self, s)) if t else getattr(self, s)
                  for s, t in zip(self._fields, self._term_fields))
            )

    def _inject(plain: Any, _dt: DerivedType = dt) -> LogicValue:
        return generic_inject(_dt, plain)

    plain_types = list(d.plain_types)
    plain_types += [c.plain for c in d.constructors if c.plain is not None]
    for pt in plain_types:
        register_injector(pt, _inject)
    dt.has_instance = True


def make_logic_type(d: TypeDescriptor) -> DerivedType:
    """Generate the logical classes and patterns, without protocol methods."""
    from .match import ExhaustivePattern, Pattern

    for ctor in d.constructors:
        for fd in ctor.fields:
            if not isinstance(fd.shape, (TermField, AtomicField)):
                raise DerivationError(
                    f"{d.name}.{ctor.name}: unsupported field shape {fd.shape!r}"
                )
    base = type(
        logic_name(d.name),
        (LogicValue,),
        {"__slots__": (), "__module__": __name__, "__qualname__": logic_name(d.name)},
    )
    dt = DerivedType(d, base)
    base.logic_type = dt
    for ctor in d.constructors:
        cls = _make_class(base, ctor)
        cls.logic_type = dt
        dt.classes[ctor.name] = cls
        cls.pattern = Pattern(dt, cls, ctor)
        cls.tagged = ExhaustivePattern(cls.pattern)
    _BY_PLAIN_NAME[d.name] = dt
    for c in d.constructors:
        if c.plain is not None:
            _BY_PLAIN_CLASS[c.plain] = dt
    for pt in d.plain_types:
        _BY_PLAIN_CLASS[pt] = dt
    return dt


def make_logical_instance(dt: DerivedType, codegen: bool = True) -> DerivedType:
    """Attach the protocol methods and register injection for ``dt``."""
    _install_protocol(dt, codegen)
    return dt


def derive_logic_type(d: TypeDescriptor, codegen: bool = True) -> DerivedType:
    """Logical type, protocol methods and patterns in one step."""
    return make_logical_instance(make_logic_type(d), codegen=codegen)


def make_logic_types(ds: Iterable[TypeDescriptor], codegen: bool = True) -> list[DerivedType]:
    """Derive a group of (possibly mutually recursive) types."""
    types = [make_logic_type(d) for d in ds]
    for dt in types:
        make_logical_instance(dt, codegen=codegen)
    return types


# -- dataclass front end ----------------------------------------------------------


def describe(name: str, constructors: Sequence[type], params: Sequence[str] = ()) -> TypeDescriptor:
    """Build a descriptor from one dataclass per constructor.

    Every dataclass field becomes a term field; annotations are kept as the
    field's declared type.
    """
    ctors = []
    for cls in constructors:
        if not (isinstance(cls, type) and dataclasses.is_dataclass(cls)):
            raise DerivationError(
                f"{name}: constructor {cls!r} must be a dataclass"
            )
        hints = _safe_hints(cls)
        fields = []
        for f in dataclasses.fields(cls):
            if not f.init:
                raise DerivationError(f"{name}.{cls.__name__}: field {f.name} is not an init field")
            if getattr(f, "kw_only", False) is True:
                raise DerivationError(f"{name}.{cls.__name__}: keyword-only field {f.name}")
            fields.append(FieldDescriptor(f.name, TermField(hints.get(f.name, f.type))))
        ctors.append(ConstructorDescriptor(cls.__name__, tuple(fields), plain=cls))
    return TypeDescriptor(name, tuple(ctors), tuple(params))


def _safe_hints(cls: type) -> dict:
    try:
        return typing.get_type_hints(cls)
    except Exception:
        return {}


def make_logic(name: str, *constructors: type, params: Sequence[str] = (), codegen: bool = True) -> DerivedType:
    """Derive the maximal logical counterpart of a dataclass-based sum type."""
    return derive_logic_type(describe(name, constructors, params), codegen=codegen)
