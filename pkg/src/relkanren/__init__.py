"""A statically typed miniKanren dialect for Python.

Logical types are derived from algebraic data types, relations are built
from goals, and matching on constructors can be checked for exhaustiveness
before anything runs.
"""

from .core import (
    ANY,
    BOOL,
    INT,
    STR,
    Atomic,
    LogicType,
    LogicValue,
    State,
    Var,
    extract,
    inject,
    reify,
    unify_terms,
    walk,
)
from .goal import (
    bind,
    conde,
    conj,
    conj_many,
    delay,
    disj,
    disj_many,
    eq,
    failo,
    fresh,
    fresh_vars,
    neq,
    relation,
    run,
    run_n,
    solve,
    successo,
)
from .logicgen import DerivationError, TypeDescriptor, derive_logic_type, make_logic
from .match import (
    DuplicateCaseError,
    ExhaustivenessError,
    MissingCasesError,
    enter_tagged,
    matche,
    matche_exhaustive,
    on,
    on_tagged,
)

__version__ = "0.1.0"
