"""A tiny Scheme, evaluated relationally and deterministically."""

from .evaldet import DEFAULT_FUEL, eval_det
from .interp import evalo, lookupo, mirroro, not_in_envo, proper_listo, quine_goal, thrine_goal, twine_goal
from .sexpr import (
    LogicSCons,
    LogicSExprType,
    LogicSNil,
    LogicSym,
    LogicValType,
    LogicVClosure,
    LogicVData,
    ParseError,
    SCons,
    SNil,
    Sym,
    VClosure,
    VData,
    parse_sexpr,
    print_sexpr,
    print_value,
    show_term,
    slist,
)
from .synth import UnverifiedProgram, ground_terms, quineso, thrineso, twineso, verify_cycle
