"""Standard logical data types and relations."""

from .arith import (
    addero,
    divo,
    eq_lengtho,
    exp2o,
    expo,
    from_binary,
    full_addero,
    gt1o,
    leqo,
    lesso,
    logo,
    lt_lengtho,
    minuso,
    multo,
    num,
    pluso,
    poso,
    repeated_mulo,
    splito,
    to_binary,
)
from .lists import appendo, leaveso, lengtho
from .result import resulto
from .types import (
    NIL,
    Bit,
    Empty,
    Fail,
    Leaf,
    LogicCons,
    LogicEmpty,
    LogicFail,
    LogicLeaf,
    LogicList,
    LogicListType,
    LogicNil,
    LogicNode,
    LogicOk,
    LogicPair,
    LogicPairType,
    LogicResultType,
    LogicTreeType,
    Node,
    Ok,
    cons,
    is_ground,
    list_items,
    llist,
)
