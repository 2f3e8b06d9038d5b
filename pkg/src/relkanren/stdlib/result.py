"""Exhaustive matching over results."""

from __future__ import annotations

from typing import Any

from ..goal import Goal, successo
from ..match import matche_exhaustive
from .types import LogicFail, LogicOk


def resulto(r: Any) -> Goal:
    """Succeeds once for any result, whichever constructor it uses."""
    return (
        matche_exhaustive()
        .on(LogicOk.tagged, lambda _: successo())
        .on(LogicFail.tagged, lambda _: successo())
        .enter()
    )(r)
