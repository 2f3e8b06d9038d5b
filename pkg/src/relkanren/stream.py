"""Lazy search streams with interleaving.

A stream is one of

* ``None`` -- done;
* ``(head, tail)`` -- a mature step; ``tail`` is a zero-argument callable
  producing the rest of the stream on demand;
* a zero-argument callable -- an immature step (``Await``); calling it
  performs one deferred unit of work and returns the next stream.

Tuples and closures keep the per-step overhead low; :func:`done`,
:func:`yield_` and :func:`await_` build the three shapes explicitly.
"""

from __future__ import annotations

from typing import Any, Callable, Iterable, Iterator, Optional, Union

Thunk = Callable[[], "Stream"]
Stream = Union[None, tuple, Thunk]


def _nothing() -> None:
    return None


def done() -> Stream:
    return None


def yield_(head: Any, rest: Stream = None) -> Stream:
    """A mature step followed by the (already built) stream ``rest``."""
    return (head, lambda: rest)


def await_(rest: Thunk) -> Stream:
    return rest


def singleton(head: Any) -> Stream:
    return (head, _nothing)


def _mplus(s1: Stream, s2: Thunk) -> Stream:
    if s1 is None:
        return s2()
    if type(s1) is tuple:
        head, tail = s1
        return (head, lambda: _mplus(s2(), tail))
    return lambda: _mplus(s2(), s1)


def interleave(s1: Stream, s2: Stream) -> Stream:
    """Fair merge: the arguments swap places after every step."""
    return _mplus(s1, lambda: s2)


def bind_stream(s: Stream, f: Callable[[Any], Stream]) -> Stream:
    # A last element needs no merge with the (empty) rest.
    while True:
        if s is None:
            return None
        if type(s) is tuple:
            head, tail = s
            out = f(head)
            if tail is _nothing:
                return out
            if out is None:
                s = tail()
                continue
            return _mplus(out, lambda: bind_stream(tail(), f))
        return lambda: bind_stream(s(), f)


def bind_goal(s: Stream, g: Callable[[Any], Stream]) -> Stream:
    """``bind_stream`` specialised to conjunction: ``g`` takes the state of
    each ``(state, result)`` element."""
    while True:
        if s is None:
            return None
        if type(s) is tuple:
            head, tail = s
            out = g(head[0])
            if tail is _nothing:
                return out
            if out is None:
                s = tail()
                continue
            return _mplus(out, lambda: bind_goal(tail(), g))
        return lambda: bind_goal(s(), g)


def map_stream(s: Stream, f: Callable[[Any], Any]) -> Stream:
    if s is None:
        return None
    if type(s) is tuple:
        head, tail = s
        return (f(head), lambda: map_stream(tail(), f))
    return lambda: map_stream(s(), f)


class StepBudgetExceeded(RuntimeError):
    """The stream needed more steps than its budget allowed."""


def iterate(s: Stream, max_steps: Optional[int] = None) -> Iterator[Any]:
    """Force the stream lazily, yielding its elements in order.

    With ``max_steps`` set, raises :class:`StepBudgetExceeded` once that
    many steps have been forced since the last element (or the start)
    without the stream producing another one or finishing.
    """
    if max_steps is None:
        while s is not None:
            if type(s) is tuple:
                head, tail = s
                yield head
                s = tail()
            else:
                s = s()
        return
    steps = 0
    while s is not None:
        steps += 1
        if steps > max_steps:
            raise StepBudgetExceeded(f"no new result within {max_steps} steps")
        if type(s) is tuple:
            steps = 0
            head, tail = s
            yield head
            s = tail()
        else:
            s = s()


def take_n(n: int, s: Stream) -> list:
    out: list = []
    if n <= 0:
        return out
    while s is not None:
        if type(s) is tuple:
            head, tail = s
            out.append(head)
            if len(out) >= n:
                break
            s = tail()
        else:
            s = s()
    return out


def from_iterable(items: Iterable[Any]) -> Stream:
    it = iter(items)

    def go() -> Stream:
        for item in it:
            return (item, go)
        return None

    return go()


def delayed(items: Iterable[Any], awaits: int) -> Stream:
    """``items`` preceded by ``awaits`` immature steps.  Handy for tests."""
    s: Stream = from_iterable(items)
    for _ in range(awaits):
        s = (lambda inner: lambda: inner)(s)
    return s


def repeat(item: Any) -> Stream:
    """Infinite productive stream of ``item``."""

    def go() -> Stream:
        return (item, go)

    return go()


def kind(s: Stream) -> str:
    if s is None:
        return "done"
    return "yield" if type(s) is tuple else "await"
