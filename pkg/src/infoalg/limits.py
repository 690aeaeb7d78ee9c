"""Enumeration caps.

Exhaustive checks enumerate subsets of a carrier, so their cost is
``2**n``.  The caps live in a context variable so that they can be
overridden for one block of code without threading a parameter through
every call::

    with limits.override(max_subsets=2**16):
        classify(big_algebra)
"""

from __future__ import annotations

import contextlib
import contextvars
import os
from dataclasses import dataclass, replace
from typing import Iterator

from .errors import ResourceLimitError

ENV_MAX_SUBSETS = "INFOALG_MAX_SUBSETS"
ENV_MAX_CARRIER = "INFOALG_MAX_CARRIER"


@dataclass(frozen=True)
class Limits:
    max_subsets: int = 2**12
    max_carrier: int = 4096

    @property
    def max_enum_elements(self) -> int:
        """Largest carrier whose full powerset fits in ``max_subsets``."""
        return max(self.max_subsets.bit_length() - 1, 0)

    @classmethod
    def from_env(cls, environ=None) -> "Limits":
        environ = os.environ if environ is None else environ
        base = cls()
        kwargs = {}
        for key, field in ((ENV_MAX_SUBSETS, "max_subsets"), (ENV_MAX_CARRIER, "max_carrier")):
            if key in environ:
                try:
                    kwargs[field] = int(environ[key])
                except ValueError:
                    raise ValueError(f"{key} must be an integer, got {environ[key]!r}") from None
        return replace(base, **kwargs)


_current: contextvars.ContextVar[Limits] = contextvars.ContextVar("infoalg_limits", default=Limits())


def current() -> Limits:
    return _current.get()


@contextlib.contextmanager
def override(**changes) -> Iterator[Limits]:
    token = _current.set(replace(_current.get(), **changes))
    try:
        yield _current.get()
    finally:
        _current.reset(token)


@contextlib.contextmanager
def using(value: Limits) -> Iterator[Limits]:
    token = _current.set(value)
    try:
        yield value
    finally:
        _current.reset(token)


def require_enumerable(n: int, what: str = "carrier") -> None:
    """Raise unless all subsets of an ``n``-element set may be enumerated."""
    cap = current().max_enum_elements
    if n > cap:
        raise ResourceLimitError(
            f"{what} has {n} elements; subset enumeration is capped at {cap} "
            f"(max_subsets={current().max_subsets})"
        )


def require_carrier(n: int, what: str = "carrier") -> None:
    cap = current().max_carrier
    if n > cap:
        raise ResourceLimitError(f"{what} would have {n} elements; cap is {cap}")
