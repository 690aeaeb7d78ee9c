"""Finite commutative semirings and the two gates that matter for
constraint algebras: the c-semiring law ``a + 1 = 1`` and absorption
``a * (a + b) = a``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from ..errors import MalformedInputError


@dataclass(frozen=True)
class Semiring:
    carrier: tuple[str, ...]
    plus: Mapping[tuple[str, str], str] = field(repr=False)
    times: Mapping[tuple[str, str], str] = field(repr=False)
    zero: str
    one: str
    name: str = ""

    def __post_init__(self):
        problem = semiring_law_failure(self)
        if problem:
            raise MalformedInputError(f"not a commutative semiring: {problem}")

    def add(self, a: str, b: str) -> str:
        return self.plus[a, b]

    def mul(self, a: str, b: str) -> str:
        return self.times[a, b]

    def sum(self, values) -> str:
        out = self.zero
        for v in values:
            out = self.plus[out, v]
        return out


def semiring_law_failure(s: Semiring) -> str | None:
    S = s.carrier
    if s.zero not in S or s.one not in S:
        return "zero/one not in carrier"
    for a in S:
        for b in S:
            if (a, b) not in s.plus or (a, b) not in s.times:
                return f"tables not total at ({a}, {b})"
    for name, op in (("plus", s.plus), ("times", s.times)):
        for a in S:
            for b in S:
                if op[a, b] not in S:
                    return f"{name}({a}, {b}) outside carrier"
                if op[a, b] != op[b, a]:
                    return f"{name} not commutative at ({a}, {b})"
                for c in S:
                    if op[op[a, b], c] != op[a, op[b, c]]:
                        return f"{name} not associative at ({a}, {b}, {c})"
    for a in S:
        if s.plus[s.zero, a] != a:
            return f"zero is not the additive unit at {a}"
        if s.times[s.zero, a] != s.zero:
            return f"zero is not absorbing at {a}"
        if s.times[s.one, a] != a:
            return f"one is not the multiplicative unit at {a}"
        for b in S:
            for c in S:
                if s.times[a, s.plus[b, c]] != s.plus[s.times[a, b], s.times[a, c]]:
                    return f"times does not distribute over plus at ({a}, {b}, {c})"
    return None


@dataclass(frozen=True)
class Gates:
    is_c_semiring: bool
    has_absorption: bool
    times_idempotent: bool

    @property
    def consistent(self) -> bool:
        """Absorption forces a c-semiring with idempotent times."""
        return not self.has_absorption or (self.is_c_semiring and self.times_idempotent)


def semiring_gates(s: Semiring) -> Gates:
    S = s.carrier
    return Gates(
        is_c_semiring=all(s.plus[a, s.one] == s.one for a in S),
        has_absorption=all(s.times[a, s.plus[a, b]] == a for a in S for b in S),
        times_idempotent=all(s.times[a, a] == a for a in S),
    )


def _from_ops(values, plus, times, zero, one, name) -> Semiring:
    vals = [str(v) for v in values]
    lookup = dict(zip(vals, values))
    pt = {(a, b): str(plus(lookup[a], lookup[b])) for a in vals for b in vals}
    tt = {(a, b): str(times(lookup[a], lookup[b])) for a in vals for b in vals}
    return Semiring(tuple(vals), pt, tt, str(zero), str(one), name)


def boolean_semiring() -> Semiring:
    return _from_ops([0, 1], lambda a, b: a | b, lambda a, b: a & b, 0, 1, "boolean")


def fuzzy_chain() -> Semiring:
    """``{0, 1/2, 1}`` with max and min."""
    from fractions import Fraction

    vals = [Fraction(0), Fraction(1, 2), Fraction(1)]
    return _from_ops(vals, max, min, Fraction(0), Fraction(1), "fuzzy")


def truncated_min_plus() -> Semiring:
    """``{0, 1, inf}`` with plus = min and times = addition saturating at inf."""
    inf = float("inf")

    def sat(a, b):
        t = a + b
        return t if t <= 1 else inf

    names = {0: "0", 1: "1", inf: "inf"}
    vals = [0, 1, inf]
    pt = {(names[a], names[b]): names[min(a, b)] for a in vals for b in vals}
    tt = {(names[a], names[b]): names[sat(a, b)] for a in vals for b in vals}
    return Semiring(("0", "1", "inf"), pt, tt, "inf", "0", "truncated-min-plus")


BUNDLED = {
    "boolean": boolean_semiring,
    "fuzzy": fuzzy_chain,
    "truncated-min-plus": truncated_min_plus,
}


def enumerate_semirings(size: int) -> Iterator[Semiring]:
    """Every commutative semiring on ``{"0", ..., str(size-1)}`` with zero
    ``"0"`` and one ``"1"`` (labelled, so isomorphic copies repeat)."""
    if size < 2:
        return
    S = [str(i) for i in range(size)]
    rest = S[1:]
    pair_slots = list(itertools.combinations_with_replacement(rest, 2))

    def monoids(unit, absorbing=None):
        free = [(a, b) for a, b in pair_slots if a != unit and b != unit and absorbing not in (a, b)]
        base = {}
        for a in S:
            base[unit, a] = base[a, unit] = a
            if absorbing is not None:
                base[absorbing, a] = base[a, absorbing] = absorbing
        for choice in itertools.product(S, repeat=len(free)):
            t = dict(base)
            for (a, b), v in zip(free, choice):
                t[a, b] = t[b, a] = v
            if all(t[t[a, b], c] == t[a, t[b, c]] for a in S for b in S for c in S):
                yield t

    plus_tables = list(monoids("0"))
    times_tables = list(monoids("1", absorbing="0"))
    k = 0
    for pt in plus_tables:
        for tt in times_tables:
            if all(tt[a, pt[b, c]] == pt[tt[a, b], tt[a, c]] for a in S for b in S for c in S):
                yield Semiring(tuple(S), pt, tt, "0", "1", f"gen{size}-{k}")
                k += 1
