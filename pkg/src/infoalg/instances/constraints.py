"""Semiring-valued constraint systems.

A constraint is a pair ``<def, con>``: ``con`` is a set of variables kept
in the global variable order (lexicographic on names) and ``def`` maps
each tuple over ``con`` to a semiring value.  Combination multiplies
pointwise on the joined variable set; projection sums out variables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from .. import limits
from ..errors import ContractError, MalformedInputError
from ..labeled import LabeledAlgebra
from ..order import powerset_lattice, set_name
from .semiring import Semiring


@dataclass(frozen=True)
class Constraint:
    con: tuple[str, ...]
    values: tuple[tuple[tuple[str, ...], str], ...]

    def __post_init__(self):
        if list(self.con) != sorted(set(self.con)):
            raise MalformedInputError("constraint variables must be unique and sorted")

    @classmethod
    def make(cls, con: Sequence[str], defn: Mapping[tuple[str, ...], str], domain: Sequence[str]) -> "Constraint":
        con = tuple(sorted(con))
        rows = []
        for t in itertools.product(domain, repeat=len(con)):
            if t not in defn:
                raise MalformedInputError(f"constraint definition is not total: missing {t}")
            rows.append((t, defn[t]))
        return cls(con, tuple(rows))

    @property
    def defn(self) -> dict[tuple[str, ...], str]:
        return dict(self.values)

    def __call__(self, t: tuple[str, ...]) -> str:
        return self.defn[t]

    def ident(self) -> str:
        return set_name(self.con) + ":" + "(" + ",".join(v for _, v in self.values) + ")"


def tuple_project(x: tuple[str, ...], con: Sequence[str], con1: Sequence[str]) -> tuple[str, ...]:
    """Select the components of ``x`` (laid out over ``con``) that belong to ``con1``."""
    pos = {v: i for i, v in enumerate(con)}
    missing = [v for v in con1 if v not in pos]
    if missing:
        raise ContractError(f"variables {missing} are not in {list(con)}")
    return tuple(x[pos[v]] for v in sorted(con1))


def constraint_combine(c1: Constraint, c2: Constraint, s: Semiring, domain: Sequence[str]) -> Constraint:
    con = tuple(sorted(set(c1.con) | set(c2.con)))
    d1, d2 = c1.defn, c2.defn
    rows = {}
    for t in itertools.product(domain, repeat=len(con)):
        a = d1.get(tuple_project(t, con, c1.con))
        b = d2.get(tuple_project(t, con, c2.con))
        if a is None or b is None:
            raise MalformedInputError("constraints are defined over different variable domains")
        rows[t] = s.mul(a, b)
    return Constraint.make(con, rows, domain)


def constraint_project(c: Constraint, keep: Sequence[str], s: Semiring, domain: Sequence[str]) -> Constraint:
    keep = tuple(sorted(keep))
    if not set(keep) <= set(c.con):
        raise ContractError(f"cannot project {list(c.con)} onto {list(keep)}")
    sums: dict[tuple[str, ...], str] = {t: s.zero for t in itertools.product(domain, repeat=len(keep))}
    for z, v in c.values:
        k = tuple_project(z, c.con, keep)
        sums[k] = s.add(sums[k], v)
    return Constraint.make(keep, sums, domain)


def constraint_algebra(s: Semiring, variables: Sequence[str], domain: Sequence[str]) -> LabeledAlgebra:
    """All constraints over ``variables`` with values in ``s``, as a labeled table."""
    if len(domain) < 2:
        raise MalformedInputError("the variable domain needs at least two values")
    variables = sorted(variables)
    domain = list(domain)
    lat, subsets = powerset_lattice(variables)
    size = sum(len(s.carrier) ** (len(domain) ** len(sub)) for sub in subsets.values())
    limits.require_carrier(size, "constraint carrier")
    elems: dict[str, Constraint] = {}
    for lname, sub in subsets.items():
        con = tuple(sorted(sub))
        tuples = list(itertools.product(domain, repeat=len(con)))
        for vals in itertools.product(s.carrier, repeat=len(tuples)):
            c = Constraint(con, tuple(zip(tuples, vals)))
            elems[c.ident()] = c
    names = list(elems)
    label = {k: set_name(c.con) for k, c in elems.items()}
    ct = {}
    for k1, c1 in elems.items():
        for k2, c2 in elems.items():
            ct[k1, k2] = constraint_combine(c1, c2, s, domain).ident()
    mt = {}
    for k, c in elems.items():
        for lname, sub in subsets.items():
            if sub <= set(c.con):
                mt[k, lname] = constraint_project(c, tuple(sub), s, domain).ident()
    neutrals = {}
    for lname, sub in subsets.items():
        con = tuple(sorted(sub))
        ones = {t: s.one for t in itertools.product(domain, repeat=len(con))}
        neutrals[lname] = Constraint.make(con, ones, domain).ident()
    return LabeledAlgebra(tuple(names), lat, label, ct, mt, neutrals, f"constraints({s.name},|V|={len(variables)},|D|={len(domain)})")
