"""Powerset algebras with union as combination.

The finite table is the desk-scale version of the example over an
infinite set.  At finite scale way-below coincides with the order, so a
non-closed candidate basis can never have directed approximant sets;
:class:`CountablePowerset` reproduces the infinite behaviour on
finite/cofinite subsets of the naturals, where an infinite ``Y`` is never
way-below anything.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from ..domain_free import Basis, DomainFreeAlgebra
from ..errors import ContractError, MalformedInputError
from ..order import FiniteLattice, chain, set_name
from .soft_sets import FiniteOrCofinite


def powerset_algebra(items: Sequence[str], lattice: FiniteLattice | None = None) -> DomainFreeAlgebra:
    """Subsets of ``items`` under union; every focusing is the identity.

    The default domain lattice is the single point ``"1"``.
    """
    items = sorted(items)
    if len(set(items)) != len(items):
        raise MalformedInputError("powerset items must be unique")
    lat = chain(1, ["1"]) if lattice is None else lattice
    subsets = [frozenset(c) for k in range(len(items) + 1) for c in itertools.combinations(items, k)]
    return DomainFreeAlgebra.from_functions(
        subsets, lat, frozenset.union, lambda a, x: a, frozenset(), set_name, f"powerset(|X|={len(items)})"
    )


def upsilon_star(items: Sequence[str], y: Iterable[str]) -> Basis:
    """The empty set, all singletons, and ``Y``.

    Not closed under combination; ``witness`` is ``({x}, Y)`` for the first
    ``x`` outside ``Y``.
    """
    items = sorted(items)
    y = frozenset(y)
    if not y < set(items):
        raise ContractError("Y must be a proper subset of X")
    if len(y) < 2:
        raise ContractError("Y needs at least two elements to stand apart from the singletons")
    members = [set_name(())] + [set_name([i]) for i in items] + [set_name(y)]
    x = next(i for i in items if i not in y)
    return Basis(tuple(dict.fromkeys(members)), False, (set_name([x]), set_name(y)), "upsilon*")


def singleton_basis(items: Sequence[str]) -> Basis:
    return Basis(tuple([set_name(())] + [set_name([i]) for i in sorted(items)]), False, None, "singletons")


class CountablePowerset:
    """Subsets of the naturals restricted to finite and cofinite sets.

    ``B << A`` iff ``B`` is finite and contained in ``A``.  The candidate
    basis is every finite set plus the infinite proper subset
    ``Y = N - {0}``.
    """

    Y = FiniteOrCofinite.co([0])

    @staticmethod
    def way_below(b: FiniteOrCofinite, a: FiniteOrCofinite) -> bool:
        return (not b.cofinite) and b <= a

    def in_upsilon(self, b: FiniteOrCofinite) -> bool:
        return (not b.cofinite) or b == self.Y

    def closure_witness(self) -> tuple[FiniteOrCofinite, FiniteOrCofinite]:
        x = FiniteOrCofinite.finite([0])
        return x, self.Y

    def witnesses(self, a: FiniteOrCofinite, window: int) -> list[FiniteOrCofinite]:
        """Members of the candidate basis way-below ``a``, drawn from a window.

        The finite part is enumerated over subsets of ``range(window)``;
        ``Y`` is tested by the closed-form relation.
        """
        pts = [n for n in range(window) if n in a]
        out = [FiniteOrCofinite.finite(c) for k in range(len(pts) + 1) for c in itertools.combinations(pts, k)]
        if self.way_below(self.Y, a):
            out.append(self.Y)
        return out

    def approximants_directed(self, a: FiniteOrCofinite, window: int = 6) -> bool:
        ws = self.witnesses(a, window)
        for b, c in itertools.combinations(ws, 2):
            u = b | c
            if not (self.in_upsilon(u) and self.way_below(u, a)):
                return False
        return True

    def approximants_sup_is(self, a: FiniteOrCofinite, window: int = 6) -> bool:
        """Every point of ``a`` below the window is covered by a finite
        approximant, and nothing outside ``a`` is."""
        ws = self.witnesses(a, window)
        covered = set()
        for b in ws:
            covered |= {n for n in range(window) if n in b}
        return covered == {n for n in range(window) if n in a}
