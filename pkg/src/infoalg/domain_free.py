"""Domain-free information algebras over finite carriers.

A table-mode algebra is a finite carrier ``Phi`` with a total combination
table and a total focusing table ``Phi x D -> Phi``; ``D`` is a finite
lattice with a top element.  The induced order is ``psi <= phi`` iff
``psi (x) phi == phi``.

Instances whose interesting behaviour only shows up on an infinite
carrier (the unit interval) implement :class:`AnalyticAlgebra` instead,
and the classifiers below dispatch to their closed-form hooks.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

from . import limits
from .errors import ContractError, MalformedInputError
from .order import (
    FiniteLattice,
    Poset,
    is_algebraic_lattice,
    is_complete_lattice,
    is_continuous_lattice,
)
from .reports import AxiomReport, AxiomResult, ContinuityReport


@dataclass(frozen=True, eq=True)
class DomainFreeAlgebra:
    carrier: tuple[str, ...]
    lattice: FiniteLattice
    combine_table: Mapping[tuple[str, str], str] = field(repr=False)
    focus_table: Mapping[tuple[str, str], str] = field(repr=False)
    neutral: str
    name: str = field(default="", compare=False)

    def __post_init__(self):
        carrier = tuple(self.carrier)
        object.__setattr__(self, "carrier", carrier)
        known = set(carrier)
        if len(known) != len(carrier):
            raise MalformedInputError("carrier identifiers must be unique")
        if self.neutral not in known:
            raise MalformedInputError(f"neutral element {self.neutral!r} is not in the carrier")
        limits.require_carrier(len(carrier))
        for a in carrier:
            for b in carrier:
                c = self.combine_table.get((a, b))
                if c is None:
                    raise MalformedInputError(f"combine table has no entry for ({a!r}, {b!r})")
                if c not in known:
                    raise MalformedInputError(f"combine({a!r}, {b!r}) = {c!r} is not in the carrier")
            for x in self.lattice.elements:
                c = self.focus_table.get((a, x))
                if c is None:
                    raise MalformedInputError(f"focus table has no entry for ({a!r}, {x!r})")
                if c not in known:
                    raise MalformedInputError(f"focus({a!r}, {x!r}) = {c!r} is not in the carrier")

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def from_functions(
        cls,
        values: Sequence,
        lattice: FiniteLattice,
        combine: Callable,
        focus: Callable,
        neutral,
        ident: Callable[[object], str] = str,
        name: str = "",
    ) -> "DomainFreeAlgebra":
        """Tabulate native Python operations over ``values``.

        ``focus(value, x)`` receives lattice element names.  ``ident``
        turns a value into its carrier identifier.
        """
        ids = [ident(v) for v in values]
        ct = {(ident(a), ident(b)): ident(combine(a, b)) for a in values for b in values}
        ft = {(ident(a), x): ident(focus(a, x)) for a in values for x in lattice.elements}
        return cls(tuple(ids), lattice, ct, ft, ident(neutral), name)

    def combine(self, a: str, b: str) -> str:
        try:
            return self.combine_table[a, b]
        except KeyError:
            raise MalformedInputError(f"unknown element in combine({a!r}, {b!r})") from None

    def focus(self, a: str, x: str) -> str:
        try:
            return self.focus_table[a, x]
        except KeyError:
            raise MalformedInputError(f"unknown element in focus({a!r}, {x!r})") from None

    def combine_all(self, items: Iterable[str]) -> str:
        out = self.neutral
        for a in items:
            out = self.combine(out, a)
        return out

    def fixed_points(self, x: str) -> tuple[str, ...]:
        return tuple(a for a in self.carrier if self.focus(a, x) == a)

    @cached_property
    def order(self) -> Poset:
        return induced_order(self)


class AnalyticAlgebra(abc.ABC):
    """Closed-form hooks for an algebra with an infinite carrier.

    Checks run on ``sample_points()`` using the instance's exact
    way-below relation and supremum formulas; ``declared_modes`` says
    which checks are closed form and which are sampled.
    """

    lattice: FiniteLattice
    name: str

    @abc.abstractmethod
    def sample_points(self) -> Sequence: ...

    @abc.abstractmethod
    def classify(self) -> ContinuityReport: ...

    @abc.abstractmethod
    def finite_elements(self) -> tuple[str, ...]: ...

    @abc.abstractmethod
    def carrier_basis_report(self) -> "BasisReport": ...

    @abc.abstractmethod
    def theorem6(self) -> bool: ...

    @abc.abstractmethod
    def declared_modes(self) -> dict[str, str]: ...

    def axioms(self) -> AxiomReport:
        raise ContractError(f"{self.name} has no table; run axioms on its sampled table")


# --- axioms ---------------------------------------------------------------


def _first(pred_iter, name: str, detail: str) -> AxiomResult:
    for cx in pred_iter:
        return AxiomResult(name, False, tuple(cx), detail)
    return AxiomResult(name, True)


def check_df_axioms(a: DomainFreeAlgebra) -> AxiomReport:
    """Evaluate the five domain-free axioms exhaustively.

    Each failed axiom carries the first counterexample in carrier order.
    """
    if isinstance(a, AnalyticAlgebra):
        return a.axioms()
    phi, dom = a.carrier, a.lattice.elements
    c, f, meet = a.combine, a.focus, a.lattice.meet

    def semigroup():
        for x in phi:
            for y in phi:
                if c(x, y) != c(y, x):
                    yield ("commutativity", x, y)
        for x in phi:
            for y in phi:
                xy = c(x, y)
                for z in phi:
                    if c(xy, z) != c(x, c(y, z)):
                        yield ("associativity", x, y, z)
        for x in phi:
            if c(a.neutral, x) != x or c(x, a.neutral) != x:
                yield ("neutral", a.neutral, x)

    sg = next(iter(semigroup()), None)
    results = [
        AxiomResult("semigroup", True)
        if sg is None
        else AxiomResult("semigroup", False, tuple(sg[1:]), f"{sg[0]} fails")
    ]
    results.append(
        _first(
            ((p, y, x) for p in phi for x in dom for y in dom if f(f(p, y), x) != f(p, meet(x, y))),
            "transitivity",
            "(psi=>y)=>x != psi=>(x meet y) for (psi, y, x)",
        )
    )
    results.append(
        _first(
            ((p, q, x) for p in phi for q in phi for x in dom if f(c(f(p, x), q), x) != c(f(p, x), f(q, x))),
            "combination",
            "(phi=>x (x) psi)=>x != phi=>x (x) psi=>x for (phi, psi, x)",
        )
    )
    results.append(
        _first(((p,) for p in phi if all(f(p, x) != p for x in dom)), "support", "no domain supports psi")
    )
    results.append(
        _first(
            ((p, x) for p in phi for x in dom if c(p, f(p, x)) != p),
            "idempotency",
            "psi (x) psi=>x != psi for (psi, x)",
        )
    )
    return AxiomReport(tuple(results))


def induced_order(a: DomainFreeAlgebra) -> Poset:
    """``psi <= phi`` iff ``psi (x) phi == phi``.

    Raises :class:`MalformedInputError` when the relation is not a partial
    order, which only happens if the semigroup or idempotency axioms fail.
    """
    return Poset(a.carrier, lambda p, q: a.combine(p, q) == q)


def lemma2_check(a: DomainFreeAlgebra) -> bool:
    """Focusing is deflationary and monotone, combination is the binary sup."""
    o = a.order
    phi, dom = a.carrier, a.lattice.elements
    for p in phi:
        for x in dom:
            if not o.leq(a.focus(p, x), p):
                return False
    for p in phi:
        for q in phi:
            if o.lub((p, q)) != a.combine(p, q):
                return False
            if o.leq(p, q) and any(not o.leq(a.focus(p, x), a.focus(q, x)) for x in dom):
                return False
    for x in dom:
        for y in dom:
            if a.lattice.leq(x, y) and any(not o.leq(a.focus(p, x), a.focus(p, y)) for p in phi):
                return False
    return True


def finite_elements(a) -> tuple[str, ...]:
    """The compact elements ``{phi : phi << phi}``."""
    if isinstance(a, AnalyticAlgebra):
        return a.finite_elements()
    o = a.order
    return tuple(p for p in a.carrier if o.way_below(p, p))


# --- bases ----------------------------------------------------------------


@dataclass(frozen=True)
class Basis:
    """A candidate basis.

    ``closed_under_combination`` records a verified closure result;
    ``witness`` optionally holds a pair whose combination escapes the set.
    """

    members: tuple[str, ...]
    closed_under_combination: bool = False
    witness: tuple[str, str] | None = None
    name: str = ""

    @classmethod
    def verified(cls, a: DomainFreeAlgebra, members: Iterable[str], name: str = "") -> "Basis":
        ordered = _in_carrier_order(a, members)
        esc = _closure_escape(a, ordered)
        return cls(ordered, esc is None, esc, name)

    @classmethod
    def carrier(cls, a: DomainFreeAlgebra) -> "Basis":
        return cls(tuple(a.carrier), True, None, "carrier")


def _in_carrier_order(a: DomainFreeAlgebra, members: Iterable[str]) -> tuple[str, ...]:
    s = set(members)
    unknown = s - set(a.carrier)
    if unknown:
        raise MalformedInputError(f"basis members not in the carrier: {sorted(unknown)}")
    return tuple(p for p in a.carrier if p in s)


def _closure_escape(a: DomainFreeAlgebra, members: Sequence[str]) -> tuple[str, str] | None:
    s = set(members)
    for p in members:
        for q in members:
            if a.combine(p, q) not in s:
                return (p, q)
    return None


@dataclass(frozen=True)
class BasisReport:
    contains_neutral: bool
    closed: bool
    convergency: bool
    density: bool
    strong_density: bool
    compactness: bool
    failures: tuple[tuple[str, tuple[str, ...]], ...] = ()

    @property
    def well_formed(self) -> bool:
        return self.contains_neutral and self.closed

    @property
    def continuous(self) -> bool:
        return self.well_formed and self.convergency and self.density

    @property
    def s_continuous(self) -> bool:
        return self.well_formed and self.convergency and self.strong_density

    @property
    def compact(self) -> bool:
        return self.continuous and self.compactness

    @property
    def s_compact(self) -> bool:
        return self.s_continuous and self.compactness

    def to_continuity_report(self, finite: tuple[str, ...] = (), mode: str = "table") -> ContinuityReport:
        return ContinuityReport(
            self.continuous, self.s_continuous, self.compact, self.s_compact, finite, self.failures, mode=mode
        )

    def to_dict(self) -> dict:
        return {
            "contains_neutral": self.contains_neutral,
            "closed": self.closed,
            "convergency": self.convergency,
            "density": self.density,
            "strong_density": self.strong_density,
            "compactness": self.compactness,
            "certifies": {
                "continuous": self.continuous,
                "s_continuous": self.s_continuous,
                "compact": self.compact,
                "s_compact": self.s_compact,
            },
            "failures": [[p, list(cx)] for p, cx in self.failures],
        }


def check_basis(a, basis: Basis) -> BasisReport:
    """Evaluate convergency, density, strong density and compactness for ``basis``.

    Density suprema over an empty witness set evaluate to the neutral
    element (the bottom of the induced order).
    """
    if isinstance(a, AnalyticAlgebra):
        if basis.name != "carrier":
            raise ContractError("analytic instances only support the whole carrier as basis")
        return a.carrier_basis_report()
    members = _in_carrier_order(a, basis.members)
    o = a.order
    limits.require_enumerable(len(a.carrier), "carrier for way-below")
    failures: list[tuple[str, tuple[str, ...]]] = []

    contains_neutral = a.neutral in members
    if not contains_neutral:
        failures.append(("contains_neutral", (a.neutral,)))
    esc = _closure_escape(a, members)
    if esc is not None:
        failures.append(("closed", esc))

    directed = o.directed_subsets(within=members)
    convergency = True
    for xs, sup in directed:
        if sup is None:
            convergency = False
            failures.append(("convergency", xs))
            break

    def _sup(ws):
        return o.lub(ws)

    density = True
    for p in a.carrier:
        ws = [g for g in members if o.way_below(g, p)]
        if _sup(ws) != p:
            density = False
            failures.append(("density", (p,)))
            break

    strong = True
    for p in a.carrier:
        for x in a.lattice.elements:
            ws = [g for g in members if a.focus(g, x) == g and o.way_below(g, p)]
            if _sup(ws) != a.focus(p, x):
                strong = False
                failures.append(("strong_density", (p, x)))
                break
        if not strong:
            break

    compactness = True
    for xs, sup in directed:
        if sup is None:
            continue
        for p in members:
            if o.leq(p, sup) and not any(o.leq(p, q) for q in xs):
                compactness = False
                failures.append(("compactness", (p,) + xs))
                break
        if not compactness:
            break

    return BasisReport(contains_neutral, esc is None, convergency, density, strong, compactness, tuple(failures))


def witness_sets(a: DomainFreeAlgebra, members: Iterable[str], p: str, x: str) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """``({g : g = g=>x << p}, {g : g << p})`` restricted to ``members``."""
    o = a.order
    members = _in_carrier_order(a, members)
    strong = tuple(g for g in members if a.focus(g, x) == g and o.way_below(g, p))
    plain = tuple(g for g in members if o.way_below(g, p))
    return strong, plain


def prop5_directedness(a: DomainFreeAlgebra, basis: Basis, p: str, x: str) -> bool:
    """True iff both approximant sets of ``p`` are directed (empty counts as vacuous).

    Use :func:`witness_sets` to see the sets themselves.
    """
    o = a.order
    strong, plain = witness_sets(a, basis.members, p, x)
    return all(not s or o.is_directed(s) for s in (strong, plain))


def _upsilon_conditions(a: DomainFreeAlgebra, members: Sequence[str]) -> tuple[bool, bool, bool]:
    o = a.order
    conv = all(sup is not None for _, sup in o.directed_subsets(within=members))
    d2 = True
    for p in a.carrier:
        ws = [g for g in members if o.way_below(g, p)]
        if not (ws and o.is_directed(ws) and o.lub(ws) == p):
            d2 = False
            break
    sd2 = True
    for p in a.carrier:
        for x in a.lattice.elements:
            ws = [g for g in members if a.focus(g, x) == g and o.way_below(g, p)]
            if not (ws and o.is_directed(ws) and o.lub(ws) == a.focus(p, x)):
                sd2 = False
                break
        if not sd2:
            break
    return conv, d2, sd2


def prop1_equivalence(a: DomainFreeAlgebra, upsilon: Basis) -> bool:
    """If ``upsilon`` satisfies convergency and D2 (resp. SD2), the whole
    carrier must certify continuity (resp. s-continuity)."""
    members = _in_carrier_order(a, upsilon.members)
    if a.neutral not in members:
        raise ContractError("upsilon must contain the neutral element")
    conv, d2, sd2 = _upsilon_conditions(a, members)
    full = check_basis(a, Basis.carrier(a))
    return (not (conv and d2) or full.continuous) and (not (conv and sd2) or full.s_continuous)


def upsilon_conditions(a: DomainFreeAlgebra, upsilon: Basis) -> dict[str, bool]:
    conv, d2, sd2 = _upsilon_conditions(a, _in_carrier_order(a, upsilon.members))
    return {"convergency": conv, "density_d2": d2, "strong_density_sd2": sd2}


# --- classification -------------------------------------------------------


def classify(a) -> ContinuityReport:
    """Lattice-theoretic classification.

    continuous / compact follow from whether the induced order is a
    continuous / algebraic lattice; the strong variants additionally test
    the focusing sup formulas.
    """
    if isinstance(a, AnalyticAlgebra):
        return a.classify()
    o = a.order
    limits.require_enumerable(len(a.carrier), "carrier for classification")
    failures: list[tuple[str, tuple[str, ...]]] = []
    complete = is_complete_lattice(o)
    if not complete:
        failures.append(("complete_lattice", ()))
    cont = is_continuous_lattice(o)
    if not cont:
        failures.append(("continuous_lattice", ()))
    alg = is_algebraic_lattice(o)
    if not alg:
        failures.append(("algebraic_lattice", ()))
    fin = finite_elements(a)

    s_cont = complete
    s_comp = complete
    for p in a.carrier:
        for x in a.lattice.elements:
            target = a.focus(p, x)
            if s_cont:
                ws = [g for g in a.carrier if a.focus(g, x) == g and o.way_below(g, p)]
                if o.lub(ws) != target:
                    s_cont = False
                    failures.append(("strong_density", (p, x)))
            if s_comp:
                ws = [g for g in fin if a.focus(g, x) == g and o.leq(g, p)]
                if o.lub(ws) != target:
                    s_comp = False
                    failures.append(("finite_strong_density", (p, x)))
    return ContinuityReport(cont, s_cont, alg, s_comp, fin, tuple(failures))


def classify_by_basis(a: DomainFreeAlgebra) -> ContinuityReport:
    """Classification through the basis definition, using the carrier as basis."""
    if isinstance(a, AnalyticAlgebra):
        rep = a.carrier_basis_report()
        return rep.to_continuity_report(a.finite_elements(), mode="analytic")
    rep = check_basis(a, Basis.carrier(a))
    return rep.to_continuity_report(finite_elements(a))


def focus_preserves_directed_sups(a: DomainFreeAlgebra) -> bool:
    o = a.order
    for xs, sup in o.directed_subsets():
        if sup is None:
            continue
        for x in a.lattice.elements:
            if a.focus(sup, x) != o.lub(a.focus(p, x) for p in xs):
                return False
    return True


def theorem6_check(a) -> bool:
    """Whether focusing preserves directed suprema.

    Only meaningful for continuous algebras; compare with
    ``classify(a).s_continuous``.
    """
    if isinstance(a, AnalyticAlgebra):
        return a.theorem6()
    if not classify(a).continuous:
        raise ContractError("theorem6_check requires a continuous algebra")
    return focus_preserves_directed_sups(a)


def lemma1_check(a: DomainFreeAlgebra, basis: Basis) -> bool:
    """For a basis certifying compactness: it equals the compact elements,
    and ``g << p`` iff ``g <= p`` for members ``g``."""
    rep = check_basis(a, basis)
    if not rep.compact:
        raise ContractError("lemma1_check requires a basis certifying compactness")
    o = a.order
    members = _in_carrier_order(a, basis.members)
    if set(members) != set(finite_elements(a)):
        return False
    return all(o.way_below(g, p) == o.leq(g, p) for g in members for p in a.carrier)


def one_element_algebra(lattice: FiniteLattice | None = None) -> DomainFreeAlgebra:
    from .order import chain

    lat = chain(1, ["1"]) if lattice is None else lattice
    return DomainFreeAlgebra(
        ("e",), lat, {("e", "e"): "e"}, {("e", x): "e" for x in lat.elements}, "e", "one-element"
    )
