"""Soft sets under extended intersection.

Table mode enumerates every soft set over a finite universe.  The
cofinite analytic instance takes the universe to be the natural numbers
and stores each value ``F(e)`` as a finite set or as the complement of
one; "finite complement" is decided on that representation and never by
enumerating the universe.

Information order: ``(F, A) <= (G, B)`` iff ``A`` is contained in ``B``
and ``G(e)`` is contained in ``F(e)`` for every ``e`` in ``A``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .. import limits
from ..errors import ContractError, MalformedInputError
from ..labeled import AnalyticLabeledAlgebra, LabeledAlgebra
from ..order import powerset_lattice, set_name
from ..reports import ContinuityReport


@dataclass(frozen=True)
class SoftSet:
    """``(F, A)``; ``entries`` lists ``(e, F(e))`` sorted by parameter."""

    entries: tuple[tuple[str, frozenset], ...]

    @classmethod
    def of(cls, mapping: Mapping[str, Iterable]) -> "SoftSet":
        return cls(tuple(sorted((e, _freeze(v)) for e, v in mapping.items())))

    @property
    def params(self) -> frozenset[str]:
        return frozenset(e for e, _ in self.entries)

    @property
    def F(self) -> dict[str, frozenset]:
        return dict(self.entries)

    def ident(self) -> str:
        return "(" + ";".join(f"{e}:{_value_name(v)}" for e, v in self.entries) + ")"


def _freeze(v):
    return v if isinstance(v, FiniteOrCofinite) else frozenset(v)


def _value_name(v) -> str:
    return str(v) if isinstance(v, FiniteOrCofinite) else set_name(v)


def soft_extended_intersection(f: SoftSet, g: SoftSet) -> SoftSet:
    F, G = f.F, g.F
    out = {}
    for e in F.keys() | G.keys():
        if e in F and e in G:
            out[e] = F[e] & G[e]
        else:
            out[e] = F[e] if e in F else G[e]
    return SoftSet.of(out)


def soft_project(f: SoftSet, keep: Iterable[str]) -> SoftSet:
    keep = set(keep)
    if not keep <= f.params:
        raise ContractError(f"cannot project a soft set on {sorted(f.params)} onto {sorted(keep)}")
    return SoftSet.of({e: v for e, v in f.F.items() if e in keep})


def soft_leq(f: SoftSet, g: SoftSet) -> bool:
    G = g.F
    return f.params <= g.params and all(G[e] <= v for e, v in f.F.items())


def null_soft_set() -> SoftSet:
    return SoftSet(())


def soft_set_algebra(universe: Sequence[str], params: Sequence[str]) -> LabeledAlgebra:
    universe = sorted(universe)
    lat, subsets = powerset_lattice(params)
    values = [frozenset(c) for k in range(len(universe) + 1) for c in itertools.combinations(universe, k)]
    size = sum(len(values) ** len(a) for a in subsets.values())
    limits.require_carrier(size, "soft-set carrier")
    elems: dict[str, SoftSet] = {}
    for lname, a in subsets.items():
        ps = sorted(a)
        for choice in itertools.product(values, repeat=len(ps)):
            s = SoftSet.of(dict(zip(ps, choice)))
            elems[s.ident()] = s
    label = {k: set_name(s.params) for k, s in elems.items()}
    ct = {
        (k1, k2): soft_extended_intersection(s1, s2).ident() for k1, s1 in elems.items() for k2, s2 in elems.items()
    }
    mt = {}
    for k, s in elems.items():
        for lname, a in subsets.items():
            if a <= s.params:
                mt[k, lname] = soft_project(s, a).ident()
    full = frozenset(universe)
    neutrals = {lname: SoftSet.of({e: full for e in a}).ident() for lname, a in subsets.items()}
    return LabeledAlgebra(
        tuple(elems), lat, label, ct, mt, neutrals, f"soft-sets(|U|={len(universe)},|E|={len(params)})"
    )


# --- finite / cofinite values over the naturals ----------------------------


@dataclass(frozen=True)
class FiniteOrCofinite:
    """A subset of the natural numbers: ``support`` itself (finite mode) or
    its complement (cofinite mode)."""

    cofinite: bool
    support: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(self.support))
        if any((not isinstance(n, int)) or n < 0 for n in self.support):
            raise MalformedInputError("support must hold natural numbers")

    @classmethod
    def finite(cls, items: Iterable[int]) -> "FiniteOrCofinite":
        return cls(False, frozenset(items))

    @classmethod
    def co(cls, missing: Iterable[int] = ()) -> "FiniteOrCofinite":
        return cls(True, frozenset(missing))

    @property
    def mode(self) -> str:
        return "cofinite" if self.cofinite else "finite"

    def __contains__(self, n: int) -> bool:
        return (n not in self.support) if self.cofinite else (n in self.support)

    def complement(self) -> "FiniteOrCofinite":
        return FiniteOrCofinite(not self.cofinite, self.support)

    def complement_is_finite(self) -> bool:
        return self.cofinite

    def __and__(self, other: "FiniteOrCofinite") -> "FiniteOrCofinite":
        a, b = self, other
        if a.cofinite and b.cofinite:
            return FiniteOrCofinite(True, a.support | b.support)
        if not a.cofinite and not b.cofinite:
            return FiniteOrCofinite(False, a.support & b.support)
        fin, co = (a, b) if not a.cofinite else (b, a)
        return FiniteOrCofinite(False, fin.support - co.support)

    def __or__(self, other: "FiniteOrCofinite") -> "FiniteOrCofinite":
        return (self.complement() & other.complement()).complement()

    def __le__(self, other: "FiniteOrCofinite") -> bool:
        """Set inclusion."""
        a, b = self, other
        if not a.cofinite and not b.cofinite:
            return a.support <= b.support
        if not a.cofinite and b.cofinite:
            return not (a.support & b.support)
        if a.cofinite and b.cofinite:
            return b.support <= a.support
        return False  # an infinite set never fits inside a finite one

    def __str__(self) -> str:
        body = ",".join(str(n) for n in sorted(self.support))
        return ("N-{" if self.cofinite else "{") + body + "}"


NATURALS = FiniteOrCofinite.co()


class CofiniteSoftAlgebra(AnalyticLabeledAlgebra):
    """Soft sets over the natural numbers with finite parameter sets.

    Local order on ``F_A`` is the product over ``A`` of reverse inclusion.
    In reverse inclusion a value ``v`` is way-below ``w`` iff ``v`` is
    cofinite and ``w`` is contained in ``v``; finite products keep this
    coordinatewise.  Directed sups are coordinatewise intersections and
    are only computed for finitely generated families.
    """

    def __init__(self, params: Sequence[str]):
        self.params = tuple(sorted(params))
        self.lattice, self.domains = powerset_lattice(self.params)
        self.name = f"cofinite-soft-sets(|E|={len(self.params)})"

    def _check(self, s: SoftSet) -> None:
        if not s.params <= set(self.params):
            raise MalformedInputError(f"soft set uses unknown parameters {sorted(s.params - set(self.params))}")
        if any(not isinstance(v, FiniteOrCofinite) for _, v in s.entries):
            raise MalformedInputError("cofinite soft sets need FiniteOrCofinite values")

    def neutral(self, params: Iterable[str]) -> SoftSet:
        return SoftSet.of({e: NATURALS for e in params})

    def combine(self, f: SoftSet, g: SoftSet) -> SoftSet:
        self._check(f)
        self._check(g)
        return soft_extended_intersection(f, g)

    def project(self, f: SoftSet, keep: Iterable[str]) -> SoftSet:
        self._check(f)
        return soft_project(f, keep)

    def leq(self, f: SoftSet, g: SoftSet) -> bool:
        return soft_leq(f, g)

    def sup(self, family: Sequence[SoftSet]) -> SoftSet:
        """Sup of a finitely generated family inside one ``F_A``."""
        family = list(family)
        if not family:
            raise ContractError("directed families are nonempty")
        params = {f.params for f in family}
        if len(params) != 1:
            raise ContractError("sup is taken inside a single F_A")
        out = family[0]
        for f in family[1:]:
            out = soft_extended_intersection(out, f)
        return out

    def way_below(self, f: SoftSet, g: SoftSet) -> bool:
        self._check(f)
        self._check(g)
        if f.params != g.params:
            raise ContractError("way-below is taken inside a single F_A")
        G = g.F
        return all(v.cofinite and G[e] <= v for e, v in f.entries)

    def is_finite_element(self, f: SoftSet) -> bool:
        """``f <<_A f``: every value has a finite complement."""
        self._check(f)
        return all(v.complement_is_finite() for _, v in f.entries)

    def refutation_chain(self, f: SoftSet, steps: int) -> list[SoftSet]:
        """A directed chain with sup ``f`` and no member above ``f``.

        Exists exactly when some ``F(e)`` has an infinite complement: the
        chain removes growing finite pieces of that complement from the
        universe.  Only the first ``steps`` members are materialised.
        """
        self._check(f)
        bad = [e for e, v in f.entries if not v.cofinite]
        if not bad:
            raise ContractError("every value is cofinite; no refutation exists")
        e = bad[0]
        v = f.F[e]
        out = []
        comp_prefix: list[int] = []
        n = 0
        while len(out) < steps:
            if n not in v:
                comp_prefix.append(n)
                out.append(SoftSet.of({**f.F, e: FiniteOrCofinite.co(comp_prefix)}))
            n += 1
        return out

    def chain_limit(self, f: SoftSet) -> SoftSet:
        """The intersection of the whole refutation chain, in closed form.

        Removing every point of the complement of ``F(e)`` from the universe
        leaves exactly ``F(e)``.
        """
        return f

    def density_witness(self, f: SoftSet, e: str, n: int) -> SoftSet:
        """A finite element below ``f`` that excludes ``n`` at ``e``.

        ``f`` is the sup of its finite approximants iff for every ``e`` and
        every ``n`` outside ``F(e)`` such a witness exists.
        """
        if n in f.F[e]:
            raise ContractError(f"{n} lies in F({e}); nothing to exclude")
        return SoftSet.of({d: (FiniteOrCofinite.co([n]) if d == e else NATURALS) for d in f.params})

    def density_holds(self, f: SoftSet, probe: int = 32) -> bool:
        for e, v in f.entries:
            for n in range(probe):
                if n in v:
                    continue
                w = self.density_witness(f, e, n)
                if not (self.is_finite_element(w) and self.leq(w, f) and n not in w.F[e]):
                    return False
        return True

    def sample_soft_sets(self) -> list[SoftSet]:
        vals = [
            NATURALS,
            FiniteOrCofinite.co([0]),
            FiniteOrCofinite.co([1, 2]),
            FiniteOrCofinite.finite([]),
            FiniteOrCofinite.finite([0, 3]),
        ]
        out = []
        for lname, a in self.domains.items():
            ps = sorted(a)
            for choice in itertools.product(vals, repeat=len(ps)):
                out.append(SoftSet.of(dict(zip(ps, choice))))
        return out

    def continuity_report(self, basis: str = "finite") -> ContinuityReport:
        """Closed-form report for the finite-element basis family.

        Convergency and compactness follow from completeness of each
        ``F_A`` and finiteness of ``A``; density is verified on the sample
        battery through explicit witnesses.  Extending a finite element to
        the top domain pads with the whole universe, which keeps it finite,
        so strong density reduces to density.
        """
        if basis != "finite":
            raise ContractError("the analytic soft-set instance supports only the finite-element basis")
        samples = self.sample_soft_sets()
        top = set(self.params)
        dens = all(self.density_holds(f) for f in samples)
        strong = dens and all(
            self.is_finite_element(self.combine(w, self.neutral(top)))
            for f in samples
            for e, v in f.entries
            for w in [self.density_witness(f, e, n) for n in range(8) if n not in v]
        )
        per = {
            x: {"well_formed": True, "convergency": True, "density": dens, "strong_density": strong, "compactness": True}
            for x in self.lattice.elements
        }
        fin = tuple(f.ident() for f in samples if self.is_finite_element(f))
        return ContinuityReport(dens, strong, dens, strong, fin, (), per, mode="analytic")

    def lemma4(self) -> bool:
        samples = self.sample_soft_sets()
        for f in samples:
            for g in samples:
                if f.params != g.params or not self.is_finite_element(f):
                    continue
                if self.way_below(f, g) != self.leq(f, g):
                    return False
        return all(self.way_below(f, f) == self.is_finite_element(f) for f in samples)
