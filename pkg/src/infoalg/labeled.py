"""Labeled information algebras over finite carriers.

Every element carries a domain label ``d(phi)`` from the lattice ``D``;
marginalization ``phi^x`` is a partial table defined exactly when
``x <= d(phi)``.  Per-domain neutral elements are part of the input and
are validated, never synthesized.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

from . import limits
from .errors import ContractError, MalformedInputError
from .order import FiniteLattice, Poset
from .reports import AxiomReport, AxiomResult, ContinuityReport


@dataclass(frozen=True, eq=True)
class LabeledAlgebra:
    carrier: tuple[str, ...]
    lattice: FiniteLattice
    label: Mapping[str, str] = field(repr=False)
    combine_table: Mapping[tuple[str, str], str] = field(repr=False)
    marginal_table: Mapping[tuple[str, str], str] = field(repr=False)
    neutrals: Mapping[str, str] = field(repr=False)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        carrier = tuple(self.carrier)
        object.__setattr__(self, "carrier", carrier)
        known = set(carrier)
        if len(known) != len(carrier):
            raise MalformedInputError("carrier identifiers must be unique")
        limits.require_carrier(len(carrier))
        dom = set(self.lattice.elements)
        for a in carrier:
            if self.label.get(a) not in dom:
                raise MalformedInputError(f"element {a!r} has no valid label")
            for b in carrier:
                c = self.combine_table.get((a, b))
                if c is None:
                    raise MalformedInputError(f"combine table has no entry for ({a!r}, {b!r})")
                if c not in known:
                    raise MalformedInputError(f"combine({a!r}, {b!r}) = {c!r} is not in the carrier")
        for (a, x), c in self.marginal_table.items():
            if a not in known or x not in dom or c not in known:
                raise MalformedInputError(f"marginalize entry ({a!r}, {x!r}) -> {c!r} names unknown ids")
        for x in self.lattice.elements:
            if x not in self.neutrals:
                raise MalformedInputError(f"no neutral element declared for domain {x!r}")
            if self.neutrals[x] not in known:
                raise MalformedInputError(f"neutral of {x!r} is not in the carrier")

    __hash__ = None  # type: ignore[assignment]

    def d(self, a: str) -> str:
        try:
            return self.label[a]
        except KeyError:
            raise MalformedInputError(f"unknown element {a!r}") from None

    def combine(self, a: str, b: str) -> str:
        try:
            return self.combine_table[a, b]
        except KeyError:
            raise MalformedInputError(f"unknown element in combine({a!r}, {b!r})") from None

    def marginalize(self, a: str, x: str) -> str:
        """``a^x``; a contract error outside ``x <= d(a)``."""
        if not self.lattice.leq(x, self.d(a)):
            raise ContractError(f"marginalize({a!r}, {x!r}) needs {x!r} <= {self.d(a)!r}")
        try:
            return self.marginal_table[a, x]
        except KeyError:
            raise ContractError(f"marginalize table has no entry for ({a!r}, {x!r})") from None

    def domain(self, x: str) -> tuple[str, ...]:
        """``Phi_x``, in carrier order."""
        return tuple(a for a in self.carrier if self.label[a] == x)

    @property
    def top(self) -> str:
        return self.lattice.top

    @cached_property
    def order(self) -> Poset:
        return Poset(self.carrier, lambda p, q: self.combine(p, q) == q)

    @cached_property
    def _local(self) -> dict[str, Poset]:
        return {}

    def local_poset(self, x: str) -> Poset:
        if x not in self._local:
            self._local[x] = local_poset(self, x)
        return self._local[x]


class AnalyticLabeledAlgebra(abc.ABC):
    """Closed-form hooks for labeled algebras with infinite local carriers."""

    name: str

    @abc.abstractmethod
    def continuity_report(self, basis: str) -> ContinuityReport: ...

    @abc.abstractmethod
    def lemma4(self) -> bool: ...


def check_labeled_axioms(a: LabeledAlgebra) -> AxiomReport:
    """Evaluate the seven labeled axioms; a missing or extra marginal entry
    is reported as an axiom failure rather than raised."""
    phi, dom, lat = a.carrier, a.lattice.elements, a.lattice
    c, d = a.combine, a.d
    mt = a.marginal_table

    def m(p, x):
        return mt.get((p, x))

    results = []

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
        for s in dom:
            e = a.neutrals[s]
            if d(e) != s:
                yield ("neutral_label", e, s)
            for p in a.domain(s):
                if c(e, p) != p:
                    yield ("neutral", e, p)

    sg = next(iter(semigroup()), None)
    results.append(
        AxiomResult("semigroup", True) if sg is None else AxiomResult("semigroup", False, tuple(sg[1:]), f"{sg[0]} fails")
    )

    def first(gen, name, detail):
        for cx in gen:
            return AxiomResult(name, False, tuple(cx), detail)
        return AxiomResult(name, True)

    results.append(
        first(
            ((p, q) for p in phi for q in phi if d(c(p, q)) != lat.join(d(p), d(q))),
            "labeling",
            "d(phi (x) psi) != d(phi) v d(psi)",
        )
    )

    def marg():
        for p in phi:
            for x in dom:
                defined = (p, x) in mt
                allowed = lat.leq(x, d(p))
                if defined != allowed:
                    yield (p, x)
                elif defined and d(m(p, x)) != x:
                    yield (p, x)

    results.append(first(marg(), "marginalization", "marginal undefined/mislabeled (or defined outside x <= d(phi))"))

    def trans():
        for p in phi:
            for y in dom:
                if not lat.leq(y, d(p)):
                    continue
                for x in dom:
                    if lat.leq(x, y):
                        py = m(p, y)
                        lhs = None if py is None else m(py, x)
                        if lhs is None or lhs != m(p, x):
                            yield (p, y, x)

    results.append(first(trans(), "transitivity", "(phi^y)^x != phi^x for (phi, y, x)"))

    def comb():
        for p in phi:
            x = d(p)
            for q in phi:
                y = d(q)
                lhs = m(c(p, q), x)
                qm = m(q, lat.meet(x, y))
                rhs = None if qm is None else c(p, qm)
                if lhs is None or lhs != rhs:
                    yield (p, q)

    results.append(first(comb(), "combination", "(phi (x) psi)^d(phi) != phi (x) psi^(d(phi) ^ d(psi))"))

    def stab():
        for y in dom:
            for x in dom:
                if lat.leq(x, y) and m(a.neutrals[y], x) != a.neutrals[x]:
                    yield (y, x)

    results.append(first(stab(), "stability", "e_y^x != e_x for (y, x)"))

    def idem():
        for p in phi:
            for x in dom:
                if lat.leq(x, d(p)):
                    px = m(p, x)
                    if px is None or c(p, px) != p:
                        yield (p, x)

    results.append(first(idem(), "idempotency", "phi (x) phi^x != phi"))
    return AxiomReport(tuple(results))


def vacuous_extension(a: LabeledAlgebra, p: str, y: str) -> str:
    if not a.lattice.leq(a.d(p), y):
        raise ContractError(f"cannot extend {p!r} from {a.d(p)!r} to {y!r}")
    return a.combine(p, a.neutrals[y])


def local_poset(a: LabeledAlgebra, x: str) -> Poset:
    """``Phi_x`` under the induced order."""
    return Poset(a.domain(x), lambda p, q: a.combine(p, q) == q)


@dataclass(frozen=True)
class LocalBasisFamily:
    members: Mapping[str, tuple[str, ...]]
    name: str = ""

    def __getitem__(self, x: str) -> tuple[str, ...]:
        return self.members[x]

    @classmethod
    def full(cls, a: LabeledAlgebra) -> "LocalBasisFamily":
        return cls({x: a.domain(x) for x in a.lattice.elements}, "full")

    @classmethod
    def finite(cls, a: LabeledAlgebra) -> "LocalBasisFamily":
        """``Phi_{f,x} = {psi in Phi_x : psi <<_x psi}`` for every ``x``."""
        out = {}
        for x in a.lattice.elements:
            p = a.local_poset(x)
            out[x] = tuple(q for q in p.elements if p.way_below(q, q))
        return cls(out, "finite")


def check_labeled_continuity(a, gamma: LocalBasisFamily | str = "finite") -> ContinuityReport:
    """Per-domain convergency, density, strong density and compactness.

    The strong-density witness set for ``phi`` in ``Phi_x`` is
    ``{chi in Gamma_x : chi (x) e_top in Gamma_top, chi <<_x phi}``.
    """
    if isinstance(a, AnalyticLabeledAlgebra):
        return a.continuity_report(gamma if isinstance(gamma, str) else gamma.name)
    if isinstance(gamma, str):
        gamma = {"finite": LocalBasisFamily.finite, "full": LocalBasisFamily.full}[gamma](a)
    top = a.top
    e_top = a.neutrals[top]
    gamma_top = set(gamma[top])
    failures: list[tuple[str, tuple[str, ...]]] = []
    per_domain: dict[str, dict[str, bool]] = {}
    for x in a.lattice.elements:
        p = a.local_poset(x)
        limits.require_enumerable(len(p), f"Phi_{x}")
        g = tuple(q for q in p.elements if q in set(gamma[x]))
        if set(g) != set(gamma[x]):
            raise MalformedInputError(f"local basis for {x!r} contains elements not labeled {x!r}")
        gs = set(g)
        well = a.neutrals[x] in gs and all(a.combine(u, v) in gs for u in g for v in g)
        if not well:
            failures.append(("well_formed", (x,)))
        directed = p.directed_subsets(within=g)
        conv = all(sup is not None for _, sup in directed)
        if not conv:
            failures.append(("convergency", (x,)))
        dens = True
        for phi in p.elements:
            if p.lub(q for q in g if p.way_below(q, phi)) != phi:
                dens = False
                failures.append(("density", (x, phi)))
                break
        strong = True
        for phi in p.elements:
            ws = [q for q in g if a.combine(q, e_top) in gamma_top and p.way_below(q, phi)]
            if p.lub(ws) != phi:
                strong = False
                failures.append(("strong_density", (x, phi)))
                break
        compact = True
        for xs, sup in directed:
            if sup is None:
                continue
            for phi in g:
                if p.leq(phi, sup) and not any(p.leq(phi, q) for q in xs):
                    compact = False
                    failures.append(("compactness", (x, phi) + xs))
                    break
            if not compact:
                break
        per_domain[x] = {
            "well_formed": well,
            "convergency": conv,
            "density": dens,
            "strong_density": strong,
            "compactness": compact,
        }
    allx = lambda key: all(v[key] for v in per_domain.values())  # noqa: E731
    base = allx("well_formed") and allx("convergency")
    cont = base and allx("density")
    s_cont = base and allx("strong_density")
    finite = tuple(q for x in a.lattice.elements for q in LocalBasisFamily.finite(a)[x])
    return ContinuityReport(
        cont,
        s_cont,
        cont and allx("compactness"),
        s_cont and allx("compactness"),
        finite,
        tuple(failures),
        per_domain,
    )


def lemma4_check(a, gamma: LocalBasisFamily | str = "finite") -> bool:
    """Compact local bases are exactly the self-way-below elements and
    way-below from a basis element reduces to the order."""
    if isinstance(a, AnalyticLabeledAlgebra):
        return a.lemma4()
    if isinstance(gamma, str):
        gamma = {"finite": LocalBasisFamily.finite, "full": LocalBasisFamily.full}[gamma](a)
    if not check_labeled_continuity(a, gamma).compact:
        raise ContractError("lemma4_check requires a family certifying compactness")
    for x in a.lattice.elements:
        p = a.local_poset(x)
        g = set(gamma[x])
        for psi in p.elements:
            if (psi in g) != p.way_below(psi, psi):
                return False
        for psi in g:
            for phi in p.elements:
                if p.way_below(psi, phi) != p.leq(psi, phi):
                    return False
    return True


def remark1_check(a: LabeledAlgebra) -> bool:
    """Every local poset is a complete lattice."""
    from .order import is_complete_lattice

    return all(is_complete_lattice(a.local_poset(x)) for x in a.lattice.elements)

