"""Constructions between the two algebra kinds.

``quotient_domain_free`` identifies labeled elements whose vacuous
extensions to the joined domain agree; ``associated_labeled`` pairs each
domain-free element with every domain that supports it.  The remaining
functions turn the correspondence results into exhaustive checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import limits
from .domain_free import AnalyticAlgebra, DomainFreeAlgebra, classify, check_df_axioms, finite_elements
from .errors import AxiomViolation, ContractError, MalformedInputError
from .labeled import (
    AnalyticLabeledAlgebra,
    LabeledAlgebra,
    LocalBasisFamily,
    check_labeled_axioms,
    check_labeled_continuity,
)
from .reports import TheoremReport


@dataclass(frozen=True)
class CongruenceRelation:
    """Classes of the vacuous-extension congruence.

    ``representative[phi]`` is the canonical member ``phi`` extended to
    the top domain; ``classes`` maps each representative to its members in
    carrier order.
    """

    classes: dict[str, tuple[str, ...]]
    representative: dict[str, str]

    def class_name(self, phi: str) -> str:
        return f"[{self.representative[phi]}]"


def sigma_congruence(a: LabeledAlgebra) -> CongruenceRelation:
    top = a.top
    e_top = a.neutrals[top]
    rep = {p: a.combine(p, e_top) for p in a.carrier}
    for p, r in rep.items():
        if a.d(r) != top:
            raise AxiomViolation(f"{p!r} extended to the top domain has label {a.d(r)!r}")
    lat = a.lattice
    for p in a.carrier:
        for q in a.carrier:
            z = lat.join(a.d(p), a.d(q))
            same = a.combine(p, a.neutrals[z]) == a.combine(q, a.neutrals[z])
            if same != (rep[p] == rep[q]):
                raise AxiomViolation(f"congruence classes of {p!r} and {q!r} depend on the chosen extension domain")
    classes: dict[str, list[str]] = {}
    for p in a.carrier:
        classes.setdefault(rep[p], []).append(p)
    ordered = {r: tuple(classes[r]) for r in a.carrier if r in classes}
    return CongruenceRelation(ordered, rep)


def quotient_domain_free(a: LabeledAlgebra) -> DomainFreeAlgebra:
    """The associated domain-free algebra on the congruence classes.

    Class ``[phi]`` is named ``"[rep]"`` after its top-domain
    representative.  Every member of a class is used to evaluate the
    operations, and disagreement raises :class:`AxiomViolation`.
    """
    sigma = sigma_congruence(a)
    cname = sigma.class_name
    lat = a.lattice
    names = [f"[{r}]" for r in sigma.classes]
    ct: dict[tuple[str, str], str] = {}
    for r1, m1 in sigma.classes.items():
        for r2, m2 in sigma.classes.items():
            vals = {cname(a.combine(p, q)) for p in m1 for q in m2}
            if len(vals) != 1:
                raise AxiomViolation(f"combination is not compatible with classes [{r1}], [{r2}]")
            ct[f"[{r1}]", f"[{r2}]"] = vals.pop()
    ft: dict[tuple[str, str], str] = {}
    for r, members in sigma.classes.items():
        for x in lat.elements:
            vals = set()
            for p in members:
                ext = a.combine(p, a.neutrals[lat.join(x, a.d(p))])
                vals.add(cname(a.marginalize(ext, x)))
            if len(vals) != 1:
                raise AxiomViolation(f"focusing of [{r}] onto {x!r} depends on the representative")
            ft[f"[{r}]", x] = vals.pop()
    neutral_classes = {cname(a.neutrals[s]) for s in lat.elements}
    if len(neutral_classes) != 1:
        raise AxiomViolation("the per-domain neutral elements fall into different classes")
    return DomainFreeAlgebra(tuple(names), lat, ct, ft, cname(a.neutrals[lat.bottom]), f"quotient({a.name})")


def pair_id(phi: str, x: str) -> str:
    return f"{phi}@{x}"


def associated_labeled(a: DomainFreeAlgebra) -> LabeledAlgebra:
    """Pairs ``(phi, x)`` with ``phi = phi=>x``, named ``"phi@x"``."""
    lat = a.lattice
    pairs: dict[str, tuple[str, str]] = {}
    for x in lat.elements:
        for p in a.carrier:
            if a.focus(p, x) == p:
                pairs[pair_id(p, x)] = (p, x)
    if len(set(pairs)) != sum(len(a.fixed_points(x)) for x in lat.elements):
        raise MalformedInputError("paired element names collide; rename carrier or domain ids")
    label = {k: v[1] for k, v in pairs.items()}
    ct = {}
    for k1, (p, x) in pairs.items():
        for k2, (q, y) in pairs.items():
            k = pair_id(a.combine(p, q), lat.join(x, y))
            if k not in pairs:
                raise AxiomViolation(f"{k1} (x) {k2} leaves the paired carrier")
            ct[k1, k2] = k
    mt = {}
    for k, (p, x) in pairs.items():
        for y in lat.elements:
            if lat.leq(y, x):
                mt[k, y] = pair_id(a.focus(p, y), y)
    neutrals = {}
    for x in lat.elements:
        if a.focus(a.neutral, x) != a.neutral:
            raise AxiomViolation(f"neutral element is not fixed by focusing onto {x!r}")
        neutrals[x] = pair_id(a.neutral, x)
    return LabeledAlgebra(tuple(pairs), lat, label, ct, mt, neutrals, f"labeled({a.name})")


def _subsets(items):
    limits.require_enumerable(len(items), "subset enumeration")
    for k in range(len(items) + 1):
        yield from itertools.combinations(items, k)


def lemma5_check(a: DomainFreeAlgebra) -> bool:
    """Sups in ``Psi_x`` are computed on the first coordinate."""
    psi = associated_labeled(a)
    o = a.order
    for x in a.lattice.elements:
        local = psi.local_poset(x)
        bases = a.fixed_points(x)
        for xs in _subsets(bases):
            s = o.lub(xs)
            if s is None:
                continue
            if local.lub(pair_id(p, x) for p in xs) != pair_id(s, x):
                return False
    return True


def lemma6_check(a: DomainFreeAlgebra) -> bool:
    """``psi << phi`` transfers to ``(psi,x) <<_x (phi,x)``; both ways when
    the algebra is s-continuous."""
    rep = classify(a)
    if not rep.continuous:
        raise ContractError("lemma6_check requires a continuous algebra")
    psi = associated_labeled(a)
    o = a.order
    for x in a.lattice.elements:
        local = psi.local_poset(x)
        fixed = a.fixed_points(x)
        for p in fixed:
            for q in fixed:
                lhs = o.way_below(p, q)
                rhs = local.way_below(pair_id(p, x), pair_id(q, x))
                if lhs and not rhs:
                    return False
                if rep.s_continuous and rhs and not lhs:
                    return False
    return True


def lemma7_check(a: LabeledAlgebra) -> bool:
    """The class of a sup is the sup of the classes."""
    q = quotient_domain_free(a)
    sigma = sigma_congruence(a)
    o, qo = a.order, q.order
    for xs in _subsets(a.carrier):
        s = o.lub(xs)
        if s is None:
            continue
        if qo.lub({sigma.class_name(p) for p in xs}) != sigma.class_name(s):
            return False
    return True


def theorem2_5_check(a: DomainFreeAlgebra) -> TheoremReport:
    """Strong continuity and strong compactness transfer to the associated
    labeled algebra with the paired bases."""
    if isinstance(a, AnalyticAlgebra):
        raise ContractError("transforms run in table mode only")
    rep = classify(a)
    psi = associated_labeled(a)
    checks: dict[str, bool | None] = {"labeled_axioms": check_labeled_axioms(psi).passed}
    details: dict = {"domain_free": rep.to_dict()}
    if rep.s_continuous:
        fam = LocalBasisFamily(
            {x: tuple(pair_id(p, x) for p in a.fixed_points(x)) for x in a.lattice.elements}, "paired-carrier"
        )
        lab = check_labeled_continuity(psi, fam)
        checks["theorem2_s_continuous"] = lab.s_continuous
        details["theorem2"] = lab.to_dict()
    else:
        checks["theorem2_s_continuous"] = None
    if rep.s_compact:
        fin = set(rep.finite_elements)
        fam = LocalBasisFamily(
            {x: tuple(pair_id(p, x) for p in a.fixed_points(x) if p in fin) for x in a.lattice.elements},
            "paired-finite",
        )
        lab = check_labeled_continuity(psi, fam)
        checks["theorem5_s_compact"] = lab.s_compact
        details["theorem5"] = lab.to_dict()
    else:
        checks["theorem5_s_compact"] = None
    return TheoremReport("theorem2_5", checks, details)


def theorem3_4_check(a: LabeledAlgebra, gamma: LocalBasisFamily | None = None) -> TheoremReport:
    """Labeled continuity, compactness and strong compactness transfer to
    the quotient."""
    if isinstance(a, AnalyticLabeledAlgebra):
        raise ContractError("transforms run in table mode only")
    gamma = LocalBasisFamily.finite(a) if gamma is None else gamma
    lab = check_labeled_continuity(a, gamma)
    q = quotient_domain_free(a)
    qrep = classify(q)
    sigma = sigma_congruence(a)
    checks: dict[str, bool | None] = {"quotient_axioms": check_df_axioms(q).passed}
    checks["theorem3_continuous"] = qrep.continuous if lab.continuous else None
    if lab.compact:
        expected = {sigma.class_name(p) for p in gamma[a.top]}
        checks["theorem4_compact"] = qrep.compact and set(finite_elements(q)) == expected
    else:
        checks["theorem4_compact"] = None
    checks["theorem4_s_compact"] = qrep.s_compact if lab.s_compact else None
    return TheoremReport(
        "theorem3_4",
        checks,
        {"labeled": lab.to_dict(), "quotient": qrep.to_dict(), "classes": len(q.carrier)},
    )


def isomorphism_probe(a: DomainFreeAlgebra) -> bool:
    """Diagnostic only: does the round trip domain-free -> labeled ->
    quotient reproduce the original tables up to renaming?"""
    q = quotient_domain_free(associated_labeled(a))
    if len(q.carrier) != len(a.carrier):
        return False
    # class of phi@top is named "[phi@top]"
    ren = {p: f"[{pair_id(p, a.lattice.top)}]" for p in a.carrier}
    if set(ren.values()) != set(q.carrier):
        return False
    return all(ren[a.combine(p, r)] == q.combine(ren[p], ren[r]) for p in a.carrier for r in a.carrier) and all(
        ren[a.focus(p, x)] == q.focus(ren[p], x) for p in a.carrier for x in a.lattice.elements
    )


def remark3_search(instances=None, *, count: int = 0, seed: int = 0, max_carrier: int = 6) -> dict:
    """Look for labeled s-continuous instances whose quotient is not
    s-continuous.

    This is an exploration, not a theorem check: at finite scale every
    local poset collapses to an algebraic lattice, so the expected result
    is an empty counterexample list.
    """
    from .generators import random_labeled_algebras

    pool = list(instances or [])
    if count:
        pool.extend(random_labeled_algebras(count, seed=seed, max_carrier=max_carrier))
    examined, skipped, counterexamples = 0, [], []
    for inst in pool:
        if isinstance(inst, (AnalyticLabeledAlgebra, AnalyticAlgebra)):
            skipped.append({"name": inst.name, "reason": "analytic instance; the search needs table mode"})
            continue
        lab = check_labeled_continuity(inst, LocalBasisFamily.full(inst))
        if not lab.s_continuous:
            continue
        examined += 1
        if not classify(quotient_domain_free(inst)).s_continuous:
            counterexamples.append(inst.name)
    return {
        "kind": "exploration",
        "examined_s_continuous": examined,
        "counterexamples": counterexamples,
        "skipped": skipped,
    }
