"""Scott-continuous maps between finite domain-free algebras.

Functions are compared extensionally: a :class:`ScottFunction` is its
table of images listed in source-carrier order.  The function space over
``(Phi, D)`` and ``(Psi, E)`` has pointwise combination, focusing
``f=>(x,y)(phi) = f(phi=>x)=>y`` over the product lattice ``D x E`` and the
constant-neutral map as its neutral element.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

from . import limits
from .domain_free import AnalyticAlgebra, DomainFreeAlgebra, classify, focus_preserves_directed_sups
from .errors import AxiomViolation, ContractError, MalformedInputError
from .order import is_continuous_lattice, product_lattice


@dataclass(frozen=True)
class ScottFunction:
    source: DomainFreeAlgebra = field(repr=False, compare=False)
    target: DomainFreeAlgebra = field(repr=False, compare=False)
    table: tuple[str, ...]
    verified: bool = field(default=False, compare=False)

    def __call__(self, p: str) -> str:
        try:
            return self.table[self.source.carrier.index(p)]
        except ValueError:
            raise MalformedInputError(f"{p!r} is not in the source carrier") from None

    def ident(self) -> str:
        return "<" + ",".join(self.table) + ">"

    def as_mapping(self) -> dict[str, str]:
        return dict(zip(self.source.carrier, self.table))


def is_scott_continuous(source: DomainFreeAlgebra, target: DomainFreeAlgebra, table: Mapping[str, str]) -> bool:
    """``f(sup X) = sup f(X)`` for every directed ``X`` whose sup exists."""
    so, to = source.order, target.order
    for xs, sup in so.directed_subsets():
        if sup is None:
            continue
        if table[sup] != to.lub(table[p] for p in xs):
            return False
    return True


def make_function(source: DomainFreeAlgebra, target: DomainFreeAlgebra, table: Mapping[str, str]) -> ScottFunction:
    missing = [p for p in source.carrier if p not in table]
    if missing:
        raise MalformedInputError(f"function table has no image for {missing[0]!r}")
    bad = [v for v in table.values() if v not in set(target.carrier)]
    if bad:
        raise MalformedInputError(f"image {bad[0]!r} is not in the target carrier")
    return ScottFunction(
        source, target, tuple(table[p] for p in source.carrier), is_scott_continuous(source, target, table)
    )


def _s_continuous(a: DomainFreeAlgebra) -> bool:
    # memoised on the instance; the algebra is immutable
    key = "_fn_s_continuous"
    if key not in a.__dict__:
        a.__dict__[key] = classify(a).s_continuous
    return a.__dict__[key]


def _same_spaces(f: ScottFunction, g: ScottFunction) -> None:
    if f.source is not g.source and f.source != g.source:
        raise ContractError("functions have different source algebras")
    if f.target is not g.target and f.target != g.target:
        raise ContractError("functions have different target algebras")


def fn_combine(f: ScottFunction, g: ScottFunction) -> ScottFunction:
    """Pointwise combination, re-verified."""
    _same_spaces(f, g)
    if not (f.verified and g.verified):
        raise ContractError("fn_combine needs verified Scott-continuous inputs")
    t = f.target
    table = dict(zip(f.source.carrier, (t.combine(a, b) for a, b in zip(f.table, g.table))))
    return make_function(f.source, t, table)


def fn_focus(f: ScottFunction, x: str, y: str, *, allow_weak_hypothesis: bool = False) -> ScottFunction:
    """``phi -> f(phi=>x)=>y``, re-verified.

    Source and target must classify s-continuous unless
    ``allow_weak_hypothesis`` is set.
    """
    if not f.verified:
        raise ContractError("fn_focus needs a verified Scott-continuous input")
    if not allow_weak_hypothesis and not (_s_continuous(f.source) and _s_continuous(f.target)):
        raise ContractError("fn_focus requires s-continuous source and target algebras")
    s, t = f.source, f.target
    table = {p: t.focus(f(s.focus(p, x)), y) for p in s.carrier}
    return make_function(s, t, table)


@dataclass(frozen=True)
class FunctionSpace:
    algebra: DomainFreeAlgebra
    functions: Mapping[str, ScottFunction] = field(repr=False)
    weak_hypothesis: bool = False
    candidates: int = 0


def build_function_space(
    phi: DomainFreeAlgebra, psi: DomainFreeAlgebra, *, allow_weak_hypothesis: bool = False
) -> FunctionSpace:
    """All Scott-continuous maps ``phi -> psi`` as a domain-free algebra over ``D x E``.

    Carrier order is lexicographic on image tables, with each coordinate
    ordered like ``psi``'s carrier.
    """
    if isinstance(phi, AnalyticAlgebra) or isinstance(psi, AnalyticAlgebra):
        raise ContractError("function spaces need table-mode inputs")
    strong = _s_continuous(phi) and _s_continuous(psi)
    if not strong:
        if not allow_weak_hypothesis:
            raise ContractError("both algebras must be s-continuous (pass allow_weak_hypothesis to explore)")
        if not (classify(phi).continuous and classify(psi).continuous):
            raise ContractError("maps are only defined between continuous algebras")
    n = len(psi.carrier) ** len(phi.carrier)
    limits.require_carrier(n, "candidate maps")
    funcs: dict[str, ScottFunction] = {}
    for images in itertools.product(psi.carrier, repeat=len(phi.carrier)):
        f = make_function(phi, psi, dict(zip(phi.carrier, images)))
        if f.verified:
            funcs[f.ident()] = f
    lat = product_lattice(phi.lattice, psi.lattice)
    ct = {(k1, k2): fn_combine(f, g).ident() for k1, f in funcs.items() for k2, g in funcs.items()}
    ft = {}
    for k, f in funcs.items():
        for xy, (x, y) in lat.factors.items():
            img = fn_focus(f, x, y, allow_weak_hypothesis=True)
            if img.ident() not in funcs:
                raise AxiomViolation(f"focusing {k} onto {xy} leaves the space of continuous maps")
            ft[k, xy] = img.ident()
    neutral = "<" + ",".join([psi.neutral] * len(phi.carrier)) + ">"
    alg = DomainFreeAlgebra(tuple(funcs), lat, ct, ft, neutral, f"[{phi.name}->{psi.name}]")
    return FunctionSpace(alg, funcs, not strong, n)


def pointwise_order_check(space: FunctionSpace) -> bool:
    """The pointwise order agrees with ``f <= g iff f (x) g = g``."""
    a = space.algebra
    for k1, f in space.functions.items():
        to = f.target.order
        for k2, g in space.functions.items():
            pointwise = all(to.leq(u, v) for u, v in zip(f.table, g.table))
            if pointwise != (a.combine(k1, k2) == k2):
                return False
    return True


def lemma8_crosscheck(space: FunctionSpace) -> bool:
    return is_continuous_lattice(space.algebra.order)


def prop3_closure(space: FunctionSpace) -> bool:
    """Combination and focusing of members re-verify as Scott-continuous."""
    fs = list(space.functions.values())
    lat = space.algebra.lattice
    for f in fs:
        for g in fs:
            if not fn_combine(f, g).verified:
                return False
        for x, y in lat.factors.values():
            if not fn_focus(f, x, y, allow_weak_hypothesis=space.weak_hypothesis).verified:
                return False
    return True


def theorem7_identity(space: FunctionSpace) -> bool:
    """Focusing commutes with sups of directed families of functions."""
    return focus_preserves_directed_sups(space.algebra)


def idempotency_check(space: FunctionSpace) -> bool:
    a = space.algebra
    return all(a.combine(f, a.focus(f, xy)) == f for f in a.carrier for xy in a.lattice.elements)
