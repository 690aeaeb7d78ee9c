"""Chains as domain-free algebras, the smallest inputs for function spaces."""

from __future__ import annotations

from ..domain_free import DomainFreeAlgebra
from ..order import chain


def chain_algebra(n: int, vacuous_domain: bool = True) -> DomainFreeAlgebra:
    """The ``n``-chain ``"0" < ... < "n-1"`` under max.

    With ``vacuous_domain`` the domain lattice is ``"0" < "1"``: focusing
    onto ``"1"`` is the identity and onto ``"0"`` forgets everything.
    Otherwise it is the single point ``"1"``.
    """
    values = list(range(n))
    lat = chain(2, ["0", "1"]) if vacuous_domain else chain(1, ["1"])
    return DomainFreeAlgebra.from_functions(
        values, lat, max, lambda v, x: v if x == "1" else 0, 0, str, f"chain({n})"
    )
