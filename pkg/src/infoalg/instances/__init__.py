"""Concrete algebras: powersets, chains, the unit interval, constraint
systems over semirings, and soft sets."""

from __future__ import annotations

from ..domain_free import DomainFreeAlgebra
from ..labeled import LabeledAlgebra
from .chains import chain_algebra
from .constraints import Constraint, constraint_algebra, constraint_combine, constraint_project, tuple_project
from .powerset import CountablePowerset, powerset_algebra, singleton_basis, upsilon_star
from .semiring import (
    BUNDLED,
    Gates,
    Semiring,
    boolean_semiring,
    enumerate_semirings,
    fuzzy_chain,
    semiring_gates,
    truncated_min_plus,
)
from .soft_sets import (
    NATURALS,
    CofiniteSoftAlgebra,
    FiniteOrCofinite,
    SoftSet,
    null_soft_set,
    soft_extended_intersection,
    soft_leq,
    soft_project,
    soft_set_algebra,
)
from .unit_interval import UnitIntervalAnalytic, focus_formula, unit_interval_algebra


def bundled_df_instances() -> list[DomainFreeAlgebra]:
    """Small finite domain-free instances used by the transform checks."""
    return [
        powerset_algebra(["a"]),
        powerset_algebra(["a", "b"]),
        powerset_algebra(["a", "b", "c"]),
        chain_algebra(2),
        chain_algebra(3),
        unit_interval_algebra(4),
    ]


def bundled_labeled_instances() -> list[LabeledAlgebra]:
    """Small finite labeled instances whose local posets stay enumerable."""
    from ..transforms import associated_labeled

    return [
        soft_set_algebra(["u1", "u2"], ["e1"]),
        soft_set_algebra(["u1"], ["e1", "e2"]),
        constraint_algebra(boolean_semiring(), ["v1"], ["0", "1"]),
        constraint_algebra(fuzzy_chain(), ["v1"], ["0", "1"]),
        associated_labeled(powerset_algebra(["a", "b"])),
    ]


__all__ = [
    "BUNDLED",
    "NATURALS",
    "CofiniteSoftAlgebra",
    "Constraint",
    "CountablePowerset",
    "FiniteOrCofinite",
    "Gates",
    "Semiring",
    "SoftSet",
    "UnitIntervalAnalytic",
    "boolean_semiring",
    "bundled_df_instances",
    "bundled_labeled_instances",
    "chain_algebra",
    "constraint_algebra",
    "constraint_combine",
    "constraint_project",
    "enumerate_semirings",
    "focus_formula",
    "fuzzy_chain",
    "null_soft_set",
    "powerset_algebra",
    "semiring_gates",
    "singleton_basis",
    "soft_extended_intersection",
    "soft_leq",
    "soft_project",
    "soft_set_algebra",
    "truncated_min_plus",
    "tuple_project",
    "unit_interval_algebra",
    "upsilon_star",
]
