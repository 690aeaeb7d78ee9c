"""Finite and analytic information algebras.

The core modules check the axioms of labeled and domain-free
information algebras given as finite tables, classify them by
continuity and compactness, move between the two presentations, and
build spaces of Scott-continuous maps.
"""

from .domain_free import (
    AnalyticAlgebra,
    Basis,
    BasisReport,
    DomainFreeAlgebra,
    check_basis,
    check_df_axioms,
    classify,
    classify_by_basis,
    finite_elements,
    induced_order,
    theorem6_check,
)
from .errors import AxiomViolation, ContractError, InfoAlgError, MalformedInputError, ResourceLimitError
from .labeled import LabeledAlgebra, LocalBasisFamily, check_labeled_axioms, check_labeled_continuity
from .order import FiniteLattice, Poset, chain, product_lattice
from .reports import AxiomReport, AxiomResult, ContinuityReport, TheoremReport

__version__ = "0.1.0"

__all__ = [
    "AnalyticAlgebra",
    "AxiomReport",
    "AxiomResult",
    "AxiomViolation",
    "Basis",
    "BasisReport",
    "ContinuityReport",
    "ContractError",
    "DomainFreeAlgebra",
    "FiniteLattice",
    "InfoAlgError",
    "LabeledAlgebra",
    "LocalBasisFamily",
    "MalformedInputError",
    "Poset",
    "ResourceLimitError",
    "TheoremReport",
    "chain",
    "check_basis",
    "check_df_axioms",
    "check_labeled_axioms",
    "check_labeled_continuity",
    "classify",
    "classify_by_basis",
    "finite_elements",
    "induced_order",
    "product_lattice",
    "theorem6_check",
]
