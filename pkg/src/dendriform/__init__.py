"""Polynomial identities of pre-Lie and pre-Jordan triple products in dendriform dialgebras."""

from __future__ import annotations

from .degree7 import analyze_all, extract_new_identities, partition_analysis
from .freealg import dd_basis, enumerate_dd_types, enumerate_tt_types, parse_polynomial, render, tt_basis
from .identities import Identity, analyze, degree3_lattice, liftings, verify_identity
from .modlinalg import DEFAULT_PRIME, RowSpace, echelon, nullspace_canonical_basis, rank, rcf
from .products import OperationKind, expand_tt_monomial
from .rewrite import LinComb, normalize

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_PRIME",
    "Identity",
    "LinComb",
    "OperationKind",
    "RowSpace",
    "analyze",
    "analyze_all",
    "dd_basis",
    "degree3_lattice",
    "echelon",
    "enumerate_dd_types",
    "enumerate_tt_types",
    "extract_new_identities",
    "expand_tt_monomial",
    "liftings",
    "normalize",
    "nullspace_canonical_basis",
    "parse_polynomial",
    "partition_analysis",
    "rank",
    "rcf",
    "render",
    "tt_basis",
    "verify_identity",
]
