"""Domination numbers of uniform hypergraphs: exact solvers, extremal
constructions, tree radii and exhaustive small-case searches."""

from ._backend import NAME as BACKEND
from .domination import (
    DominationVariant,
    SolveResult,
    brute_force_oracle,
    certify_at_least,
    is_distance_dominating,
    is_dominating,
    is_s_dominating,
    is_s_tuple_dominating,
    min_dominating,
)
from .hypergraph import INF, Hypergraph, VertexSet

__all__ = [
    "BACKEND",
    "DominationVariant",
    "Hypergraph",
    "INF",
    "SolveResult",
    "VertexSet",
    "brute_force_oracle",
    "certify_at_least",
    "is_distance_dominating",
    "is_dominating",
    "is_s_dominating",
    "is_s_tuple_dominating",
    "min_dominating",
]

__version__ = "0.1.0"
