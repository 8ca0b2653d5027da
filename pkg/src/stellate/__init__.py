"""Exact tools for stable set polytopes of graphs.

Graph recognition (holes, antiholes, odd stretchers, Meyniel, perfectly
orderable, generalized split), toric ideals of stable set polytopes with a
binomial Groebner engine, even-pair contraction, and conjecture sweeps.
"""

from .analysis import Budgets, analyze
from .errors import BudgetExceeded, DomainError, GraphParseError, InternalInconsistency, StellateError
from .graph import (Graph, StableSetIndex, all_graphs, canonical_key, complement, connected_components,
                    enumerate_maximal_cliques, enumerate_stable_sets, induced_subgraph)
from .io import encode_graph6, parse_graph6

__all__ = ["Budgets", "analyze", "BudgetExceeded", "DomainError", "GraphParseError",
           "InternalInconsistency", "StellateError", "Graph", "StableSetIndex", "all_graphs",
           "canonical_key", "complement", "connected_components", "enumerate_maximal_cliques",
           "enumerate_stable_sets", "induced_subgraph", "encode_graph6", "parse_graph6"]

__version__ = "0.1.0"
