"""Lazy graph oracles over two-party inputs, per-query protocol simulation
with bit accounting, brute-force gap verifiers, and query-budget sweeps."""

from . import embeddings, experiments, families, graph, promises, protocols, verify
from .bits import BitVec
from .promises import (
    Disjoint,
    KIntersectOrDisjoint,
    PromisePair,
    UniqueIntersection,
    gen_promise_instance,
    replicate_input,
)

__version__ = "0.1.0"

__all__ = [
    "BitVec",
    "Disjoint",
    "KIntersectOrDisjoint",
    "PromisePair",
    "UniqueIntersection",
    "embeddings",
    "experiments",
    "families",
    "gen_promise_instance",
    "graph",
    "promises",
    "protocols",
    "replicate_input",
    "verify",
]
