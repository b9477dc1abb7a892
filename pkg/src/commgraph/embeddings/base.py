"""Shared machinery for the gap-instance constructions.

Every construction answers queries lazily through one code path that
reads the two-party inputs only via a ``joint(coord) -> 0/1`` callback
returning x_c AND y_c.  The local oracle passes a direct reader; the
two-party simulation passes an exchanging callback that charges bits.
Materialization drives the same lazy neighbor rules, so neighbor
orderings match position by position.
"""

from __future__ import annotations

import os
import random
from typing import Callable, Optional

from ..graph import (
    ContractViolation,
    Degree,
    DegreeIs,
    EdgeIs,
    ExplicitGraph,
    Neighbor,
    NeighborIs,
    Pair,
    PairIs,
    Query,
    QueryAnswer,
    check_query,
    query_kind,
    sample_edge_by_degrees,
)
from ..promises import PromisePair

JointAccess = Callable[[int], int]

DEFAULT_MAX_VERTICES = 10**6
DEFAULT_MAX_EDGES = 10**7

ENV_MAX_VERTICES = "COMMGRAPH_MAX_VERTICES"
ENV_MAX_EDGES = "COMMGRAPH_MAX_EDGES"


class ParameterError(ValueError):
    """Construction parameters violate a named constraint."""


class UnsupportedQuery(ValueError):
    """Query kind not supported by this construction."""


class MaterializationCapExceeded(RuntimeError):
    """Instance too large to materialize; it remains usable lazily."""


def materialization_caps() -> tuple[int, int]:
    max_n = int(os.environ.get(ENV_MAX_VERTICES, DEFAULT_MAX_VERTICES))
    max_m = int(os.environ.get(ENV_MAX_EDGES, DEFAULT_MAX_EDGES))
    return max_n, max_m


class Embedding:
    """A parameterized construction applied to one promise input pair."""

    kind: str = "abstract"
    comm_function: str = "disj"  # "disj" or "inter_k"
    supported: frozenset = frozenset()

    def __init__(self, pp: PromisePair, seed: Optional[int] = None):
        self.pp = pp
        self.seed = seed
        self.n = 0  # subclasses set the vertex count

    # -- the lazy rules -------------------------------------------------

    def degree_of(self, v: int, joint: JointAccess) -> int:
        raise NotImplementedError

    def neighbor_of(self, v: int, i: int, joint: JointAccess) -> Optional[int]:
        raise NotImplementedError

    def pair_of(self, u: int, v: int, joint: JointAccess) -> int:
        raise NotImplementedError

    def input_free_degrees(self) -> list[int]:
        """Degree table independent of the inputs; only constructions with
        such a table support random edge queries."""
        raise UnsupportedQuery(f"{self.kind} has input-dependent degrees")

    def edge_count(self) -> int:
        """Exact number of edges, computed analytically."""
        raise NotImplementedError

    # -- query answering ------------------------------------------------

    def direct_joint(self, c: int) -> int:
        return self.pp.x[c] & self.pp.y[c]

    def answer(
        self,
        q: Query,
        joint: Optional[JointAccess] = None,
        rng: Optional[random.Random] = None,
    ) -> QueryAnswer:
        kind = query_kind(q)
        if kind not in self.supported:
            raise UnsupportedQuery(f"{self.kind} does not answer {kind} queries")
        check_query(q, self.n)
        if joint is None:
            joint = self.direct_joint
        if isinstance(q, Degree):
            return DegreeIs(self.degree_of(q.v, joint))
        if isinstance(q, Neighbor):
            return NeighborIs(self.neighbor_of(q.v, q.i, joint))
        if isinstance(q, Pair):
            if q.u == q.v:
                return PairIs(0)
            return PairIs(self.pair_of(q.u, q.v, joint))
        if rng is None:
            raise ContractViolation("RandomEdge needs a randomness stream")
        u, v = sample_edge_by_degrees(
            self.input_free_degrees(),
            lambda w, i: self.neighbor_of(w, i, joint),
            rng,
        )
        return EdgeIs(u, v)

    # -- materialization and labels --------------------------------------

    def materialize(self) -> ExplicitGraph:
        max_n, max_m = materialization_caps()
        if self.n > max_n:
            raise MaterializationCapExceeded(
                f"{self.n} vertices exceeds cap {max_n}; instance is lazy-only"
            )
        m = self.edge_count()
        if m > max_m:
            raise MaterializationCapExceeded(
                f"{m} edges exceeds cap {max_m}; instance is lazy-only"
            )
        joint = self.direct_joint
        adj = []
        for v in range(self.n):
            d = self.degree_of(v, joint)
            adj.append([self.neighbor_of(v, i, joint) for i in range(1, d + 1)])
        return ExplicitGraph(self.n, adj)

    def gap_label(self) -> int:
        """The communication function's value, computed from the inputs."""
        if self.comm_function == "disj":
            return 0 if self.pp.intersecting else 1
        return 1 if self.pp.intersecting else 0

    def label_for(self, intersecting: bool) -> int:
        """Label a guess of the promise side in this construction's convention."""
        if self.comm_function == "disj":
            return 0 if intersecting else 1
        return 1 if intersecting else 0

    # -- serialization ----------------------------------------------------

    def params_json(self) -> dict:
        raise NotImplementedError

    def __repr__(self) -> str:
        side = "intersecting" if self.pp.intersecting else "disjoint"
        return f"<{self.kind} n={self.n} N={self.pp.n_bits} {side}>"


def lazy_answer(
    inst: Embedding, q: Query, rng: Optional[random.Random] = None
) -> QueryAnswer:
    """Answer a query from the inputs without materializing the graph."""
    return inst.answer(q, None, rng)


class LazyOracle:
    """Counter-carrying oracle over an instance's lazy rules.

    Safe for concurrent readers when each owns its oracle (and hence its
    counter and randomness stream); the instance itself is immutable.
    """

    def __init__(self, inst: Embedding, rng: Optional[random.Random] = None):
        self.instance = inst
        self.n = inst.n
        self.supported = inst.supported
        self.rng = rng
        self.queries_made = 0

    def answer(self, q: Query) -> QueryAnswer:
        ans = self.instance.answer(q, None, self.rng)
        self.queries_made += 1
        return ans


def materialize(inst: Embedding) -> ExplicitGraph:
    return inst.materialize()


def gap_label(inst: Embedding) -> int:
    return inst.gap_label()
