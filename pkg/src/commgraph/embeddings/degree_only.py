"""Degree-query-only gap instances.

Three equal thirds U, V, W, each split into blocks of size k.  On the
disjoint side U is isolated and each V_i x W_i is complete bipartite; on
the unique-intersection side the hot block U_j is completely joined to
V and W and nothing else has edges.  Either way every V and W vertex has
degree exactly k, so only degrees of U vertices reveal anything, and a
single bit exchange settles them.

Only degree queries are served lazily: answering a neighbor or pair
query cheaply would require locating the hot block, which is exactly
what the construction is hiding.  Materialization still produces the
full graph for offline verification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..promises import Disjoint, PromisePair, UniqueIntersection
from .base import Embedding, JointAccess, ParameterError


@dataclass(frozen=True)
class DegreeOnlyParams:
    n: int
    k: int  # block size; n is padded up to a multiple of 3k

    def __post_init__(self):
        if self.k < 1:
            raise ParameterError("k must be >= 1")
        if self.n < 1:
            raise ParameterError("n must be >= 1")


class DegreeOnlyEmbedding(Embedding):
    kind = "degree-only"
    comm_function = "disj"
    supported = frozenset({"degree"})

    def __init__(self, params: DegreeOnlyParams, pp: PromisePair, seed=None):
        if not isinstance(pp.promise, (Disjoint, UniqueIntersection)):
            raise ParameterError("promise must be disjoint or unique-intersection")
        super().__init__(pp, seed)
        self.params = params
        self.k = params.k
        unit = 3 * self.k
        self.n = ((params.n + unit - 1) // unit) * unit
        self.pad = self.n - params.n
        self.blocks = self.n // unit
        if pp.n_bits != self.blocks:
            raise ParameterError(
                f"input length {pp.n_bits} != block count {self.blocks}"
            )
        self.third = self.n // 3
        hot = None
        for j in range(self.blocks):
            if pp.x[j] & pp.y[j]:
                hot = j
                break
        self._hot = hot

    def degree_of(self, v: int, joint: JointAccess) -> int:
        if v >= self.third:  # V or W: degree k on both promise sides
            return self.k
        j = v // self.k
        return (2 * self.n) // 3 if joint(j) else 0

    def neighbor_of(self, v: int, i: int, joint: JointAccess) -> Optional[int]:
        # Materialization path only; the oracle rejects neighbor queries.
        k, third, hot = self.k, self.third, self._hot
        if hot is None:
            if v < third:
                return None
            in_v = v < 2 * third
            block = (v - (third if in_v else 2 * third)) // k
            partner_base = (2 * third if in_v else third) + block * k
            return partner_base + (i - 1) if i <= k else None
        if v < third:
            if v // k != hot:
                return None
            if i <= 2 * third:
                return third + (i - 1)
            return None
        return hot * k + (i - 1) if i <= k else None

    def pair_of(self, u: int, v: int, joint: JointAccess) -> int:
        u, v = (u, v) if u < v else (v, u)
        k, third, hot = self.k, self.third, self._hot
        if hot is None:
            if third <= u < 2 * third and v >= 2 * third:
                return 1 if (u - third) // k == (v - 2 * third) // k else 0
            return 0
        if u < third and v >= third:
            return 1 if u // k == hot else 0
        return 0

    def edge_count(self) -> int:
        return (self.n * self.k) // 3 if self._hot is None else (2 * self.n * self.k) // 3

    def params_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "blocks": self.blocks,
            "pad": self.pad,
        }

    @classmethod
    def from_params_json(cls, params: dict, pp: PromisePair, seed=None):
        return cls(DegreeOnlyParams(n=params["n"], k=params["k"]), pp, seed)


def build_degree_only(
    params: DegreeOnlyParams, pp: PromisePair, seed=None
) -> DegreeOnlyEmbedding:
    return DegreeOnlyEmbedding(params, pp, seed)
