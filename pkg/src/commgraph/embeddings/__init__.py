"""The seven gap-instance constructions and their JSON round-trip."""

from __future__ import annotations

from ..bits import BitVec
from ..promises import PromisePair, promise_from_json
from .base import (
    Embedding,
    LazyOracle,
    MaterializationCapExceeded,
    ParameterError,
    UnsupportedQuery,
    gap_label,
    lazy_answer,
    materialize,
)
from .clique_hiding import (
    CliqueHidingEmbedding,
    CliqueHidingParams,
    build_clique_hiding,
    edge_counting_block_side,
    triangle_freeness_block_side,
)
from .connectivity import ConnectivityEmbedding, ConnectivityParams, build_connectivity
from .degree_only import DegreeOnlyEmbedding, DegreeOnlyParams, build_degree_only
from .moments_block import MomentsBlockEmbedding, MomentsBlockParams, build_moments_block
from .moments_hiding import (
    MomentsHidingEmbedding,
    MomentsHidingParams,
    build_moments_hiding,
    graph_moment,
)
from .rclique import RCliqueEmbedding, RCliqueParams, build_r_clique
from .triangle import TriangleEmbedding, TriangleParams, build_triangle

EMBEDDING_CLASSES: dict[str, type[Embedding]] = {
    cls.kind: cls
    for cls in (
        CliqueHidingEmbedding,
        TriangleEmbedding,
        RCliqueEmbedding,
        ConnectivityEmbedding,
        DegreeOnlyEmbedding,
        MomentsHidingEmbedding,
        MomentsBlockEmbedding,
    )
}

ALL_KINDS = tuple(EMBEDDING_CLASSES)


def instance_to_json(inst: Embedding) -> dict:
    """Self-contained description: same JSON always rebuilds the same graph."""
    return {
        "kind": inst.kind,
        "params": inst.params_json(),
        "x": inst.pp.x.to_hex(),
        "y": inst.pp.y.to_hex(),
        "n_bits": inst.pp.n_bits,
        "promise": inst.pp.promise.to_json(),
        "seed": inst.seed,
    }


def instance_from_json(obj: dict) -> Embedding:
    kind = obj["kind"]
    if kind not in EMBEDDING_CLASSES:
        raise ParameterError(f"unknown embedding kind {kind!r}")
    n_bits = obj["n_bits"]
    pp = PromisePair(
        BitVec.from_hex(obj["x"], n_bits),
        BitVec.from_hex(obj["y"], n_bits),
        promise_from_json(obj["promise"]),
    )
    return EMBEDDING_CLASSES[kind].from_params_json(obj["params"], pp, obj.get("seed"))


__all__ = [
    "ALL_KINDS",
    "CliqueHidingEmbedding",
    "CliqueHidingParams",
    "ConnectivityEmbedding",
    "ConnectivityParams",
    "DegreeOnlyEmbedding",
    "DegreeOnlyParams",
    "EMBEDDING_CLASSES",
    "Embedding",
    "LazyOracle",
    "MaterializationCapExceeded",
    "MomentsBlockEmbedding",
    "MomentsBlockParams",
    "MomentsHidingEmbedding",
    "MomentsHidingParams",
    "ParameterError",
    "RCliqueEmbedding",
    "RCliqueParams",
    "TriangleEmbedding",
    "TriangleParams",
    "UnsupportedQuery",
    "build_clique_hiding",
    "build_connectivity",
    "build_degree_only",
    "build_moments_block",
    "build_moments_hiding",
    "build_r_clique",
    "build_triangle",
    "edge_counting_block_side",
    "gap_label",
    "graph_moment",
    "instance_from_json",
    "instance_to_json",
    "lazy_answer",
    "materialize",
    "triangle_freeness_block_side",
]
