import random

import pytest

from commgraph.embeddings import lazy_answer
from commgraph.graph import Pair, RandomEdge

from helpers import compare_all_queries, random_instance

KINDS = [
    "clique-hiding",
    "triangle",
    "r-clique",
    "connectivity",
    "degree-only",
    "moments-hiding",
    "moments-block",
]


@pytest.mark.parametrize("kind", KINDS)
def test_lazy_matches_materialized(kind):
    rng = random.Random(sum(map(ord, kind)))
    for _ in range(15):
        inst = random_instance(kind, rng.getrandbits(64))
        assert inst.n <= 200
        assert compare_all_queries(inst) > 0


@pytest.mark.parametrize("kind", ["triangle", "r-clique", "connectivity"])
def test_random_edge_lands_on_real_edges(kind):
    rng = random.Random(13)
    for _ in range(5):
        inst = random_instance(kind, rng.getrandbits(64))
        g = inst.materialize()
        if g.m == 0:
            continue
        draw = random.Random(1)
        for _ in range(50):
            e = lazy_answer(inst, RandomEdge(), draw)
            assert e.u < e.v
            assert g.has_edge(e.u, e.v)


def test_pair_symmetry_property():
    rng = random.Random(17)
    for kind in KINDS:
        inst = random_instance(kind, rng.getrandbits(64))
        if "pair" not in inst.supported:
            continue
        for _ in range(50):
            u, v = rng.randrange(inst.n), rng.randrange(inst.n)
            assert lazy_answer(inst, Pair(u, v)) == lazy_answer(inst, Pair(v, u))


def test_gap_label_matches_comm_function():
    from commgraph.promises import disj, inter_k

    rng = random.Random(23)
    for kind in KINDS:
        for _ in range(10):
            inst = random_instance(kind, rng.getrandbits(64))
            if inst.comm_function == "disj":
                assert inst.gap_label() == disj(inst.pp.x, inst.pp.y)
            else:
                assert inst.gap_label() == inter_k(inst.pp.x, inst.pp.y, inst.pp.promise.k)
