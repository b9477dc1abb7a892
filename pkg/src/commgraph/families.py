"""Canonical deterministic base-graph families.

Used by builders and the CLI whenever a construction needs an arbitrary
but reproducible base graph.  Neighbor orderings are ascending by id.
"""

from __future__ import annotations

from .graph import ExplicitGraph


def lex_graph(n: int, m: int) -> ExplicitGraph:
    """The first m edges of K_n in lexicographic order."""
    if m > n * (n - 1) // 2:
        raise ValueError(f"m={m} exceeds the {n * (n - 1) // 2} edges of K_{n}")
    adj: list[list[int]] = [[] for _ in range(n)]
    count = 0
    for u in range(n):
        for v in range(u + 1, n):
            if count == m:
                break
            adj[u].append(v)
            adj[v].append(u)
            count += 1
        if count == m:
            break
    return ExplicitGraph(n, [sorted(row) for row in adj])


def matching_graph(pairs: int) -> ExplicitGraph:
    """A perfect matching on 2*pairs vertices: edges (0,1), (2,3), ..."""
    adj = []
    for v in range(2 * pairs):
        adj.append([v + 1] if v % 2 == 0 else [v - 1])
    return ExplicitGraph(2 * pairs, adj)


def path_graph(n: int) -> ExplicitGraph:
    adj = []
    for v in range(n):
        row = []
        if v > 0:
            row.append(v - 1)
        if v < n - 1:
            row.append(v + 1)
        adj.append(row)
    return ExplicitGraph(n, adj)


def complete_graph(n: int) -> ExplicitGraph:
    return lex_graph(n, n * (n - 1) // 2)


def complete_bipartite_graph(a: int, b: int) -> ExplicitGraph:
    """K_{a,b}: side one is vertices [0, a), side two is [a, a+b)."""
    adj = [[a + j for j in range(b)] for _ in range(a)]
    adj += [list(range(a)) for _ in range(b)]
    return ExplicitGraph(a + b, adj)


def cycle_graph(n: int) -> ExplicitGraph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    adj = [sorted(((v - 1) % n, (v + 1) % n)) for v in range(n)]
    return ExplicitGraph(n, adj)


def star_graph(leaves: int) -> ExplicitGraph:
    """K_{1,leaves} with the center at vertex 0."""
    adj = [list(range(1, leaves + 1))] + [[0] for _ in range(leaves)]
    return ExplicitGraph(leaves + 1, adj)


FAMILY_BUILDERS = {
    "lex": lambda desc: lex_graph(desc["n"], desc["m"]),
    "matching": lambda desc: matching_graph(desc["pairs"]),
    "path": lambda desc: path_graph(desc["n"]),
}


def base_graph_from_json(desc: dict) -> ExplicitGraph:
    kind = desc["kind"]
    if kind == "explicit":
        return ExplicitGraph(desc["n"], desc["adj"])
    if kind in FAMILY_BUILDERS:
        return FAMILY_BUILDERS[kind](desc)
    raise ValueError(f"unknown base graph family {kind!r}")


def base_graph_to_json(g: ExplicitGraph, family: dict | None) -> dict:
    """Serialize a base graph: by family descriptor when one is known,
    otherwise as explicit adjacency."""
    if family is not None:
        return family
    return {"kind": "explicit", "n": g.n, "adj": [list(row) for row in g.adj]}
