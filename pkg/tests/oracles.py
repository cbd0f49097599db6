"""Independent brute-force oracles used to validate the fast implementations.

These deliberately share no code with the package: cycles come from raw
subset/permutation enumeration, eigenvalues from LAPACK, isomorphism from
trying every vertex permutation.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

import numpy as np

from chordspectra import Graph


def oracle_cycles(g: Graph):
    """Yield every cycle once as (ordered vertex tuple, chord edge list).

    Brute force: for each vertex subset and each circular order (canonicalised
    by smallest-first and direction), check consecutive adjacency, then list
    every non-cycle edge inside the subset as a chord.
    """
    verts = range(g.n)
    for k in range(3, g.n + 1):
        for subset in combinations(verts, k):
            first = subset[0]
            for rest in permutations(subset[1:]):
                if rest[0] > rest[-1]:
                    continue
                cyc = (first,) + rest
                if all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
                    cycle_edges = {frozenset((cyc[i], cyc[(i + 1) % k])) for i in range(k)}
                    chords = [
                        (u, v)
                        for u, v in combinations(sorted(subset), 2)
                        if g.has_edge(u, v) and frozenset((u, v)) not in cycle_edges
                    ]
                    yield cyc, chords


def oracle_has_chorded(g: Graph) -> bool:
    return any(len(ch) >= 1 for _, ch in oracle_cycles(g))


def oracle_has_dcc(g: Graph) -> bool:
    return any(len(ch) >= 2 for _, ch in oracle_cycles(g))


def oracle_has_dcc1(g: Graph) -> bool:
    for _, chords in oracle_cycles(g):
        count: dict[int, int] = {}
        for u, v in chords:
            count[u] = count.get(u, 0) + 1
            count[v] = count.get(v, 0) + 1
        if count and max(count.values()) >= 2:
            return True
    return False


def oracle_longest_cycle(g: Graph) -> int:
    return max((len(c) for c, _ in oracle_cycles(g)), default=0)


def oracle_has_k1p4(g: Graph) -> bool:
    for hub in range(g.n):
        nb = [v for v in range(g.n) if g.has_edge(hub, v)]
        for four in permutations(nb, 4):
            a, b, c, d = four
            if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d):
                return True
    return False


def oracle_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    edges_h = set(h.edges())
    for perm in permutations(range(g.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in edges_h
               for u, v in g.edges()):
            return True
    return False


def numpy_rho(g: Graph) -> float:
    if g.n == 0:
        raise ValueError("empty graph")
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return float(np.linalg.eigvalsh(a)[-1])


# ---------------------------------------------------------------------------
# seeded random corpora


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected(rng: random.Random, n: int, p: float) -> Graph:
    from chordspectra import is_connected

    while True:
        g = random_graph(rng, n, p)
        if is_connected(g):
            return g


def random_connected_bipartite(rng: random.Random, n: int, p: float) -> Graph:
    from chordspectra import is_connected

    while True:
        a = rng.randrange(1, n)
        edges = [(u, v) for u in range(a) for v in range(a, n) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g


def random_corpus(count: int = 1000, seed: int = 20260810) -> list[Graph]:
    """Seeded mix of connected graphs on 8..12 vertices, one fifth bipartite."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randrange(8, 13)
        p = rng.choice([0.2, 0.3, 0.4, 0.55, 0.7])
        if i % 5 == 0:
            out.append(random_connected_bipartite(rng, n, max(p, 0.4)))
        else:
            out.append(random_connected(rng, n, p))
    return out
