"""Exact detectors for chorded cycles, DCCs, DCC1s and hub-over-path subgraphs.

A chord of a cycle is an edge joining two non-consecutive cycle vertices.  A
doubly chorded cycle (DCC) carries at least two chords; a DCC1 additionally
has two chords incident to a common vertex.  Detection is exhaustive DFS cycle
enumeration over the two-core, counting edges inside the cycle's vertex set at
closure; a cycle on vertex set S has exactly ``e(G[S]) - |S|`` chords, and it
supports two chords at a shared vertex iff some vertex of S has degree >= 4
inside S.

Cycles are enumerated once each, in lexicographic order of their canonical
sequence (smallest vertex first, then the smaller of the two directions), so
the first hit is the lexicographically least witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, min_degree, two_core_mask


@dataclass(frozen=True)
class CycleWitness:
    """A cycle vertex sequence plus the full chord list of that cycle."""

    cycle: tuple[int, ...]
    chords: tuple[tuple[int, int], ...]

    def validate(self, g: Graph, kind: str = "chorded") -> bool:
        """Check all witness invariants against the host graph.

        ``kind`` is one of ``chorded`` (>= 1 chord), ``dcc`` (>= 2 chords) or
        ``dcc1`` (>= 2 chords, two of them sharing a vertex).
        """
        cyc = self.cycle
        k = len(cyc)
        if k < 3 or len(set(cyc)) != k:
            return False
        if any(not 0 <= v < g.n for v in cyc):
            return False
        if any(not g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
            return False
        on_cycle = set(cyc)
        cycle_edges = {frozenset((cyc[i], cyc[(i + 1) % k])) for i in range(k)}
        for u, v in self.chords:
            if u not in on_cycle or v not in on_cycle:
                return False
            if not g.has_edge(u, v):
                return False
            if frozenset((u, v)) in cycle_edges:
                return False
        need = {"chorded": 1, "dcc": 2, "dcc1": 2}[kind]
        if len(self.chords) < need:
            return False
        if kind == "dcc1":
            incident: dict[int, int] = {}
            for u, v in self.chords:
                incident[u] = incident.get(u, 0) + 1
                incident[v] = incident.get(v, 0) + 1
            if max(incident.values()) < 2:
                return False
        return True

    def as_dict(self) -> dict:
        return {"cycle": list(self.cycle), "chords": [list(c) for c in self.chords]}


def _hub_exists(adj: tuple[int, ...], mask: int) -> bool:
    # A vertex with >= 4 neighbours inside the cycle set has >= 2 chords at it.
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        if (adj[v] & mask).bit_count() >= 4:
            return True
        m &= m - 1
    return False


def _witness(g: Graph, path: list[int], mask: int) -> CycleWitness:
    k = len(path)
    cycle_edges = {frozenset((path[i], path[(i + 1) % k])) for i in range(k)}
    chords = []
    members = sorted(path)
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if g.adj[u] >> v & 1 and frozenset((u, v)) not in cycle_edges:
                chords.append((u, v))
    return CycleWitness(tuple(path), tuple(chords))


def _find_cycle_witness(g: Graph, min_chords: int, need_shared: bool) -> CycleWitness | None:
    """First cycle, in lex order, with >= min_chords chords (shared vertex if asked)."""
    core = two_core_mask(g)
    adj = g.adj
    hit: list[int] | None = None

    def search(root: int, allowed: int) -> list[int] | None:
        path = [root]
        root_bit = 1 << root

        def rec(v: int, mask: int, internal: int) -> list[int] | None:
            if len(path) >= 3 and adj[v] & root_bit and path[1] < v:
                if internal - len(path) >= min_chords and (
                    not need_shared or _hub_exists(adj, mask)
                ):
                    return list(path)
            m = adj[v] & allowed & ~mask
            while m:
                wbit = m & -m
                m ^= wbit
                w = wbit.bit_length() - 1
                path.append(w)
                got = rec(w, mask | wbit, internal + (adj[w] & mask).bit_count())
                if got is not None:
                    return got
                path.pop()
            return None

        return rec(root, root_bit, 0)

    m = core
    while m:
        rbit = m & -m
        m ^= rbit
        r = rbit.bit_length() - 1
        hit = search(r, core & ~((rbit << 1) - 1))
        if hit is not None:
            return _witness(g, hit, _mask_of(hit))
    return None


def _mask_of(path: list[int]) -> int:
    mask = 0
    for v in path:
        mask |= 1 << v
    return mask


def find_chorded_cycle(g: Graph) -> CycleWitness | None:
    """Exhaustive search for a cycle with at least one chord."""
    return _find_cycle_witness(g, 1, False)


def find_dcc(g: Graph) -> CycleWitness | None:
    """Exhaustive search for a cycle with at least two chords."""
    return _find_cycle_witness(g, 2, False)


def find_dcc1(g: Graph) -> CycleWitness | None:
    """Exhaustive search for a cycle with two chords incident to one vertex."""
    return _find_cycle_witness(g, 2, True)


# ---------------------------------------------------------------------------
# boolean fast paths (no witness construction)


def _scan(adj: tuple[int, ...], root: int, allowed: int, min_extra: int, need_shared: bool) -> bool:
    """DFS over simple paths from ``root`` inside ``allowed``; True on first hit."""
    root_bit = 1 << root

    def rec(v: int, mask: int, internal: int, first: int, depth: int) -> bool:
        if depth >= 3 and adj[v] & root_bit and first < v:
            if internal - depth >= min_extra and (not need_shared or _hub_exists(adj, mask)):
                return True
        m = adj[v] & allowed & ~mask
        while m:
            wbit = m & -m
            m ^= wbit
            w = wbit.bit_length() - 1
            if rec(w, mask | wbit, internal + (adj[w] & mask).bit_count(),
                   w if depth == 1 else first, depth + 1):
                return True
        return False

    return rec(root, root_bit, 0, -1, 1)


def _has_cycle_with(g: Graph, min_extra: int, need_shared: bool) -> bool:
    core = two_core_mask(g)
    adj = g.adj
    m = core
    while m:
        rbit = m & -m
        m ^= rbit
        r = rbit.bit_length() - 1
        if _scan(adj, r, core & ~((rbit << 1) - 1), min_extra, need_shared):
            return True
    return False


def _has_cycle_with_through(g: Graph, x: int, min_extra: int, need_shared: bool) -> bool:
    core = two_core_mask(g)
    if not core >> x & 1:
        return False
    return _scan(g.adj, x, core & ~(1 << x), min_extra, need_shared)


def has_chorded_cycle(g: Graph) -> bool:
    return _has_cycle_with(g, 1, False)


def has_dcc(g: Graph) -> bool:
    return _has_cycle_with(g, 2, False)


def has_dcc1(g: Graph) -> bool:
    """Hub-organised search: a DCC1 with both chords at ``v`` is a path between
    two neighbours of ``v`` avoiding ``v`` with >= 2 further neighbours of ``v``
    inside, plus ``v`` itself."""
    core = two_core_mask(g)
    adj = g.adj
    hubs = core
    while hubs:
        vbit = hubs & -hubs
        hubs ^= vbit
        v = vbit.bit_length() - 1
        nb = adj[v] & core
        if nb.bit_count() < 4:
            continue
        if _hub_paths(adj, v, nb, core & ~vbit):
            return True
    return False


def _hub_paths(adj: tuple[int, ...], v: int, nb: int, allowed: int) -> bool:
    starts = nb

    def rec(w: int, mask: int, inner: int, start_bit: int) -> bool:
        m = adj[w] & allowed & ~mask
        while m:
            zbit = m & -m
            m ^= zbit
            z = zbit.bit_length() - 1
            z_is_nb = bool(nb & zbit)
            if z_is_nb and inner >= 2 and zbit != start_bit:
                return True
            if rec(z, mask | zbit, inner + (1 if z_is_nb else 0), start_bit):
                return True
        return False

    s = starts
    while s:
        sbit = s & -s
        s ^= sbit
        if rec(sbit.bit_length() - 1, sbit, 0, sbit):
            return True
    return False


def has_chorded_cycle_through(g: Graph, x: int) -> bool:
    """True iff some chorded cycle passes through ``x`` (incremental scan)."""
    return _has_cycle_with_through(g, x, 1, False)


def has_dcc_through(g: Graph, x: int) -> bool:
    return _has_cycle_with_through(g, x, 2, False)


def has_dcc1_through(g: Graph, x: int) -> bool:
    return _has_cycle_with_through(g, x, 2, True)


# ---------------------------------------------------------------------------
# hub-over-path subgraphs (a vertex joined to all four vertices of a path)


def find_k1_join_p4(g: Graph) -> tuple[int, int, int, int, int] | None:
    """Least (hub, a, b, c, d) with hub adjacent to all of the path a-b-c-d."""
    adj = g.adj
    for hub in range(g.n):
        nb = adj[hub]
        if nb.bit_count() < 4:
            continue
        got = _p4_in(adj, nb, must_contain=-1)
        if got is not None:
            return (hub, *got)
    return None


def has_k1_join_p4(g: Graph) -> bool:
    return find_k1_join_p4(g) is not None


def has_k1_join_p4_with(g: Graph, x: int) -> bool:
    """True iff some hub-over-path copy uses ``x`` (as hub or on the path)."""
    adj = g.adj
    if _p4_in(adj, adj[x], must_contain=-1) is not None:
        return True
    hubs = adj[x]
    while hubs:
        hbit = hubs & -hubs
        hubs ^= hbit
        h = hbit.bit_length() - 1
        nb = adj[h]
        if nb.bit_count() >= 4 and _p4_in(adj, nb, must_contain=x) is not None:
            return True
    return False


def _p4_in(adj: tuple[int, ...], nb: int, must_contain: int) -> tuple[int, int, int, int] | None:
    """Least path a-b-c-d inside the vertex set ``nb`` (edges from the host graph)."""
    ma = nb
    while ma:
        abit = ma & -ma
        ma ^= abit
        a = abit.bit_length() - 1
        mb = adj[a] & nb & ~abit
        while mb:
            bbit = mb & -mb
            mb ^= bbit
            b = bbit.bit_length() - 1
            mc = adj[b] & nb & ~abit & ~bbit
            while mc:
                cbit = mc & -mc
                mc ^= cbit
                c = cbit.bit_length() - 1
                md = adj[c] & nb & ~abit & ~bbit & ~cbit
                while md:
                    dbit = md & -md
                    md ^= dbit
                    d = dbit.bit_length() - 1
                    if must_contain < 0 or must_contain in (a, b, c, d):
                        return (a, b, c, d)
    return None


# ---------------------------------------------------------------------------
# longest cycles and the classical bounds


def longest_cycle(g: Graph) -> int:
    """Exact maximum cycle length (0 if acyclic), by subset dynamic programming."""
    return _longest_cycle_mask(g)[0]


def _longest_cycle_mask(g: Graph) -> tuple[int, int]:
    core = two_core_mask(g)
    if core == 0:
        return 0, 0
    if g.n > 20:
        raise ValueError("exhaustive longest-cycle search is limited to 20 vertices")
    adj = g.adj
    size = 1 << g.n
    dp = [0] * size
    m = core
    while m:
        vbit = m & -m
        m ^= vbit
        dp[vbit] = vbit
    best_len, best_mask = 0, 0
    for mask in range(1, size):
        ends = dp[mask]
        if not ends:
            continue
        root_bit = mask & -mask
        root = root_bit.bit_length() - 1
        k = mask.bit_count()
        if k >= 3 and ends & adj[root] and k > best_len:
            best_len, best_mask = k, mask
        cand = 0
        e = ends
        while e:
            ebit = e & -e
            e ^= ebit
            cand |= adj[ebit.bit_length() - 1]
        cand &= core & ~mask & ~((root_bit << 1) - 1)
        while cand:
            wbit = cand & -cand
            cand ^= wbit
            if adj[wbit.bit_length() - 1] & ends:
                dp[mask | wbit] |= wbit
    return best_len, best_mask


@dataclass(frozen=True)
class BondyCheck:
    holds: bool
    cycle_length: int
    off_cycle_edges: int
    bound: int

    def as_dict(self) -> dict:
        return {
            "holds": self.holds,
            "cycle_length": self.cycle_length,
            "off_cycle_edges": self.off_cycle_edges,
            "bound": self.bound,
        }


def bondy_bound_holds(g: Graph) -> BondyCheck:
    """Count edges with at most one endpoint on a longest cycle against
    ``floor(c(n-c)/2)``; a sanity oracle, expected to always hold."""
    c, mask = _longest_cycle_mask(g)
    if c == 0:
        raise ValueError("graph is acyclic")
    inside = 0
    m = mask
    while m:
        vbit = m & -m
        m ^= vbit
        inside += (g.adj[vbit.bit_length() - 1] & mask).bit_count()
    off = g.edge_count - inside // 2
    bound = c * (g.n - c) // 2
    return BondyCheck(off <= bound, c, off, bound)


def check_edge_bound_dcc(g: Graph) -> bool:
    """DCC-free graphs have at most 2n-3 edges; vacuously true otherwise."""
    if has_dcc(g):
        return True
    return g.edge_count <= 2 * g.n - 3


def check_edge_bound_dcc1(g: Graph) -> bool:
    """DCC1-free graphs on n >= 6 vertices have at most 3n-9 edges."""
    if g.n < 6:
        raise ValueError("edge bound for DCC1-free graphs needs n >= 6")
    if has_dcc1(g):
        return True
    return g.edge_count <= 3 * g.n - 9


def czipszer_mindegree_check(g: Graph) -> bool:
    """Minimum degree 3 forces a chorded cycle and 4 forces a DCC1."""
    if g.n == 0:
        return True
    d = min_degree(g)
    if d >= 3 and not has_chorded_cycle(g):
        return False
    if d >= 4 and not has_dcc1(g):
        return False
    return True
