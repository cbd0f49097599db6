"""Undirected simple graphs on at most 64 vertices, stored as adjacency bitrows.

Vertices are labelled 0..n-1 and every adjacency row is a Python int used as a
bitset, so neighbourhood intersections and degree counts are single machine
operations.  Graphs are immutable: every operation returns a new ``Graph``.

Labelling conventions of the constructors are fixed so that constructed graphs
are byte-stable under graph6:

* ``complete_multipartite(sizes)`` labels the parts consecutively in argument
  order;
* ``join(g, h)`` keeps ``g``'s labels and shifts ``h``'s by ``g.n``;
* ``disjoint_union(gs)`` shifts each block after the previous one;
* ``coalesce(g1, u, g2, v)`` keeps ``g1``'s labels (the merged vertex is
  ``u``) and appends ``g2``'s remaining vertices in their original order.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

MAX_VERTICES = 64

_G6_MAX_SMALL = 62  # largest n encodable in a single header byte


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class Graph:
    """Immutable simple graph: vertex count plus one neighbour bitset per vertex."""

    __slots__ = ("n", "adj", "edge_count")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside supported range 0..{MAX_VERTICES}")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"adjacency row of vertex {v} references vertices >= {n}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(adj):
            m = row
            while m:
                w = (m & -m).bit_length() - 1
                if not adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
                m &= m - 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "edge_count", sum(r.bit_count() for r in adj) // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                v = (m & -m).bit_length() - 1
                yield (u, v)
                m &= m - 1

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise ValueError("cannot add a loop")
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) already present")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not present")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def relabel(self, perm: Iterable[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertices")
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            m = row
            while m:
                w = (m & -m).bit_length() - 1
                new |= 1 << perm[w]
                m &= m - 1
            rows[perm[v]] = new
        return Graph(self.n, rows)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph on the given vertices, relabelled in ascending order."""
        keep = sorted(set(vertices))
        if keep and not (0 <= keep[0] and keep[-1] < self.n):
            raise ValueError("vertex outside range")
        index = {v: i for i, v in enumerate(keep)}
        rows = [0] * len(keep)
        for v in keep:
            m = self.adj[v]
            while m:
                w = (m & -m).bit_length() - 1
                if w in index:
                    rows[index[v]] |= 1 << index[w]
                m &= m - 1
        return Graph(len(keep), rows)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        yield (mask & -mask).bit_length() - 1
        mask &= mask - 1


def _graph_nocheck(n: int, adj: tuple[int, ...], edge_count: int | None = None) -> Graph:
    """Skip invariant validation; callers must guarantee a symmetric loop-free adj."""
    g = Graph.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", adj)
    if edge_count is None:
        edge_count = sum(r.bit_count() for r in adj) // 2
    object.__setattr__(g, "edge_count", edge_count)
    return g


# ---------------------------------------------------------------------------
# constructors


def complete_graph(s: int) -> Graph:
    if s < 1:
        raise ValueError("complete graph needs at least one vertex")
    full = (1 << s) - 1
    return Graph(s, [full ^ (1 << v) for v in range(s)])


def path_graph(s: int) -> Graph:
    if s < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(s, [(i, i + 1) for i in range(s - 1)])


def cycle_graph(s: int) -> Graph:
    if s < 3:
        raise ValueError("cycle needs at least three vertices")
    edges = [(i, i + 1) for i in range(s - 1)] + [(s - 1, 0)]
    return Graph.from_edges(s, edges)


def complete_multipartite(sizes: Iterable[int]) -> Graph:
    """Complete multipartite graph; part ``i`` gets the next ``sizes[i]`` labels."""
    sizes = list(sizes)
    if len(sizes) < 2:
        raise ValueError("complete multipartite graph needs at least two parts")
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    n = sum(sizes)
    part_masks = []
    start = 0
    for s in sizes:
        part_masks.append(((1 << s) - 1) << start)
        start += s
    full = (1 << n) - 1
    rows = []
    for mask in part_masks:
        row = full ^ mask
        rows.extend([row] * mask.bit_count())
    return Graph(n, rows)


def build_basic(kind: str, sizes: Iterable[int]) -> Graph:
    """Dispatch on {complete, path, cycle, complete-multipartite}."""
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("sizes must be nonempty and all >= 1")
    if kind == "complete":
        if len(sizes) != 1:
            raise ValueError("complete graph takes exactly one size")
        return complete_graph(sizes[0])
    if kind == "path":
        if len(sizes) != 1:
            raise ValueError("path takes exactly one size")
        return path_graph(sizes[0])
    if kind == "cycle":
        if len(sizes) != 1:
            raise ValueError("cycle takes exactly one size")
        return cycle_graph(sizes[0])
    if kind == "complete-multipartite":
        return complete_multipartite(sizes)
    raise ValueError(f"unknown graph kind {kind!r}")


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus all cross edges."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError(f"join result has {n} vertices, limit is {MAX_VERTICES}")
    hmask = ((1 << h.n) - 1) << g.n
    gmask = (1 << g.n) - 1
    rows = [row | hmask for row in g.adj]
    rows += [(row << g.n) | gmask for row in h.adj]
    return Graph(n, rows)


def disjoint_union(gs: Iterable[Graph]) -> Graph:
    rows: list[int] = []
    shift = 0
    for g in gs:
        shift = len(rows)
        if shift + g.n > MAX_VERTICES:
            raise ValueError(f"union exceeds {MAX_VERTICES} vertices")
        rows.extend(row << shift for row in g.adj)
    return Graph(len(rows), rows)


def coalesce(g1: Graph, u: int, g2: Graph, v: int) -> Graph:
    """Identify vertex ``u`` of ``g1`` with vertex ``v`` of ``g2``.

    The merged vertex keeps label ``u``; it inherits the neighbours of both.
    """
    if not 0 <= u < g1.n:
        raise ValueError(f"vertex {u} outside g1")
    if not 0 <= v < g2.n:
        raise ValueError(f"vertex {v} outside g2")
    n = g1.n + g2.n - 1
    if n > MAX_VERTICES:
        raise ValueError(f"coalescence has {n} vertices, limit is {MAX_VERTICES}")
    # g2's vertex w (w != v) becomes g1.n + w, minus one if w > v.
    def rename(w: int) -> int:
        return u if w == v else g1.n + w - (1 if w > v else 0)

    rows = list(g1.adj) + [0] * (g2.n - 1)
    for w, row in enumerate(g2.adj):
        for z in _bits(row):
            if w < z:
                a, b = rename(w), rename(z)
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return Graph(n, rows)


# ---------------------------------------------------------------------------
# basic invariants


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("empty graph has no minimum degree")
    return min(row.bit_count() for row in g.adj)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def connected_components(g: Graph) -> list[int]:
    """Vertex bitmasks of the connected components, by smallest member."""
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        start = remaining & -remaining
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        remaining &= ~seen
    return comps


def is_bipartite(g: Graph) -> bool:
    color = {}
    for comp in connected_components(g):
        start = (comp & -comp).bit_length() - 1
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in _bits(g.adj[v]):
                if w not in color:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def two_core_mask(g: Graph) -> int:
    """Bitmask of the maximal subgraph with minimum degree >= 2."""
    alive = (1 << g.n) - 1
    changed = True
    while changed:
        changed = False
        for v in _bits(alive):
            if (g.adj[v] & alive).bit_count() <= 1:
                alive &= ~(1 << v)
                changed = True
    return alive


def two_core_vertices(g: Graph) -> frozenset[int]:
    return frozenset(_bits(two_core_mask(g)))


def two_core(g: Graph) -> Graph:
    """Iteratively delete vertices of degree <= 1; every cycle survives."""
    return g.induced(_bits(two_core_mask(g)))


# ---------------------------------------------------------------------------
# graph6 codec (bit-exact per the public format specification)


def graph6_encode(g: Graph) -> bytes:
    if g.n <= _G6_MAX_SMALL:
        header = bytes([g.n + 63])
    else:
        header = bytes([126, (g.n >> 12) + 63, (g.n >> 6 & 63) + 63, (g.n & 63) + 63])
    bits = []
    for col in range(1, g.n):
        colrow = g.adj[col]
        for rowi in range(col):
            bits.append(colrow >> rowi & 1)
    body = bytearray()
    for i in range(0, len(bits), 6):
        group = bits[i:i + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = val << 1 | b
        body.append(val + 63)
    return header + bytes(body)


def graph6_decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="surrogateescape")
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    data = data.strip()
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte:#04x} outside printable graph6 range", i)
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise Graph6Error("unsupported or truncated extended size header", 0)
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body_start = 4
    else:
        n = data[0] - 63
        body_start = 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph on {n} vertices exceeds the {MAX_VERTICES}-vertex limit", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - body_start < nbytes:
        raise Graph6Error("truncated adjacency data", len(data))
    if len(data) - body_start > nbytes:
        raise Graph6Error("trailing garbage after adjacency data", body_start + nbytes)
    positions = [(col, rowi) for col in range(1, n) for rowi in range(col)]
    rows = [0] * n
    bit_index = 0
    for i in range(nbytes):
        val = data[body_start + i] - 63
        for k in range(5, -1, -1):
            bit = val >> k & 1
            if bit_index < nbits:
                if bit:
                    col, rowi = positions[bit_index]
                    rows[col] |= 1 << rowi
                    rows[rowi] |= 1 << col
            elif bit:
                raise Graph6Error("nonzero padding bits", body_start + i)
            bit_index += 1
    return Graph(n, rows)
