"""Canonical enumeration of connected graphs and exhaustive theorem checks.

Enumeration grows one vertex at a time: every connected graph on n vertices
arises from a connected graph on n-1 vertices by deleting a non-cut vertex, so
extending each (n-1)-level representative by a new vertex joined to every
nonempty neighbour subset and deduplicating by canonical form yields exactly
one representative per isomorphism class.  Structure-free classes (no DCC, no
DCC1, no hub-over-path) are closed under vertex deletion, so their levels
chain the same way with the added-vertex incremental detectors as the filter;
a forbidden structure in a child must pass through the new vertex.

Canonical forms come from individualisation-refinement: refine an ordered
partition by neighbour counts until stable, branch on the first non-singleton
cell (one branch per twin class; swapping twins is an automorphism), and take
the lexicographically least relabelled adjacency over all leaves.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .chords import (
    has_chorded_cycle_through,
    has_dcc,
    has_dcc_through,
    has_dcc1,
    has_dcc1_through,
    has_k1_join_p4,
    has_k1_join_p4_with,
)
from .families import FamilySpec, build_family, hn_cubic
from .graphs import Graph, _graph_nocheck, complete_graph, graph6_encode, is_bipartite
from .spectral import (
    IntPolynomial,
    SpectralResult,
    char_poly,
    closed_form_radius,
    count_roots_between,
    largest_root_interval,
    largest_real_root,
    poly_gcd,
    quotient_matrix,
    separation_threshold,
    spectral_radius,
)

MAX_ENUM_N = 10

CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117, 261080)  # n = 1..9


# ---------------------------------------------------------------------------
# refinement and canonical labelling


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Stable ordered partition: split every cell by neighbour counts into all
    current cells until nothing changes; subcell order follows the count keys."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        changed = False
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                key = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) > 1:
                changed = True
            for key in sorted(groups):
                new_cells.append(groups[key])
        cells = new_cells
        if not changed:
            return cells


def coarsest_equitable_partition(g: Graph) -> list[frozenset[int]]:
    """Coarsest equitable vertex partition (stable degree refinement)."""
    if g.n == 0:
        return []
    return [frozenset(c) for c in _refine(g.adj, [list(range(g.n))])]


def _twin_classes(adj: tuple[int, ...], cell: list[int]) -> list[int]:
    """One representative per twin class inside the cell; swapping twins
    (equal neighbourhoods, with or without the mutual edge) is an automorphism."""
    reps: list[int] = []
    for v in cell:
        for r in reps:
            if adj[v] == adj[r]:
                break
            if adj[v] ^ (1 << r) == adj[r] ^ (1 << v):
                break
        else:
            reps.append(v)
    return reps


def _canonical_rows(g: Graph) -> tuple[int, ...]:
    n = g.n
    if n <= 1:
        return g.adj
    adj = g.adj
    best: tuple[int, ...] | None = None

    def leaf(cells: list[list[int]]) -> None:
        nonlocal best
        pos = [0] * n
        for i, cell in enumerate(cells):
            pos[cell[0]] = i
        rows = [0] * n
        for i, cell in enumerate(cells):
            m = adj[cell[0]]
            r = 0
            while m:
                wbit = m & -m
                m ^= wbit
                r |= 1 << pos[wbit.bit_length() - 1]
            rows[i] = r
        t = tuple(rows)
        if best is None or t < best:
            best = t

    def descend(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            leaf(cells)
            return
        rest = cells[idx]
        for v in _twin_classes(adj, rest):
            descend(cells[:idx] + [[v], [w for w in rest if w != v]] + cells[idx + 1:])

    descend([list(range(n))])
    assert best is not None
    return best


def canonical_graph(g: Graph) -> Graph:
    """Isomorphism-invariant representative with the least adjacency encoding."""
    return _graph_nocheck(g.n, _canonical_rows(g), g.edge_count)


def canonical_form(g: Graph) -> bytes:
    """Canonical graph6 bytes; equal iff the graphs are isomorphic."""
    return graph6_encode(canonical_graph(g))


# ---------------------------------------------------------------------------
# enumeration


_FILTERS: dict[str, Callable[[Graph, int], bool]] = {
    # incremental scans: parent is structure-free, so any forbidden structure
    # in the child passes through the new vertex
    "dcc-free": lambda g, x: not has_dcc_through(g, x),
    "dcc1-free": lambda g, x: not has_dcc1_through(g, x),
    "chorded-free": lambda g, x: not has_chorded_cycle_through(g, x),
    "k1p4-free": lambda g, x: not has_k1_join_p4_with(g, x),
}

_LEVEL_CACHE: dict[tuple[int, str | None], tuple[Graph, ...]] = {}


def _children(parent: Graph) -> Iterator[Graph]:
    x = parent.n
    xbit = 1 << x
    base = parent.adj
    e0 = parent.edge_count
    for mask in range(1, xbit):
        rows = tuple(
            (base[v] | xbit) if mask >> v & 1 else base[v] for v in range(x)
        ) + (mask,)
        yield _graph_nocheck(x + 1, rows, e0 + mask.bit_count())


def _expand_parents(parents: tuple[Graph, ...], filter_name: str | None) -> dict[bytes, Graph]:
    keep = _FILTERS[filter_name] if filter_name is not None else None
    out: dict[bytes, Graph] = {}
    for parent in parents:
        x = parent.n
        for child in _children(parent):
            if keep is not None and not keep(child, x):
                continue
            canon = canonical_graph(child)
            out.setdefault(graph6_encode(canon), canon)
    return out


def _expand_chunk(args: tuple[tuple[tuple[int, tuple[int, ...]], ...], str | None]):
    raw, filter_name = args
    parents = tuple(_graph_nocheck(n, rows) for n, rows in raw)
    return {k: (g.n, g.adj) for k, g in _expand_parents(parents, filter_name).items()}


def enumerate_connected(n: int, filter_name: str | None = None,
                        jobs: int = 1) -> tuple[Graph, ...]:
    """One canonically-labelled representative per isomorphism class of
    connected graphs on ``n`` vertices, sorted by canonical form.

    ``filter_name`` restricts to a vertex-deletion-closed class:
    ``dcc-free``, ``dcc1-free``, ``chorded-free`` or ``k1p4-free``.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}")
    if filter_name is not None and filter_name not in _FILTERS:
        raise ValueError(f"unknown filter {filter_name!r}")
    key = (n, filter_name)
    if key in _LEVEL_CACHE:
        return _LEVEL_CACHE[key]
    if n == 1:
        level = (Graph(1, [0]),)
    else:
        parents = enumerate_connected(n - 1, filter_name)
        if jobs > 1 and len(parents) >= 4 * jobs:
            merged: dict[bytes, Graph] = {}
            from concurrent.futures import ProcessPoolExecutor

            chunks = [parents[i::jobs * 4] for i in range(jobs * 4)]
            payload = [
                (tuple((p.n, p.adj) for p in chunk), filter_name)
                for chunk in chunks if chunk
            ]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for part in pool.map(_expand_chunk, payload):
                    for k, (cn, rows) in part.items():
                        merged.setdefault(k, _graph_nocheck(cn, rows))
            level = tuple(g for _, g in sorted(merged.items()))
        else:
            seen = _expand_parents(parents, filter_name)
            level = tuple(g for _, g in sorted(seen.items()))
    _LEVEL_CACHE[key] = level
    return level


# ---------------------------------------------------------------------------
# exact spectral-radius comparison (for resolving numeric ties)


def _quotient_poly(g: Graph) -> IntPolynomial:
    return char_poly(quotient_matrix(g, coarsest_equitable_partition(g)))


def exact_radius_order(g1: Graph, g2: Graph) -> int:
    """-1, 0 or +1 comparing true spectral radii of connected graphs exactly.

    Works on the characteristic polynomials of the coarsest equitable
    quotients (whose largest roots are the spectral radii), shrinking isolated
    root brackets until they separate or a shared root of the gcd proves
    equality.
    """
    p1, p2 = _quotient_poly(g1), _quotient_poly(g2)
    if p1 == p2:
        return 0
    width = Fraction(1, 10**12)
    for _ in range(8):
        lo1, hi1 = largest_root_interval(p1, width)
        lo2, hi2 = largest_root_interval(p2, width)
        if hi1 <= lo2:
            return -1
        if hi2 <= lo1:
            return 1
        g = poly_gcd(p1, p2)
        if g.degree >= 1:
            lo, hi = max(lo1, lo2), min(hi1, hi2)
            if count_roots_between(g, lo, hi) >= 1:
                return 0
        width = width * width
    raise RuntimeError("exact radius comparison failed to separate the roots")


# ---------------------------------------------------------------------------
# verification reports


@dataclass
class VerificationReport:
    """Machine-readable outcome of one exhaustive theorem or lemma check."""

    theorem: str
    n: int
    graphs_scanned: int
    bound_value: float
    max_rho: float | None = None
    argmax_canonical: str | None = None
    argmax_unique: bool | None = None
    violations: list[dict] = field(default_factory=list)
    runtime_seconds: float = 0.0
    tolerances: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "graphs_scanned": self.graphs_scanned,
            "max_rho": self.max_rho,
            "argmax_canonical": self.argmax_canonical,
            "argmax_unique": self.argmax_unique,
            "bound_value": self.bound_value,
            "violations": self.violations,
            "verified": self.verified,
            "runtime_seconds": self.runtime_seconds,
            "tolerances": self.tolerances,
            "details": self.details,
        }


def _g6(g: Graph) -> str:
    return graph6_encode(g).decode("ascii")


def _scan_max_radius(
    graphs: tuple[Graph, ...], compute_tol: float
) -> tuple[list[tuple[Graph, SpectralResult]], int]:
    """Radii for all graphs plus the index of the maximum."""
    results = [(g, spectral_radius(g, compute_tol)) for g in graphs]
    best = max(range(len(results)), key=lambda i: results[i][1].rho)
    return results, best


def _resolve_argmax(
    results: list[tuple[Graph, SpectralResult]], best: int
) -> tuple[bool, list[str]]:
    """Uniqueness of the argmax; numeric near-ties are settled exactly via
    quotient polynomials.  Returns (unique, list of exactly-tied graph6)."""
    g_best, r_best = results[best]
    near = [
        (g, r) for i, (g, r) in enumerate(results)
        if i != best and r_best.rho - r.rho <= separation_threshold(r_best, r)
    ]
    tied = []
    for g, _ in near:
        if exact_radius_order(g_best, g) == 0:
            tied.append(_g6(g))
    return not tied, tied


def _report_extremal(
    theorem: str,
    n: int,
    filter_name: str,
    expected: Graph,
    bound_value: float,
    bound_tol: float,
    compute_tol: float,
    jobs: int,
) -> VerificationReport:
    start = time.perf_counter()
    graphs = enumerate_connected(n, filter_name, jobs=jobs)
    results, best = _scan_max_radius(graphs, compute_tol)
    g_best, r_best = results[best]
    report = VerificationReport(
        theorem=theorem,
        n=n,
        graphs_scanned=len(graphs),
        bound_value=bound_value,
        max_rho=r_best.rho,
        argmax_canonical=_g6(g_best),
        tolerances={"compute": compute_tol, "compare": bound_tol},
    )
    expected_bytes = canonical_form(expected)

    if abs(r_best.rho - bound_value) > bound_tol:
        report.violations.append({
            "kind": "bound-mismatch",
            "detail": f"max rho {r_best.rho!r} vs bound {bound_value!r}",
        })
    if graph6_encode(g_best) != expected_bytes:
        report.violations.append({
            "kind": "argmax-mismatch",
            "graph6": _g6(g_best),
            "detail": f"expected {expected_bytes.decode('ascii')}",
        })
    unique, tied = _resolve_argmax(results, best)
    report.argmax_unique = unique
    if not unique:
        report.violations.append({"kind": "argmax-tied", "graphs": tied})

    # independent re-validation of the flagged extremal graph
    recheck = spectral_radius(g_best, compute_tol / 10)
    if abs(recheck.rho - r_best.rho) > 100 * compute_tol:
        report.violations.append({
            "kind": "revalidation-drift",
            "detail": f"{r_best.rho!r} vs {recheck.rho!r} at tighter tolerance",
        })
    freeness = {"dcc-free": has_dcc, "dcc1-free": has_dcc1,
                "k1p4-free": has_k1_join_p4}[filter_name]
    if freeness(g_best):
        report.violations.append({
            "kind": "revalidation-freeness",
            "graph6": _g6(g_best),
        })

    runner = max(
        (r.rho for i, (_, r) in enumerate(results) if i != best), default=None
    )
    report.details = {"runner_up_rho": runner, "filter": filter_name}
    report.runtime_seconds = time.perf_counter() - start
    return report


def verify_theorem_dcc(n: int, compute_tol: float = 1e-12,
                       compare_tol: float = 1e-8, jobs: int = 1) -> VerificationReport:
    """Exhaustively check that among connected DCC-free graphs on n vertices
    the radius maximum is 1/2 + sqrt(2n - 15/4), attained only by K_{1,1,n-2}."""
    if not 3 <= n <= MAX_ENUM_N:
        raise ValueError(f"supported range is 3 <= n <= {MAX_ENUM_N}")
    return _report_extremal(
        "thm_dcc", n, "dcc-free",
        expected=build_family(FamilySpec("k11m", n=n)),
        bound_value=closed_form_radius("K11m", n),
        bound_tol=compare_tol,
        compute_tol=compute_tol,
        jobs=jobs,
    )


def _dcc1_expectation(n: int, compare_tol: float) -> tuple[Graph, float, float]:
    if n <= 4:
        return complete_graph(n), float(n - 1), compare_tol
    if n == 5:
        return build_family(FamilySpec("f1")), 3.0861, 5e-4
    if n <= 9:
        return (build_family(FamilySpec("k11m", n=n)),
                closed_form_radius("K11m", n), compare_tol)
    return (build_family(FamilySpec("k3m", n=n)),
            closed_form_radius("K3m", n), compare_tol)


def verify_theorem_dcc1(n: int, compute_tol: float = 1e-12,
                        compare_tol: float = 1e-8, jobs: int = 1) -> VerificationReport:
    """Exhaustively check the piecewise radius bound for DCC1-free graphs and
    its extremal family (complete graph / pendant-K_4 / K_{1,1,n-2} / K_{3,n-3})."""
    if not 3 <= n <= MAX_ENUM_N:
        raise ValueError(f"supported range is 3 <= n <= {MAX_ENUM_N}")
    expected, bound, tol = _dcc1_expectation(n, compare_tol)
    return _report_extremal(
        "thm_dcc1", n, "dcc1-free",
        expected=expected,
        bound_value=bound,
        bound_tol=tol,
        compute_tol=compute_tol,
        jobs=jobs,
    )


def k1p4_bound(n: int, root_tol: float = 1e-12) -> float:
    """Piecewise bound for hub-over-path-free graphs: (n+1)/2 for odd n,
    (1 + sqrt(n^2+1))/2 for n = 0 (mod 4), else the largest root of the cubic."""
    if n % 2 == 1:
        return (n + 1) / 2
    if n % 4 == 0:
        return (1 + math.sqrt(n * n + 1)) / 2
    return largest_real_root(hn_cubic(n), root_tol)


def verify_theorem_k1p4(n: int, compute_tol: float = 1e-12,
                        compare_tol: float = 1e-8, jobs: int = 1) -> VerificationReport:
    """Exhaustively check the hub-over-path-free radius bound and that the
    joined-matching family is the unique maximiser."""
    if not 6 <= n <= 9:
        raise ValueError("supported range is 6 <= n <= 9")
    return _report_extremal(
        "thm_k1p4", n, "k1p4-free",
        expected=build_family(FamilySpec("hn", n=n)),
        bound_value=k1p4_bound(n),
        bound_tol=compare_tol,
        compute_tol=compute_tol,
        jobs=jobs,
    )


def verify_edge_lemmas(n: int, jobs: int = 1) -> list[VerificationReport]:
    """Edge bounds: DCC-free graphs have at most 2n-3 edges; DCC1-free graphs
    (n >= 6) at most 3n-9 with bipartite equality exactly at K_{3,n-3}."""
    if not 3 <= n <= MAX_ENUM_N:
        raise ValueError(f"supported range is 3 <= n <= {MAX_ENUM_N}")
    reports = []

    start = time.perf_counter()
    graphs = enumerate_connected(n, "dcc-free", jobs=jobs)
    bound = 2 * n - 3
    over = [g for g in graphs if g.edge_count > bound]
    max_edges = max(g.edge_count for g in graphs)
    report = VerificationReport(
        theorem="lemma_edge_dcc", n=n, graphs_scanned=len(graphs),
        bound_value=float(bound),
        violations=[{"kind": "edge-bound", "graph6": _g6(g),
                     "edges": g.edge_count} for g in over],
        details={"max_edges": max_edges,
                 "sharp": max_edges == bound},
    )
    report.runtime_seconds = time.perf_counter() - start
    reports.append(report)

    if n >= 6:
        start = time.perf_counter()
        graphs = enumerate_connected(n, "dcc1-free", jobs=jobs)
        bound = 3 * n - 9
        over = [g for g in graphs if g.edge_count > bound]
        equal_bip = [g for g in graphs
                     if g.edge_count == bound and is_bipartite(g)]
        expected = canonical_form(build_family(FamilySpec("k3m", n=n)))
        violations = [{"kind": "edge-bound", "graph6": _g6(g), "edges": g.edge_count}
                      for g in over]
        if len(equal_bip) != 1 or graph6_encode(equal_bip[0]) != expected:
            violations.append({
                "kind": "bipartite-equality",
                "graphs": [_g6(g) for g in equal_bip],
                "detail": f"expected exactly {expected.decode('ascii')}",
            })
        report = VerificationReport(
            theorem="lemma_edge_dcc1", n=n, graphs_scanned=len(graphs),
            bound_value=float(bound),
            argmax_canonical=_g6(equal_bip[0]) if len(equal_bip) == 1 else None,
            argmax_unique=len(equal_bip) == 1,
            violations=violations,
            details={"max_edges": max(g.edge_count for g in graphs),
                     "bipartite_equality_count": len(equal_bip)},
        )
        report.runtime_seconds = time.perf_counter() - start
        reports.append(report)
    return reports
