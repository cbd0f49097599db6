"""Spectral radius computation and the exact quotient-matrix layer.

The numeric side is a deterministic shifted power iteration (iterating A + I
keeps the dominant eigenvalue strictly largest in modulus even on bipartite
graphs) with a Rayleigh-quotient estimate and an infinity-norm residual
contract.  The exact side builds quotient matrices of vertex partitions with
rational entries, computes characteristic polynomials in exact arithmetic, and
isolates largest real roots with Sturm counts refined by bisection, so the
polynomial identities of the underlying theory are checked without floating
point doubt.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from collections.abc import Iterable, Sequence

from .graphs import Graph, coalesce, connected_components, is_connected, _bits


class ConvergenceError(RuntimeError):
    """Power iteration did not meet the residual tolerance within the cap."""

    def __init__(self, message: str, rho: float, residual: float, iterations: int):
        super().__init__(message)
        self.rho = rho
        self.residual = residual
        self.iterations = iterations


@dataclass(frozen=True)
class SpectralResult:
    """Spectral radius estimate with convergence metadata.

    ``perron`` is the unit positive eigenvector (None for disconnected input),
    ``residual`` is ``max_v |(A x)_v - rho x_v|``.
    """

    rho: float
    perron: tuple[float, ...] | None
    iterations: int
    residual: float
    tol: float

    def as_dict(self) -> dict:
        return {
            "rho": self.rho,
            "perron": list(self.perron) if self.perron is not None else None,
            "iterations": self.iterations,
            "residual": self.residual,
            "tol": self.tol,
        }


DEFAULT_TOL = 1e-12
MAX_ITERATIONS = 10**6


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL,
                    max_iterations: int = MAX_ITERATIONS) -> SpectralResult:
    """Largest adjacency eigenvalue, deterministic (all-ones start vector).

    Disconnected graphs get the maximum over components and no Perron vector.
    """
    if g.n == 0:
        raise ValueError("spectral radius of the empty graph is undefined")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if not is_connected(g):
        rho, residual, iterations = 0.0, 0.0, 0
        for comp in connected_components(g):
            sub = g.induced(_bits(comp))
            res = spectral_radius(sub, tol, max_iterations)
            rho = max(rho, res.rho)
            residual = max(residual, res.residual)
            iterations += res.iterations
        return SpectralResult(rho, None, iterations, residual, tol)
    if g.edge_count == 0:  # single vertex
        return SpectralResult(0.0, (1.0,), 0, 0.0, tol)

    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    x = [1.0 / math.sqrt(n)] * n
    rho = 0.0
    residual = math.inf
    for it in range(1, max_iterations + 1):
        y = [sum(x[w] for w in nbrs[v]) for v in range(n)]
        rho = sum(xv * yv for xv, yv in zip(x, y))
        residual = max(abs(yv - rho * xv) for xv, yv in zip(x, y))
        if residual <= tol:
            return SpectralResult(rho, tuple(x), it, residual, tol)
        norm = math.sqrt(sum((yv + xv) ** 2 for xv, yv in zip(x, y)))
        x = [(yv + xv) / norm for xv, yv in zip(x, y)]
    raise ConvergenceError(
        f"power iteration stalled at residual {residual:.3e} after {max_iterations} steps",
        rho, residual, max_iterations,
    )


def closed_form_radius(family: str, n: int) -> float:
    """Exact closed forms: K_{1,1,n-2} gives 1/2 + sqrt(2n - 15/4) and
    K_{3,n-3} gives sqrt(3(n-3))."""
    if family == "K11m":
        if n < 3:
            raise ValueError("K_{1,1,n-2} needs n >= 3")
        return 0.5 + math.sqrt(2 * n - 3.75)
    if family == "K3m":
        if n < 4:
            raise ValueError("K_{3,n-3} needs n >= 4")
        return math.sqrt(3 * (n - 3))
    raise ValueError(f"no closed form for family {family!r}")


def verify_two_walk_identity(g: Graph, res: SpectralResult, u: int) -> float:
    """Residual of the degree-weighted two-walk identity at vertex ``u``:
    rho^2 x_u equals d(u) x_u plus the sum over all other vertices v of
    |N(v) inter N(u)| x_v."""
    if res.perron is None:
        raise ValueError("two-walk identity needs a connected graph's Perron vector")
    x = res.perron
    au = g.adj[u]
    lhs = res.rho * res.rho * x[u]
    rhs = au.bit_count() * x[u]
    for v in range(g.n):
        if v != u:
            common = (g.adj[v] & au).bit_count()
            if common:
                rhs += common * x[v]
    return abs(lhs - rhs)


def separation_threshold(a: SpectralResult, b: SpectralResult) -> float:
    """Two numeric radii closer than this are treated as indistinguishable."""
    return 10.0 * (a.residual + b.residual)


def compare_radii(a: SpectralResult, b: SpectralResult) -> int:
    """+1 / -1 when separated beyond threshold, 0 when indistinguishable."""
    gap = a.rho - b.rho
    thr = separation_threshold(a, b)
    if gap > thr:
        return 1
    if gap < -thr:
        return -1
    return 0


# ---------------------------------------------------------------------------
# Kelmans rotation


def kelmans_rotation(g: Graph, u: int, v: int, moved: Iterable[int]) -> Graph:
    """Replace the edges vw (w in ``moved``) by uw.

    ``moved`` must be a nonempty subset of N(v) minus the closed neighbourhood
    of ``u``; the edge count is preserved.  With x_u >= x_v in the Perron
    vector this strictly increases the spectral radius.
    """
    if u == v:
        raise ValueError("rotation endpoints must differ")
    if not is_connected(g):
        raise ValueError("rotation is defined on connected graphs")
    moved = sorted(set(moved))
    if not moved:
        raise ValueError("moved set is empty")
    allowed = g.adj[v] & ~g.adj[u] & ~(1 << u)
    for w in moved:
        if not allowed >> w & 1:
            raise ValueError(f"vertex {w} is not in N(v) \\ N[u]")
    out = g
    for w in moved:
        out = out.remove_edge(v, w).add_edge(u, w)
    return out


# ---------------------------------------------------------------------------
# coalescence comparisons


@dataclass(frozen=True)
class CoalescenceComparison:
    """Numeric evidence for the coalescence ordering lemmas.

    ``mode`` is "same-host" (one graph, two attachment vertices: the
    hypothesis is rho(H - v1) < rho(H - v2)) or "two-host" (equal-order hosts:
    the hypothesis is rho(H1) > rho(H2) and rho(H1 - v1) <= rho(H2 - v2)).
    The conclusion under test is rho(coalescence 1) > rho(coalescence 2).
    """

    mode: str
    rho_h1: float
    rho_h2: float
    rho_h1_del: float
    rho_h2_del: float
    rho_coal1: float
    rho_coal2: float
    hypothesis_holds: bool
    conclusion_holds: bool
    indistinguishable: bool

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in (
            "mode", "rho_h1", "rho_h2", "rho_h1_del", "rho_h2_del",
            "rho_coal1", "rho_coal2", "hypothesis_holds", "conclusion_holds",
            "indistinguishable")}


def _delete_vertex(g: Graph, v: int) -> Graph:
    return g.induced(w for w in range(g.n) if w != v)


def compare_coalescences(g1: Graph, u: int, h1: Graph, v1: int,
                         h2: Graph, v2: int, tol: float = DEFAULT_TOL) -> CoalescenceComparison:
    """Compute all radii relevant to the coalescence lemmas and report whether
    hypothesis and conclusion hold (a sanity oracle)."""
    same = h1 == h2
    if same:
        if not is_connected(h1):
            raise ValueError("same-host comparison needs a connected host")
    else:
        if h1.n != h2.n:
            raise ValueError("two-host comparison needs hosts of equal order")
        if not is_connected(g1):
            raise ValueError("two-host comparison needs the base graph connected")

    r_h1 = spectral_radius(h1, tol)
    r_h2 = spectral_radius(h2, tol)
    r_d1 = spectral_radius(_delete_vertex(h1, v1), tol)
    r_d2 = spectral_radius(_delete_vertex(h2, v2), tol)
    c1 = spectral_radius(coalesce(g1, u, h1, v1), tol)
    c2 = spectral_radius(coalesce(g1, u, h2, v2), tol)

    fuzzy = False
    if same:
        cmp_del = compare_radii(r_d2, r_d1)
        hypothesis = cmp_del == 1
        fuzzy |= cmp_del == 0 and r_d1.rho != r_d2.rho
    else:
        cmp_h = compare_radii(r_h1, r_h2)
        cmp_del = compare_radii(r_d1, r_d2)
        hypothesis = cmp_h == 1 and cmp_del <= 0
        fuzzy |= cmp_h == 0
    cmp_c = compare_radii(c1, c2)
    conclusion = cmp_c == 1
    fuzzy |= cmp_c == 0

    return CoalescenceComparison(
        "same-host" if same else "two-host",
        r_h1.rho, r_h2.rho, r_d1.rho, r_d2.rho, c1.rho, c2.rho,
        hypothesis, conclusion, fuzzy,
    )


# ---------------------------------------------------------------------------
# exact layer: quotient matrices, characteristic polynomials, real roots


@dataclass(frozen=True)
class QuotientMatrix:
    """Quotient of the adjacency matrix over a vertex partition.

    ``entries[i][j]`` is the average number of neighbours a block-i vertex has
    in block j (exact rational); the partition is equitable when every such
    count is constant over the block, in which case the largest eigenvalue of
    the quotient equals the spectral radius of a connected host graph.
    """

    blocks: tuple[frozenset[int], ...]
    entries: tuple[tuple[Fraction, ...], ...]
    equitable: bool

    def as_dict(self) -> dict:
        return {
            "blocks": [sorted(b) for b in self.blocks],
            "entries": [[[e.numerator, e.denominator] for e in row] for row in self.entries],
            "equitable": self.equitable,
        }


def quotient_matrix(g: Graph, partition: Sequence[Iterable[int]]) -> QuotientMatrix:
    blocks = tuple(frozenset(b) for b in partition)
    if not blocks or any(not b for b in blocks):
        raise ValueError("partition blocks must be nonempty")
    seen: set[int] = set()
    for b in blocks:
        if b & seen:
            raise ValueError("partition blocks overlap")
        seen |= b
    if seen != set(range(g.n)):
        raise ValueError("partition does not cover the vertex set")

    masks = []
    for b in blocks:
        m = 0
        for v in b:
            m |= 1 << v
        masks.append(m)
    equitable = True
    entries = []
    for bi, mi in zip(blocks, masks):
        row = []
        for mj in masks:
            counts = {(g.adj[v] & mj).bit_count() for v in bi}
            if len(counts) == 1:
                row.append(Fraction(counts.pop()))
            else:
                equitable = False
                row.append(Fraction(sum((g.adj[v] & mj).bit_count() for v in bi), len(bi)))
        entries.append(tuple(row))
    return QuotientMatrix(blocks, tuple(entries), equitable)


@dataclass(frozen=True)
class IntPolynomial:
    """Exact polynomial, coefficients degree-descending (leading first)."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[int | Fraction]):
        coeffs = [Fraction(c) for c in coefficients]
        while len(coeffs) > 1 and coeffs[0] == 0:
            coeffs.pop(0)
        if not coeffs:
            coeffs = [Fraction(0)]
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_monic(self) -> bool:
        return self.coefficients[0] == 1

    def __call__(self, x):
        acc = 0 if isinstance(x, Fraction) else 0.0
        for c in self.coefficients:
            acc = acc * x + (c if isinstance(x, Fraction) else float(c))
        return acc

    def int_coefficients(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coefficients):
            raise ValueError("polynomial has non-integer coefficients")
        return [c.numerator for c in self.coefficients]

    def as_json(self) -> list:
        try:
            return self.int_coefficients()
        except ValueError:
            return [[c.numerator, c.denominator] for c in self.coefficients]


def char_poly(q: QuotientMatrix) -> IntPolynomial:
    """Characteristic polynomial of the quotient, exact (Faddeev-LeVerrier)."""
    m = len(q.blocks)
    B = [list(row) for row in q.entries]
    M = [[Fraction(1) if i == j else Fraction(0) for j in range(m)] for i in range(m)]
    coeffs = [Fraction(1)]
    for k in range(1, m + 1):
        BM = [[sum(B[i][t] * M[t][j] for t in range(m)) for j in range(m)] for i in range(m)]
        ck = -sum(BM[i][i] for i in range(m)) / k
        coeffs.append(ck)
        M = [[BM[i][j] + (ck if i == j else 0) for j in range(m)] for i in range(m)]
    return IntPolynomial(coeffs)


def _poly_derivative(c: list[Fraction]) -> list[Fraction]:
    n = len(c) - 1
    return [ci * (n - i) for i, ci in enumerate(c[:-1])] or [Fraction(0)]


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and any(x != 0 for x in a):
        if a[0] == 0:
            a.pop(0)
            continue
        factor = a[0] / b[0]
        for i in range(len(b)):
            a[i] -= factor * b[i]
        a.pop(0)
    while len(a) > 1 and a[0] == 0:
        a.pop(0)
    return a or [Fraction(0)]


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while not (len(b) == 1 and b[0] == 0):
        a, b = b, _poly_rem(a, b)
    lead = a[0]
    return [c / lead for c in a]


def _sturm_chain(c: list[Fraction]) -> list[list[Fraction]]:
    chain = [c, _poly_derivative(c)]
    while not (len(chain[-1]) == 1 and chain[-1][0] == 0):
        r = _poly_rem(chain[-2], chain[-1])
        chain.append([-x for x in r])
    return chain[:-1]


def _eval(c: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for ci in c:
        acc = acc * x + ci
    return acc


def _variations(chain: list[list[Fraction]], x: Fraction) -> int:
    signs = []
    for c in chain:
        v = _eval(c, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _squarefree(coeffs: list[Fraction]) -> list[Fraction]:
    g = _poly_gcd(coeffs, _poly_derivative(coeffs))
    return _poly_quot(coeffs, g) if len(g) > 1 else coeffs


def largest_root_interval(p: IntPolynomial, width: float | Fraction,
                          lower: float | None = None) -> tuple[Fraction, Fraction]:
    """Exact rational bracket (lo, hi] around the largest real root.

    Refined until it is at most ``width`` wide and contains exactly one
    distinct root, with no roots above it.  The polynomial must be monic; a
    Cauchy bound caps the search from above, ``lower`` (when given, e.g. a
    Perron lower bound) from below.
    """
    if not p.is_monic:
        raise ValueError("largest_real_root expects a monic polynomial")
    if p.degree < 1:
        raise ValueError("constant polynomial has no root")
    coeffs = _squarefree(list(p.coefficients))
    chain = _sturm_chain(coeffs)
    hi = Fraction(1) + max(abs(c) for c in coeffs)
    lo = Fraction(lower) if lower is not None else -hi
    v_lo = _variations(chain, lo)
    v_hi = _variations(chain, hi)
    if v_lo - v_hi < 1:
        raise ValueError("no real root in bracket")
    width = Fraction(width)
    while hi - lo > width or v_lo - v_hi > 1:
        mid = (lo + hi) / 2
        v_mid = _variations(chain, mid)
        if v_mid - v_hi >= 1:
            lo, v_lo = mid, v_mid
        else:
            hi, v_hi = mid, v_mid
    return lo, hi


def largest_real_root(p: IntPolynomial, tol: float = 1e-10,
                      lower: float | None = None) -> float:
    """Largest real root, bracketed with exact Sturm counts and bisected to ``tol``."""
    lo, hi = largest_root_interval(p, tol, lower)
    return float((lo + hi) / 2)


def count_roots_between(p: IntPolynomial, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval (lo, hi]."""
    coeffs = _squarefree(list(p.coefficients))
    chain = _sturm_chain(coeffs)
    return _variations(chain, Fraction(lo)) - _variations(chain, Fraction(hi))


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Monic greatest common divisor over the rationals."""
    return IntPolynomial(_poly_gcd(list(p.coefficients), list(q.coefficients)))


def _poly_quot(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    q: list[Fraction] = []
    while len(a) >= len(b):
        factor = a[0] / b[0]
        q.append(factor)
        for i in range(len(b)):
            a[i] -= factor * b[i]
        a.pop(0)
    return q or [Fraction(0)]
