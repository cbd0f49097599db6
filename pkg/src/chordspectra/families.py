"""Named graph families, each paired with its reference spectral radius.

Every family comes with a fixed vertex labelling (documented on its builder)
so constructed graphs are byte-stable under graph6, a vertex/edge-count
formula, a reference radius (closed form, exact polynomial, or a tabulated
4-digit value stored verbatim and never re-derived), and the structural
freeness property it is known for.

Families
--------
k11m               K_{1,1,m}: two dominating vertices over an independent set
k3m                K_{3,m}: complete bipartite with small side 3
f1                 K_4 with a pendant edge (K_2 and K_4 sharing a vertex)
hnr                (K_1 v rK_3) coalesced with K_{3,n-3r-3} at a small-side vertex
hnr_prime          same, coalesced at a big-side vertex instead
k1_triangles       K_1 v rK_3
k1_k2_triangles    K_1 v (K_2 u kK_3)
k1_k1_triangles    K_1 v (K_1 u kK_3)
k1_star_triangles  K_1 v (K_{1,t} u kK_3)
wheel              K_1 v C_r
hn                 independent set joined over a matching (plus a lone vertex
                   when n = 2 mod 4): the hub-over-path-free extremal family
f0                 K_{2,2+y} plus an edge inside the big side and a pendant
f2                 K_{2,x+2} plus one edge inside the big side
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .chords import has_dcc, has_dcc1, has_k1_join_p4
from .graphs import (
    Graph,
    coalesce,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    join,
)
from .spectral import IntPolynomial, closed_form_radius, largest_real_root

TABLE_TOLERANCE = 5e-4   # paper tables carry four digits
EXACT_TOLERANCE = 1e-8


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer parameters (n, r, t as applicable)."""

    name: str
    n: int | None = None
    r: int | None = None
    t: int | None = None


@dataclass(frozen=True)
class RadiusExpectation:
    """Reference value for a family's spectral radius.

    ``kind`` is "closed_form", "polynomial" (largest real root) or "table"
    (verbatim 4-digit value); ``tolerance`` is the allowed deviation when
    comparing against a computed radius.
    """

    kind: str
    tolerance: float
    value: float | None = None
    polynomial: IntPolynomial | None = None

    def resolve(self, root_tol: float = 1e-12) -> float:
        if self.kind == "polynomial":
            assert self.polynomial is not None
            return largest_real_root(self.polynomial, root_tol)
        assert self.value is not None
        return self.value


@dataclass(frozen=True)
class FreenessCheck:
    target: str       # "dcc", "dcc1" or "k1p4"
    expect_absent: bool
    passed: bool


@dataclass(frozen=True)
class FreenessReport:
    spec: FamilySpec
    checks: tuple[FreenessCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "family": self.spec.name,
            "params": {k: v for k, v in (("n", self.spec.n), ("r", self.spec.r),
                                         ("t", self.spec.t)) if v is not None},
            "checks": [{"target": c.target,
                        "expected": "absent" if c.expect_absent else "present",
                        "passed": c.passed} for c in self.checks],
            "passed": self.passed,
        }


def _need(value: int | None, what: str) -> int:
    if value is None:
        raise ValueError(f"family needs parameter {what}")
    return value


# -- parameter validation ----------------------------------------------------


def _params_k11m(spec: FamilySpec) -> int:
    n = _need(spec.n, "n")
    if n < 3:
        raise ValueError("k11m needs n >= 3")
    return n


def _params_k3m(spec: FamilySpec) -> int:
    n = _need(spec.n, "n")
    if n < 4:
        raise ValueError("k3m needs n >= 4")
    return n


def _params_f1(spec: FamilySpec) -> int:
    if spec.n not in (None, 5):
        raise ValueError("f1 is a fixed graph on 5 vertices")
    return 5


def _params_hnr(spec: FamilySpec) -> tuple[int, int]:
    n, r = _need(spec.n, "n"), _need(spec.r, "r")
    if r < 1 or n < 3 * r + 4:
        raise ValueError("hnr needs r >= 1 and n >= 3r + 4")
    return n, r


def _params_k1_triangles(spec: FamilySpec) -> int:
    n = spec.n if spec.n is not None else (3 * _need(spec.r, "n or r") + 1)
    if spec.r is not None and n != 3 * spec.r + 1:
        raise ValueError("k1_triangles needs n = 3r + 1")
    if n < 4 or n % 3 != 1:
        raise ValueError("k1_triangles needs n >= 4 with n = 1 (mod 3)")
    return n


def _params_k1_k2_triangles(spec: FamilySpec) -> int:
    n = _need(spec.n, "n")
    if n < 6 or n % 3 != 0:
        raise ValueError("k1_k2_triangles needs n >= 6 with n = 0 (mod 3)")
    return n


def _params_k1_k1_triangles(spec: FamilySpec) -> int:
    n = _need(spec.n, "n")
    if n < 5 or n % 3 != 2:
        raise ValueError("k1_k1_triangles needs n >= 5 with n = 2 (mod 3)")
    return n


def _params_k1_star_triangles(spec: FamilySpec) -> tuple[int, int]:
    n, t = _need(spec.n, "n"), _need(spec.t, "t")
    if t < 2 or n < t + 5 or (n - t) % 3 != 2:
        raise ValueError("k1_star_triangles needs t >= 2, n >= t + 5, n - t = 2 (mod 3)")
    return n, t


def _params_wheel(spec: FamilySpec) -> int:
    r = spec.r if spec.r is not None else (_need(spec.n, "r or n") - 1)
    if spec.n is not None and spec.n != r + 1:
        raise ValueError("wheel needs n = r + 1")
    if r < 3:
        raise ValueError("wheel needs rim length r >= 3")
    return r


def _params_hn(spec: FamilySpec) -> int:
    n = _need(spec.n, "n")
    if n < 6:
        raise ValueError("hn needs n >= 6")
    return n


def _params_f0(spec: FamilySpec) -> int:
    n = _need(spec.n, "n")
    if n not in (6, 7):
        raise ValueError("f0 is defined for n in {6, 7}")
    return n


def _params_f2(spec: FamilySpec) -> int:
    n = _need(spec.n, "n")
    if n not in (5, 6, 7):
        raise ValueError("f2 is defined for n in {5, 6, 7}")
    return n


# -- builders ----------------------------------------------------------------


def _triangles(r: int) -> Graph:
    return disjoint_union([complete_graph(3)] * r)


def _build_k11m(spec: FamilySpec) -> Graph:
    return complete_multipartite([1, 1, _params_k11m(spec) - 2])


def _build_k3m(spec: FamilySpec) -> Graph:
    return complete_multipartite([3, _params_k3m(spec) - 3])


def _build_f1(spec: FamilySpec) -> Graph:
    # vertex 0 carries both the pendant edge and the K_4
    _params_f1(spec)
    return coalesce(complete_graph(2), 0, complete_graph(4), 0)


def _build_hnr(spec: FamilySpec) -> Graph:
    # hub 0, triangle vertices 1..3r; small side of the bipartite block is
    # {0, 3r+1, 3r+2}, big side the rest
    n, r = _params_hnr(spec)
    m = n - 3 * r - 3
    return coalesce(join(complete_graph(1), _triangles(r)), 0,
                    complete_multipartite([3, m]), 0)


def _build_hnr_prime(spec: FamilySpec) -> Graph:
    n, r = _params_hnr(spec)
    m = n - 3 * r - 3
    return coalesce(join(complete_graph(1), _triangles(r)), 0,
                    complete_multipartite([3, m]), 3)


def _build_k1_triangles(spec: FamilySpec) -> Graph:
    n = _params_k1_triangles(spec)
    return join(complete_graph(1), _triangles((n - 1) // 3))


def _build_k1_k2_triangles(spec: FamilySpec) -> Graph:
    n = _params_k1_k2_triangles(spec)
    inner = disjoint_union([complete_graph(2), _triangles((n - 3) // 3)])
    return join(complete_graph(1), inner)


def _build_k1_k1_triangles(spec: FamilySpec) -> Graph:
    n = _params_k1_k1_triangles(spec)
    inner = disjoint_union([complete_graph(1), _triangles((n - 2) // 3)])
    return join(complete_graph(1), inner)


def _build_k1_star_triangles(spec: FamilySpec) -> Graph:
    n, t = _params_k1_star_triangles(spec)
    star = complete_multipartite([1, t])  # K_{1,t}, centre first
    inner = disjoint_union([star, _triangles((n - t - 2) // 3)])
    return join(complete_graph(1), inner)


def _build_wheel(spec: FamilySpec) -> Graph:
    return join(complete_graph(1), cycle_graph(_params_wheel(spec)))


def _build_hn(spec: FamilySpec) -> Graph:
    # independent side first, then the matching pairs (and the lone vertex last)
    n = _params_hn(spec)
    if n % 4 == 1:
        i, j, lone = (n + 1) // 2, (n - 1) // 4, False
    elif n % 4 == 3:
        i, j, lone = (n - 1) // 2, (n + 1) // 4, False
    elif n % 4 == 0:
        i, j, lone = n // 2, n // 4, False
    else:
        i, j, lone = n // 2, (n - 2) // 4, True
    blocks = [complete_graph(2)] * j + ([complete_graph(1)] if lone else [])
    independents = disjoint_union([complete_graph(1)] * i)
    return join(independents, disjoint_union(blocks))


def _build_f0(spec: FamilySpec) -> Graph:
    # two-side {0,1}; big side: u=2, star centre 3, extra vertices 4..3+y;
    # pendant vertex last, hung on u
    n = _params_f0(spec)
    y = n - 5
    g = complete_multipartite([2, 2 + y]).add_edge(2, 3)
    pend = Graph(g.n + 1, list(g.adj) + [0])
    return pend.add_edge(2, g.n)


def _build_f2(spec: FamilySpec) -> Graph:
    # bipartition ({u=0, w=1}, {2..x+3}); the added inner edge is (2,3)
    n = _params_f2(spec)
    x = n - 4
    return complete_multipartite([2, x + 2]).add_edge(2, 3)


# -- counts, expectations, freeness -----------------------------------------


def _counts(spec: FamilySpec) -> tuple[int, int]:
    """Documented (vertex, edge) count formula per family."""
    name = spec.name
    if name == "k11m":
        n = _params_k11m(spec)
        return n, 2 * n - 3
    if name == "k3m":
        n = _params_k3m(spec)
        return n, 3 * (n - 3)
    if name == "f1":
        return 5, 7
    if name in ("hnr", "hnr_prime"):
        n, r = _params_hnr(spec)
        return n, 3 * n - 3 * r - 9
    if name == "k1_triangles":
        n = _params_k1_triangles(spec)
        return n, 2 * (n - 1)
    if name == "k1_k2_triangles":
        n = _params_k1_k2_triangles(spec)
        return n, 2 * n - 3
    if name == "k1_k1_triangles":
        n = _params_k1_k1_triangles(spec)
        return n, 2 * n - 3
    if name == "k1_star_triangles":
        n, _ = _params_k1_star_triangles(spec)
        return n, 2 * n - 3
    if name == "wheel":
        r = _params_wheel(spec)
        return r + 1, 2 * r
    if name == "hn":
        n = _params_hn(spec)
        if n % 4 == 1:
            i, j = (n + 1) // 2, (n - 1) // 4
        elif n % 4 == 3:
            i, j = (n - 1) // 2, (n + 1) // 4
        elif n % 4 == 0:
            i, j = n // 2, n // 4
        else:
            i, j = n // 2, (n - 2) // 4
        return n, i * (n - i) + j
    if name == "f0":
        n = _params_f0(spec)
        return n, 2 * n - 4
    if name == "f2":
        n = _params_f2(spec)
        return n, 2 * n - 3
    raise ValueError(f"unknown family {spec.name!r}")


def _expect_k11m(spec: FamilySpec) -> RadiusExpectation:
    n = _params_k11m(spec)
    return RadiusExpectation("closed_form", EXACT_TOLERANCE, closed_form_radius("K11m", n))


def _expect_k3m(spec: FamilySpec) -> RadiusExpectation:
    n = _params_k3m(spec)
    return RadiusExpectation("closed_form", EXACT_TOLERANCE, closed_form_radius("K3m", n))


def _expect_f1(spec: FamilySpec) -> RadiusExpectation:
    _params_f1(spec)
    return RadiusExpectation("table", TABLE_TOLERANCE, 3.0861)


def hnr_quartic(n: int, r: int) -> IntPolynomial:
    """Exact characteristic polynomial of the 4-block quotient of hnr."""
    return IntPolynomial([1, -2, 6 * r - 3 * n + 9, 6 * n - 18 * r - 18,
                          6 * n * r - 18 * r - 18 * r * r])


def _expect_hnr(spec: FamilySpec) -> RadiusExpectation:
    n, r = _params_hnr(spec)
    return RadiusExpectation("polynomial", EXACT_TOLERANCE, polynomial=hnr_quartic(n, r))


def _expect_hnr_prime(spec: FamilySpec) -> RadiusExpectation:
    n, r = _params_hnr(spec)
    if n != 3 * r + 6:
        raise ValueError("hnr_prime has a recorded radius only at n = 3r + 6, "
                         "where it is isomorphic to hnr")
    return _expect_hnr(spec)


def _expect_k1_triangles(spec: FamilySpec) -> RadiusExpectation:
    n = _params_k1_triangles(spec)
    return RadiusExpectation("closed_form", EXACT_TOLERANCE, 1 + math.sqrt(n))


def k1_k2_triangles_cubic(n: int) -> IntPolynomial:
    return IntPolynomial([1, -3, -(n - 3), n + 1])


def k1_k1_triangles_cubic(n: int) -> IntPolynomial:
    return IntPolynomial([1, -2, -(n - 1), 2])


def hn_cubic(n: int) -> IntPolynomial:
    """Cubic whose largest root bounds the hub-over-path-free class, n = 2 (mod 4)."""
    if n % 4 != 2:
        raise ValueError("the cubic applies to n = 2 (mod 4)")
    return IntPolynomial([1, -1, -(n * n // 4), n // 2])


def _expect_k1_k2_triangles(spec: FamilySpec) -> RadiusExpectation:
    n = _params_k1_k2_triangles(spec)
    return RadiusExpectation("polynomial", EXACT_TOLERANCE,
                             polynomial=k1_k2_triangles_cubic(n))


def _expect_k1_k1_triangles(spec: FamilySpec) -> RadiusExpectation:
    n = _params_k1_k1_triangles(spec)
    return RadiusExpectation("polynomial", EXACT_TOLERANCE,
                             polynomial=k1_k1_triangles_cubic(n))


def _expect_hn(spec: FamilySpec) -> RadiusExpectation:
    n = _params_hn(spec)
    if n % 2 == 1:
        return RadiusExpectation("closed_form", EXACT_TOLERANCE, (n + 1) / 2)
    if n % 4 == 0:
        return RadiusExpectation("closed_form", EXACT_TOLERANCE,
                                 (1 + math.sqrt(n * n + 1)) / 2)
    return RadiusExpectation("polynomial", EXACT_TOLERANCE, polynomial=hn_cubic(n))


_F0_TABLE = {6: 2.9439, 7: 3.2054}
_F2_TABLE = {5: 2.8858, 6: 3.1413, 7: 3.4142}


def _expect_f0(spec: FamilySpec) -> RadiusExpectation:
    return RadiusExpectation("table", TABLE_TOLERANCE, _F0_TABLE[_params_f0(spec)])


def _expect_f2(spec: FamilySpec) -> RadiusExpectation:
    return RadiusExpectation("table", TABLE_TOLERANCE, _F2_TABLE[_params_f2(spec)])


def _no_expectation(spec: FamilySpec) -> RadiusExpectation:
    raise ValueError(f"family {spec.name!r} has no recorded radius expectation")


@dataclass(frozen=True)
class _Family:
    build: Callable[[FamilySpec], Graph]
    params: Callable[[FamilySpec], object]
    expect: Callable[[FamilySpec], RadiusExpectation]
    freeness: Callable[[FamilySpec], tuple[tuple[str, bool], ...]]
    describe: str


def _free(*targets: str):
    def claims(spec: FamilySpec) -> tuple[tuple[str, bool], ...]:
        return tuple((t, True) for t in targets)
    return claims


def _wheel_claims(spec: FamilySpec) -> tuple[tuple[str, bool], ...]:
    r = _params_wheel(spec)
    if r == 3:  # the degenerate wheel is K_4
        return (("dcc1", True),)
    return (("k1p4", False),)


FAMILIES: dict[str, _Family] = {
    "k11m": _Family(_build_k11m, _params_k11m, _expect_k11m, _free("dcc"),
                    "K_{1,1,n-2} (n >= 3): extremal among DCC-free graphs"),
    "k3m": _Family(_build_k3m, _params_k3m, _expect_k3m, _free("dcc1"),
                   "K_{3,n-3} (n >= 4): extremal among DCC1-free graphs for large n"),
    "f1": _Family(_build_f1, _params_f1, _expect_f1, _free("dcc1"),
                  "K_4 plus a pendant edge: the 5-vertex DCC1-free extremal graph"),
    "hnr": _Family(_build_hnr, _params_hnr, _expect_hnr, _free("dcc1"),
                   "(K_1 v rK_3) + K_{3,n-3r-3} sharing a small-side vertex "
                   "(n >= 3r+4, r >= 1)"),
    "hnr_prime": _Family(_build_hnr_prime, _params_hnr, _expect_hnr_prime, _free("dcc1"),
                         "(K_1 v rK_3) + K_{3,n-3r-3} sharing a big-side vertex"),
    "k1_triangles": _Family(_build_k1_triangles, _params_k1_triangles,
                            _expect_k1_triangles, _free("dcc1"),
                            "K_1 v rK_3 (n = 3r+1): radius 1 + sqrt(n)"),
    "k1_k2_triangles": _Family(_build_k1_k2_triangles, _params_k1_k2_triangles,
                               _expect_k1_k2_triangles, _free("dcc1"),
                               "K_1 v (K_2 u kK_3) (n = 3k+3)"),
    "k1_k1_triangles": _Family(_build_k1_k1_triangles, _params_k1_k1_triangles,
                               _expect_k1_k1_triangles, _free("dcc1"),
                               "K_1 v (K_1 u kK_3) (n = 3k+2)"),
    "k1_star_triangles": _Family(_build_k1_star_triangles, _params_k1_star_triangles,
                                 _no_expectation, _free("dcc1"),
                                 "K_1 v (K_{1,t} u kK_3) (t >= 2, n = t+2+3k)"),
    "wheel": _Family(_build_wheel, _params_wheel, _no_expectation, _wheel_claims,
                     "K_1 v C_r (r >= 3); contains a hub-over-path for r >= 4"),
    "hn": _Family(_build_hn, _params_hn, _expect_hn, _free("k1p4"),
                  "independent set joined over a matching (n >= 6): extremal "
                  "among hub-over-path-free graphs"),
    "f0": _Family(_build_f0, _params_f0, _expect_f0, _free("dcc1"),
                  "K_{2,n-4} plus an inner edge and a pendant (n in {6,7})"),
    "f2": _Family(_build_f2, _params_f2, _expect_f2, _free("dcc1"),
                  "K_{2,n-2} plus one inner edge (n in {5,6,7})"),
}

_DETECTORS = {"dcc": has_dcc, "dcc1": has_dcc1, "k1p4": has_k1_join_p4}


def build_family(spec: FamilySpec) -> Graph:
    """Construct the family member; raises ValueError out of domain."""
    fam = FAMILIES.get(spec.name)
    if fam is None:
        raise ValueError(f"unknown family {spec.name!r}")
    g = fam.build(spec)
    n, e = _counts(spec)
    assert (g.n, g.edge_count) == (n, e), \
        f"{spec.name} count formula mismatch: built ({g.n}, {g.edge_count}), expected ({n}, {e})"
    return g


def expected_radius(spec: FamilySpec) -> RadiusExpectation:
    fam = FAMILIES.get(spec.name)
    if fam is None:
        raise ValueError(f"unknown family {spec.name!r}")
    return fam.expect(spec)


def expected_counts(spec: FamilySpec) -> tuple[int, int]:
    return _counts(spec)


def verify_family_freeness(spec: FamilySpec) -> FreenessReport:
    """Run the family's recorded structural claims through the detectors."""
    fam = FAMILIES.get(spec.name)
    if fam is None:
        raise ValueError(f"unknown family {spec.name!r}")
    g = build_family(spec)
    checks = []
    for target, expect_absent in fam.freeness(spec):
        present = _DETECTORS[target](g)
        checks.append(FreenessCheck(target, expect_absent, present != expect_absent))
    return FreenessReport(spec, tuple(checks))


def list_families() -> list[dict]:
    return [{"name": name, "description": fam.describe} for name, fam in FAMILIES.items()]
