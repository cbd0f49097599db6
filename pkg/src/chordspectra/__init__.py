"""Spectral extremal verification toolkit for chorded-cycle problems."""

from .chords import (
    BondyCheck,
    CycleWitness,
    bondy_bound_holds,
    check_edge_bound_dcc,
    check_edge_bound_dcc1,
    czipszer_mindegree_check,
    find_chorded_cycle,
    find_dcc,
    find_dcc1,
    find_k1_join_p4,
    has_chorded_cycle,
    has_dcc,
    has_dcc1,
    has_k1_join_p4,
    longest_cycle,
)
from .families import (
    FamilySpec,
    FreenessReport,
    RadiusExpectation,
    build_family,
    expected_counts,
    expected_radius,
    list_families,
    verify_family_freeness,
)
from .graphs import (
    Graph,
    Graph6Error,
    build_basic,
    coalesce,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    graph6_decode,
    graph6_encode,
    is_bipartite,
    is_connected,
    join,
    min_degree,
    path_graph,
    two_core,
    two_core_vertices,
)
from .search import (
    VerificationReport,
    canonical_form,
    canonical_graph,
    coarsest_equitable_partition,
    enumerate_connected,
    exact_radius_order,
    verify_edge_lemmas,
    verify_theorem_dcc,
    verify_theorem_dcc1,
    verify_theorem_k1p4,
)
from .spectral import (
    ConvergenceError,
    CoalescenceComparison,
    IntPolynomial,
    QuotientMatrix,
    SpectralResult,
    char_poly,
    closed_form_radius,
    compare_coalescences,
    compare_radii,
    kelmans_rotation,
    largest_real_root,
    quotient_matrix,
    separation_threshold,
    spectral_radius,
    verify_two_walk_identity,
)

__version__ = "0.1.0"
