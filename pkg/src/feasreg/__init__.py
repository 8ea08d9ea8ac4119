"""Feasible-region toolkit for uniform hypergraphs.

Exact rational densities, forbidden-family detectors with replayable
witnesses, extremal constructions, boundary-curve evaluators, and a search
engine over the attainable (shadow density, edge density) pairs.
"""

from .bounds import (
    BoundReport,
    Curve,
    check_cancellative_inequalities,
    curve_cancellative_left,
    curve_cancellative_right,
    curve_covering_clique,
    curve_fano_lower,
    curve_general_k_lower,
    curve_prior_cancellative,
    curve_universal,
    fisher_ryan_chain,
    kruskal_katona_max_edges,
    parse_curve,
    solve_shadow_parameter,
)
from .constructions import (
    blow_up,
    clique_plus_isolated,
    fano_blowup,
    fano_plane,
    parse_construction,
    star,
    steiner_triple_system,
    sts_blowup,
    turan,
    turan_edge_count,
    turan_plus_isolated,
)
from .explore import (
    ExploreReport,
    SearchConfig,
    algorithm1_reduce,
    anneal_towards,
    canonical_form,
    enumerate_free,
    max_edges_given_shadow,
    point_cloud,
    random_maximal_free,
)
from .families import (
    ForbiddenFamily,
    Witness,
    contains_covering_clique,
    contains_D_member,
    contains_Dr_member,
    contains_expansion,
    is_cancellative,
    is_free,
    verify_witness,
)
from .hypergraph import DensityPoint, Hypergraph

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "Curve",
    "DensityPoint",
    "ExploreReport",
    "ForbiddenFamily",
    "Hypergraph",
    "SearchConfig",
    "Witness",
    "algorithm1_reduce",
    "anneal_towards",
    "blow_up",
    "canonical_form",
    "check_cancellative_inequalities",
    "clique_plus_isolated",
    "contains_D_member",
    "contains_Dr_member",
    "contains_covering_clique",
    "contains_expansion",
    "curve_cancellative_left",
    "curve_cancellative_right",
    "curve_covering_clique",
    "curve_fano_lower",
    "curve_general_k_lower",
    "curve_prior_cancellative",
    "curve_universal",
    "enumerate_free",
    "fano_blowup",
    "fano_plane",
    "fisher_ryan_chain",
    "is_cancellative",
    "is_free",
    "kruskal_katona_max_edges",
    "max_edges_given_shadow",
    "parse_construction",
    "parse_curve",
    "point_cloud",
    "random_maximal_free",
    "solve_shadow_parameter",
    "star",
    "steiner_triple_system",
    "sts_blowup",
    "turan",
    "turan_edge_count",
    "turan_plus_isolated",
    "verify_witness",
]
