"""Exact Steiner 3-eccentricity analysis on trees.

Library surface: the :class:`~steiner_ecc.tree.Tree` model with codecs and
structural queries, exact Steiner metrics, monotone tree transformations,
extremal-family constructors with closed-form maxima, and an exhaustive
small-order census with mechanical verification of the package's claims.
"""

from .errors import (
    AlreadyBalanced,
    BadCode,
    BadK,
    BadVertexIds,
    CapExceeded,
    EmptySet,
    HasCycle,
    Incomparable,
    Infeasible,
    InfeasibleSequence,
    InvalidSite,
    LengthMismatch,
    NotConnected,
    NotGeneralizedStar,
    ParseError,
    SteinerEccError,
    SumMismatch,
    TooSmall,
    TreeBuildError,
)
from .tree import (
    Tree,
    bfs_distances,
    branch_vertices,
    canonical_form,
    center,
    degree_sequence,
    diameter,
    diametric_path,
    distance,
    distance_to_path,
    eccentricity,
    format_edge_list,
    format_prufer,
    from_edge_list,
    from_prufer,
    is_caterpillar,
    is_generalized_star,
    is_isomorphic,
    is_path,
    leaves,
    parse_edge_list_text,
    parse_prufer_text,
    path_eccentricity,
    radius,
    random_tree,
    segment_sequence,
    segments,
    to_prufer,
    tree_path,
)
from .steiner import (
    aecc3,
    aecc_k,
    ecc3_all,
    ecc3_fast,
    ecc3_via_lemma,
    ecc_k_bruteforce,
    steiner3_halfperimeter,
    steiner_distance,
)
from .transforms import (
    PiSite,
    RebalanceMove,
    SigmaSite,
    TransformOutcome,
    balance_generalized_star,
    find_pi_sites,
    find_sigma_sites,
    pi_transform,
    rebalance_step,
    reduce_to_caterpillar,
    reduce_to_generalized_star,
    sigma_transform,
)
from .extremal import (
    balanced_star,
    broom,
    caterpillar_from_degree_sequence,
    compare_extremal,
    degree_sequence_bound,
    family_bound,
    generalized_star,
    internal_count,
    majorizes,
    uniform_branch_caterpillar,
)
from .census import (
    ClassRecord,
    TreeRef,
    VerificationReport,
    enumerate_free_trees,
    group_trees,
    report_to_csv,
    report_to_json,
    verify,
)

__version__ = "0.1.0"
