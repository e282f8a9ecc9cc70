"""Exact metric geometry of saturated monomial filtrations on toric singularities.

Saturated monomial filtrations on the local ring of a toric singularity are
in bijection with cobounded convex regions of the dual cone; this package
realizes that dictionary with exact rational arithmetic: multiplicities,
the Darvas-type d1 metric and the supnorm metric, geodesics and their
Duistermaat-Heckman measure, saturation/integral-closure/Rees operations,
the filtration lattice, and toric log canonical thresholds, each backed by
independent brute-force oracles.
"""

from .cones import Cone, Membership, dual_cone, hilbert_generators, membership, smooth_cone
from .errors import (
    ConeMismatch,
    DimensionMismatch,
    ModeMismatch,
    NoCommonBound,
    NonpositiveScale,
    NormalOutsideCone,
    NotCobounded,
    NotFullDimensional,
    NotInteriorValuation,
    NotKlt,
    NotMPrimary,
    NotQGorenstein,
    NotStronglyConvex,
    OutOfRangeT,
    ParseError,
    PointOutsideDualCone,
    ToleranceTooTight,
    ToricfiltError,
    UnsupportedRank,
    ValidationError,
)
from .filtrations import (
    AdicFiltration,
    SaturatedFiltration,
    TermwiseMeet,
    canonical_filtration,
    evaluate,
    filtration_subset,
    ideal_at,
    jumping_numbers,
    maximal_ideal,
    meet_filtrations,
    multiplicity,
    ord_value,
    saturate,
    saturated_join,
    scale_filtration,
    shadow_region,
)
from .geodesics import (
    DHGrid,
    Geodesic,
    dh_rectangle_mass,
    dh_union_mass,
    geodesic_cogauge,
    geodesic_ideal_at,
    geodesic_multiplicity,
    geodesic_region,
    lipschitz_constant,
)
from .ideals import (
    MonomialIdeal,
    colength,
    colength_of_power,
    ideal_sum,
    integral_closure,
    intersect_ideals,
    is_m_primary,
    multiplicity_ideal,
    newton_polyhedron,
    power,
    product,
    rees_valuations,
    staircase_contains,
)
from .metrics import (
    MetricReport,
    converges_plus,
    converges_weakly,
    d1,
    d1_coeff,
    d1_dinf_bound,
    d1_family_weighted,
    dinf,
    minimal_common_bound,
)
from .oracles import (
    RandomFixtureSpec,
    Tabulated1D,
    brute_multiplicity,
    brute_multiplicity_extrapolated,
    jumping_counterexample,
    jumping_decreasing_family,
    random_ideal,
    random_region,
)
from .regions import (
    CoboundedRegion,
    Halfspace,
    cogauge,
    covolume,
    hull_join,
    meet,
    region_from_vertices,
    scale_region,
    support_value,
    vrep,
)
from .singularities import (
    LctResult,
    ToricSingularity,
    gorenstein_vector,
    lct,
    lct_lipschitz_check,
    lct_semicontinuity_harness,
    log_discrepancy,
    normalized_volume,
    nvol_search,
    toric_volume,
)

__version__ = "0.1.0"
