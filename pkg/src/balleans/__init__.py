"""Exact coarse geometry on subgroup lattices.

Subgroups of Z^n, of finite abelian groups, and of the divisible chains are
carried as exact integer values; the commensurability distance, covering set
metric, Hamming metric, and explicit ballean constructions are all computed
without floating point. Logarithms appear only at display time.
"""

from .lattices import (
    ExtNat,
    INFINITE,
    Lattice,
    commensurable,
    full_lattice,
    index_in,
    lattice_from_generators,
    lattice_intersection,
    lattice_sum,
    log_subgroup_distance,
    member,
    saturation,
    trivial_lattice,
)
from .groups import (
    AsdimReport,
    CardinalToken,
    FAGSubgroup,
    FiniteAbelianGroup,
    GroupDescriptor,
    IsoPointsReport,
    PruferSubgroup,
    ReducedTorsionPart,
    all_subgroups,
    asdim_classify,
    component_census,
    fag_log_distance,
    iso_points_classify,
    prufer_log_distance,
)
from .ballean import (
    ExplicitBallean,
    FiniteSubset,
    HammingPoint,
    ZWindow,
    ball_iterate,
    bounded_ballean,
    cellularization,
    connected_components,
    coproduct_ballean,
    discrete_ballean,
    exp_ball_enumerate_centered_identity,
    exp_ball_membership,
    exp_hyperballean_of,
    g_exp_ball,
    hamming_distance,
    is_cellular,
    mu_report,
    mu_set_distance,
    product_ballean,
    validate_ballean,
)
from .witnesses import (
    PrimeTuple,
    TaxiPoint,
    VerificationReport,
    cyclic_subgroup_tree,
    dlog_closed_form,
    elementary_abelian_correspondence,
    hamming_embed,
    iota,
    lz_exp_ball,
    lz_exp_ball_general,
    lz_log_ball,
    prufer_ball,
    taxi_distance,
    verify_iota_quasi_isometry,
)

__version__ = "0.1.0"
