"""slopewalk: exact enumeration and asymptotics of lattice paths below a
line of rational slope."""

from .exactmath import (
    TruncatedSeries,
    gen_binomial,
    jacobi_trudi_schur,
    newton_e_from_p,
    partitions,
)
from .lattice_enum import (
    CountTable,
    DistanceProfile,
    JumpPolynomial,
    RationalSlope,
    bijection_map,
    count_W_t,
    count_directed,
    count_ne_below,
    distance_profile,
    mean_area_scan,
    mean_excursion_area,
    min_y_distance,
    ne_to_directed,
)
from .kernel_series import (
    BranchSeries,
    KernelError,
    branch_coefficient,
    branch_series,
    meander_gf,
    power_sum,
    power_sum_coefficient,
    slope25_F0_G1,
    small_branch_symmetrics,
)
from .closed_forms import (
    IntegralityError,
    NoSolutionError,
    StartingPointFamily,
    bizley_series,
    general_slope_sum,
    general_sum,
    grossman_sum,
    half_tree_even_identity_check,
    knuth_sum,
    lattice_path_integral,
    log_tree_identity_check,
    naka_integral,
    rational_catalan,
    recurrence_check,
    starting_points,
    tree_series,
)
from .asymptotics import (
    AsymptoticProfile,
    Precision,
    RootFindError,
    StructuralConstants,
    an_bn_asymptotic,
    duchon_area_constant,
    kappa2_minpoly_residual,
    kernel_roots_at,
    knuth_constants,
    local_extractor,
    rotation_law_check,
    small_roots_tracked,
    structural_constants,
)

__version__ = "0.1.0"
