"""Exact computations around minimal-volume sufficient enlargements of
polyhedral normed spaces, totally unimodular zonotopes and lattice tilings."""

from .core import (
    PluckerVector,
    PreconditionError,
    RationalMatrix,
    ShapeError,
    cauchy_binet,
    complementary_check,
    det,
    det_perturb_bound,
    laplace_expand,
    laplace_sign,
    plucker,
)
from .zonotope import (
    HexagonKind,
    Location,
    Zonotope,
    canonicalize,
    classify_hexagon,
    contains,
    hrep,
    is_parallelepiped,
    support,
    vertices2d,
    volume,
)
from .tumat import forest_scaling, gomory_certificate, is_tu, td_membership, tu_violation
from .mvse import (
    coordinate_projection,
    enumerate_parallelepiped_mvse,
    find_circuit,
    hexagonal_subspace,
    make_projection,
    make_space,
    minimize_ratio_search,
    mvse_volume,
    normalize_laa,
    plucker_relation_check,
    random_projection,
    volume_ratio,
)
from .tiling import Lattice, det_volume_check, lattice_search, td_tiling_pipeline, tile_verify
from .bmdist import bm_upper_bound

__version__ = "0.1.0"
