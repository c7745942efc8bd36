"""Exact rational-distance point sets on circles, spheres, euclidean spaces and ellipses."""
from .circle_group import CirclePoint, compose, halve, in_qtan4, inverse, is_root_of_unity, power
from .circle_sets import (
    PythParam,
    coverage_probe,
    gen_dense_circle_set,
    gen_params,
    in_X,
    pair_distance,
    point_of,
)
from .ellipse_sets import (
    Ellipse,
    EllipseBase,
    base_angle_status,
    ellipse_pair_distance_sq,
    gen_ellipse_set,
    hyperbolic_scale_check,
    odd_multiple_coords,
    standard_ellipse,
)
from .exact_core import (
    PointSet,
    RationalClass,
    classify,
    integer_sqrt,
    pairwise_distance_sq,
    rational_sqrt,
    verify_rational_set,
    verify_scaled_type,
)
from .lifting import (
    LiftConfig,
    affine_rank,
    build_rational_set,
    integral_set,
    is_cospherical,
    lift_once,
)
from .sphere_map import (
    dist_from_e,
    phi,
    phi_inv,
    transfer_plane_to_sphere,
    transfer_sphere_to_plane,
    verify_t32,
)

__version__ = "0.1.0"
