"""Max-plus (tropical) convexity on R^n with a strictly positive unit vector.

The max-plus segment between two points, the hulls it generates, the metric
under which those hulls are exactly the geodesically convex sets, Hausdorff
distances between compact sets, nearest-point and fixed-point search, and a
deterministic SVG renderer for the 2-D pictures.
"""

from .approx import FixpointResult, SelfMap, best_approx_point, fixpoint_search
from .backend import BACKEND_NAME, HAVE_COMPILED, available_backends, get_backend
from .core import (
    METRICS,
    Space,
    abs_val,
    distance,
    gauge_from_one,
    gauge_to_one,
    join,
    lower,
    maxplus_dist,
    maxplus_norm,
    meet,
    neg_part,
    norm,
    pos_part,
    unit_dist,
    unit_norm,
    upper,
)
from .errors import DimensionMismatchError, DomainError, InputFormatError
from .geodesic import (
    Span,
    breakpoints,
    dyadic_chain,
    midpoint,
    midpoint_chain,
    point_at,
    point_at_clamped,
    point_at_fraction,
    span,
)
from .hull import (
    MemberResult,
    Polytope,
    ball_polytope_2d,
    hull_diameter,
    hull_sample,
    join_all,
    member,
    member_defect,
    members_batch,
    project,
    remove_redundant,
    segment_member,
)
from .hyperspace import (
    BallJoinReport,
    Cloud,
    CompactSet,
    ball_join_check,
    dist_point_set,
    hausdorff,
    hull_of,
    neighborhood_member,
)
from .render import Scene, render_ball, render_geodesic, render_polytope, svg_document
from .verify import CHECKS, run_checks

__version__ = "0.1.0"
