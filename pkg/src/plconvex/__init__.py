"""Exact convexity verification for closed piecewise-linear hypersurfaces."""

from .checker import (
    CheckOptions,
    Convex,
    CornerResult,
    InvalidInput,
    NotConvex,
    Verdict,
    check_convexity,
    check_traditional,
    corner_report,
    precheck_edge_count,
)
from .complexes import (
    CellId,
    FaceCounts,
    StandardFormComplex,
    WheelStar,
    face_counts,
    validate_standard,
    wheel_star,
)
from .local import (
    Cone,
    ConeRealization3D,
    FlatPass,
    Inconsistent,
    check_cone_convex,
    is_folded,
    predicate_P,
    reduce_to_3d,
)
from .normals import (
    TraditionalFormComplex,
    facet_inner_direction_polygon,
    facet_normal_simplicial,
    ridge_normal_simplicial,
    to_standard,
)
from .oracle import (
    SupportSet,
    brute_hull_supports,
    dent,
    gen_convex_surface,
    is_hull_boundary,
)

__version__ = "0.1.0"

__all__ = [
    "CellId",
    "CheckOptions",
    "Cone",
    "ConeRealization3D",
    "Convex",
    "CornerResult",
    "FaceCounts",
    "FlatPass",
    "Inconsistent",
    "InvalidInput",
    "NotConvex",
    "StandardFormComplex",
    "SupportSet",
    "TraditionalFormComplex",
    "Verdict",
    "WheelStar",
    "brute_hull_supports",
    "check_cone_convex",
    "check_convexity",
    "check_traditional",
    "corner_report",
    "dent",
    "face_counts",
    "facet_inner_direction_polygon",
    "facet_normal_simplicial",
    "gen_convex_surface",
    "is_folded",
    "is_hull_boundary",
    "precheck_edge_count",
    "predicate_P",
    "reduce_to_3d",
    "ridge_normal_simplicial",
    "to_standard",
    "validate_standard",
    "wheel_star",
]
