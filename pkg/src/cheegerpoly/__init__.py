"""Cheeger constants of convex polygons and the stability of the polygonal Cheeger inequality."""

from .alignment import Alignment, StabilityRecord, align, aligned_deficit_record
from .cheeger import (
    CheegerReport,
    NotCheegerRegular,
    NotContained,
    cheeger_constant,
    cheeger_deficit,
    cheeger_formula,
    cheeger_radius,
    cheeger_set,
    cheeger_upper_bound,
    h_ball,
    h_regular,
    h_regular_closed_form,
    is_cheeger_regular,
    scaled_cheeger,
)
from .geometry import (
    CollinearVertex,
    DegenerateEdge,
    GeometryError,
    NonConvex,
    NonSimple,
    Polygon,
    RigidMotion,
    apply_motion,
    isoperimetric_gap,
    make_polygon,
    normalize_area,
    polygon_from_dict,
    polygon_from_json,
    regular_ngon,
    tau,
)
from .lab import (
    EnsembleReport,
    EpsTooLarge,
    perturb_ngon,
    perturbation_eps_max,
    random_convex_ngon,
    splitmix64,
    sweep_perturbation,
    tentacle_polygon,
    tentacle_series,
    verify_ensemble,
)
from .metrics import CertifiedDistance, boundary_touch_normalize, hausdorff_boundary, symmetric_difference_area
from .offsetting import ArcPolygon, inner_parallel, inradius, minkowski_disk, offset_edge_lengths

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
