"""Geometry: boundary construction, norms, circles, rotundity."""

from .boundary import (ArcPiece, BoundarySpec, GammaGraphPiece, PointPiece,
                       SegmentPiece)
from .construct import L1Params, assemble_boundary, check_params, construct_l1
from .curve import (concavity_gate, g_eval, gamma_dd, gamma_eval, l0_norm,
                    smallest_concave_m)
from .intersect import (Classification, ClosedSegment, IntersectionReport,
                        IsolatedPoint, intersect_circles)
from .serialize import params_from_json, params_hash, params_to_json, summarize
from .spaces import (EuclideanSpace, NormedSpace, PlaneSpace, TwoSumSpace,
                     aux_a, is_rotund, norm, same_direction, two_sum)
from .vec import E1, E2, Vec2

__all__ = [
    "ArcPiece", "BoundarySpec", "GammaGraphPiece", "PointPiece",
    "SegmentPiece", "L1Params", "assemble_boundary", "check_params",
    "construct_l1", "concavity_gate", "g_eval", "gamma_dd", "gamma_eval",
    "l0_norm", "smallest_concave_m", "Classification", "ClosedSegment",
    "IntersectionReport", "IsolatedPoint", "intersect_circles",
    "params_from_json", "params_hash", "params_to_json", "summarize",
    "EuclideanSpace", "NormedSpace", "PlaneSpace", "TwoSumSpace", "aux_a",
    "is_rotund", "norm", "same_direction", "two_sum", "E1", "E2", "Vec2",
]
