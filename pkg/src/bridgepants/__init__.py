"""Invariants of 2-bridge knots: Schubert normal forms, Farey graph geodesics,
bridge and pants complexities, twist numbers and hyperbolic volume bounds."""

__version__ = "0.1.0"

from .farey import (
    ContinuedFraction,
    FareyPath,
    Slope,
    bfs_distance_oracle,
    cf_expand,
    cf_value,
    farey_distance,
    geodesic,
    is_farey_edge,
    reduce,
    truncation_path,
)
from .twobridge import TwoBridgeKnot, normalize, parse_knot
from .complexity import known_complexity, pants_distance_02, splitting_report
from .volume import bounds_for_knot, lobachevsky, v3
