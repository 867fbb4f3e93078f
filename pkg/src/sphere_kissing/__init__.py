"""Kissing number 4n - 11 for punctured spheres: exact construction and counting checks."""

from .census import Census, adjacency_edge_count, census, meridian_exclusion_report
from .exact import ExactLength, PrecisionExhausted
from .geodesics import (
    BeltClass,
    GeodesicClass,
    Kind,
    MeridianClass,
    classify,
    enumerate_short_classes,
    homotopic,
)
from .hyperbolic import HyperbolicTriangle, block_check, triangle_area
from .lattice import Chimney, LatticeVec
from .rows import row_feasibility
from .surface import SphereModel, SurfaceParams, build, constants_report
from .upper_bound import (
    ArcSystem,
    CurvePartition,
    construction_tightness,
    euler_edge_bound,
    laminar_compatible,
    laminar_max,
)

__version__ = "0.1.0"

__all__ = [
    "ArcSystem",
    "BeltClass",
    "Census",
    "Chimney",
    "CurvePartition",
    "ExactLength",
    "GeodesicClass",
    "HyperbolicTriangle",
    "Kind",
    "LatticeVec",
    "MeridianClass",
    "PrecisionExhausted",
    "SphereModel",
    "SurfaceParams",
    "adjacency_edge_count",
    "block_check",
    "build",
    "census",
    "classify",
    "constants_report",
    "construction_tightness",
    "enumerate_short_classes",
    "euler_edge_bound",
    "homotopic",
    "laminar_compatible",
    "laminar_max",
    "meridian_exclusion_report",
    "row_feasibility",
    "triangle_area",
]
