"""
This module gathers the min-plus curve algebra: token-bucket arrival curves, rate-latency service
curves, deviations and operations.
"""
from .base import TokenBucket, RateLatency, Unbounded, UNBOUNDED
from .curves import ConcaveCurve, ConvexCurve
from .deviations import h_dev, v_dev, intersection_delay
from .operations import (
    eval_concave,
    eval_convex,
    add_concave,
    shape,
    propagate,
    convolve_service,
    residual_service,
)

__all__ = [
    "TokenBucket",
    "RateLatency",
    "Unbounded",
    "UNBOUNDED",
    "ConcaveCurve",
    "ConvexCurve",
    "eval_concave",
    "eval_convex",
    "add_concave",
    "shape",
    "propagate",
    "h_dev",
    "v_dev",
    "intersection_delay",
    "convolve_service",
    "residual_service",
]
