"""
This module contains the min-plus operations on curves used by the analyses: aggregation,
shaping, output-burst propagation, service convolution and left-over service.
"""
import itertools
import math
from typing import List, Tuple, Union

from tsnc.minplus.base import TokenBucket, RateLatency, Unbounded, UNBOUNDED
from tsnc.minplus.curves import ConcaveCurve, ConvexCurve
from tsnc.minplus.deviations import check_curve_stability, crossing_time
from tsnc.utils.errors import UnstableError
from tsnc.utils.validators import validate_non_negative

__all__ = [
    "eval_concave",
    "eval_convex",
    "add_concave",
    "shape",
    "propagate",
    "convolve_service",
    "residual_service",
]


def eval_concave(curve: ConcaveCurve, t: float) -> float:
    """Value of an arrival curve at `t >= 0`, with `alpha(0) = alpha(0+)`."""
    return curve(t)


def eval_convex(curve: ConvexCurve, t: float) -> float:
    """Value of a service curve at `t >= 0`."""
    return curve(t)


def add_concave(a: ConcaveCurve, b: ConcaveCurve) -> ConcaveCurve:
    """Pointwise sum of two arrival curves.

    `min_i a_i + min_j b_j = min_{i,j} (a_i + b_j)`, so the sum is the canonical form of all
    pairwise sums of token buckets.
    """
    return ConcaveCurve(
        TokenBucket(rate=first.rate + second.rate, burst=first.burst + second.burst)
        for first, second in itertools.product(a.pieces, b.pieces))


def shape(alpha: ConcaveCurve, sigma: Union[TokenBucket, Unbounded]) -> ConcaveCurve:
    """Arrival curve after a greedy shaper `sigma`, i.e. `min(alpha, sigma)`.

    Args:
        alpha (ConcaveCurve): Arrival curve before the shaper.
        sigma (TokenBucket or UNBOUNDED): The shaper, usually the link capacity as rate and the
            packet size as burst. `UNBOUNDED` leaves `alpha` unchanged.
    """
    if sigma is UNBOUNDED:
        return alpha
    return ConcaveCurve(alpha.pieces + (sigma,))


def propagate(alpha: ConcaveCurve, d: float) -> ConcaveCurve:
    """Output arrival curve `t -> alpha(t + d)` of a server with delay bound `d`."""
    d = validate_non_negative(d, "d")
    if d == 0.:
        return alpha
    return ConcaveCurve(
        TokenBucket(rate=piece.rate, burst=piece.burst + piece.rate * d)
        for piece in alpha.pieces)


def _segments(beta: ConvexCurve) -> List[Tuple[float, float]]:
    """(slope, length) of the linear segments after the first latency, the last is infinite."""
    breakpoints = beta.breakpoints()
    lengths = [end - start for start, end in zip(breakpoints[:-1], breakpoints[1:])]
    lengths.append(math.inf)
    return [(piece.rate, length) for piece, length in zip(beta.pieces, lengths)]


def convolve_service(
        b1: Union[ConvexCurve, Unbounded],
        b2: Union[ConvexCurve, Unbounded]
) -> Union[ConvexCurve, Unbounded]:
    """Min-plus convolution of two service curves (servers in tandem).

    The latencies add up and the segments of both curves are concatenated by increasing slope
    until the first infinite one. `UNBOUNDED` is the neutral element.
    """
    if b1 is UNBOUNDED:
        return b2
    if b2 is UNBOUNDED:
        return b1
    x, y = b1.latency + b2.latency, 0.
    pieces = []
    for slope, length in sorted(_segments(b1) + _segments(b2)):
        pieces.append(RateLatency(rate=slope, latency=x - y / slope))
        if math.isinf(length):
            break
        x += length
        y += slope * length
    return ConvexCurve(pieces)


def residual_service(beta: ConvexCurve, cross: ConcaveCurve) -> ConvexCurve:
    """Left-over service `[beta - cross]_+` under blind multiplexing.

    Args:
        beta (ConvexCurve): Service curve of the server.
        cross (ConcaveCurve): Aggregate arrival curve of the cross traffic.

    Returns:
        (ConvexCurve): The residual service curve.
    """
    if cross.is_zero:
        return beta
    try:
        check_curve_stability(cross, beta)
    except UnstableError as error:
        raise UnstableError(f"No left-over service: {error}") from error
    start = crossing_time(cross, beta)
    points = sorted({start}.union(t for t in cross.breakpoints() + beta.breakpoints()
                                  if t > start))
    pieces = []
    for t in points:
        value = 0. if t == start else max(0., beta(t) - cross(t))
        slope = beta.slope_at(t) - cross.slope_at(t)
        if slope > 0.:
            pieces.append(RateLatency(rate=slope, latency=max(0., t - value / slope)))
    return ConvexCurve(pieces)
