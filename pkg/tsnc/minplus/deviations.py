"""
This module contains the deviations between an arrival curve and a service curve: the FIFO
delay bound (horizontal deviation), the backlog bound (vertical deviation) and the delay bound
under arbitrary multiplexing (time to clear the backlog).

All three are exact for concave arrival and convex service curves: the distance functions are
concave (respectively convex) and piecewise linear, so only breakpoints need to be inspected.
"""
import math
from typing import Set

from tsnc.minplus.curves import ConcaveCurve, ConvexCurve
from tsnc.utils.errors import UnstableError

__all__ = ["h_dev", "v_dev", "intersection_delay", "check_curve_stability"]


def check_curve_stability(alpha: ConcaveCurve, beta: ConvexCurve) -> None:
    """Raises `UnstableError` unless the long-run arrival rate is below the service rate."""
    if not alpha.rate < beta.rate:
        raise UnstableError(f"Arrival rate {alpha.rate} b/s is not below the service rate "
                            f"{beta.rate} b/s, the bound is unbounded.")


def h_dev(alpha: ConcaveCurve, beta: ConvexCurve) -> float:
    """Maximum horizontal distance between `alpha` and `beta`, the FIFO delay bound.

    Args:
        alpha (ConcaveCurve): Arrival curve of the aggregate.
        beta (ConvexCurve): Service curve of the server.

    Returns:
        (float): `sup_t (beta^-1(alpha(t)) - t)` in seconds.
    """
    check_curve_stability(alpha, beta)
    candidates: Set[float] = {0.}
    candidates.update(alpha.breakpoints())
    for tau in beta.breakpoints():
        t = alpha.inverse(beta(tau))
        if math.isfinite(t):
            candidates.add(t)
    return max(0., max(beta.inverse(alpha(t)) - t for t in candidates))


def v_dev(alpha: ConcaveCurve, beta: ConvexCurve) -> float:
    """Maximum vertical distance between `alpha` and `beta`, the backlog bound in bits."""
    check_curve_stability(alpha, beta)
    candidates = {0.}
    candidates.update(alpha.breakpoints())
    candidates.update(beta.breakpoints())
    return max(alpha(t) - beta(t) for t in candidates)


def crossing_time(alpha: ConcaveCurve, beta: ConvexCurve) -> float:
    """Last time at which `beta - alpha` is not positive, the caller checks stability.

    `beta - alpha` is convex and not positive at `0+`, so it is not positive exactly on an
    interval starting at zero; the crossing lies on the segment after the last breakpoint of
    that interval.
    """
    points = sorted({0.}.union(alpha.breakpoints(), beta.breakpoints()))
    last = points[0]
    for t in points:
        if beta(t) - alpha(t) <= 0.:
            last = t
        else:
            break
    gap = beta(last) - alpha(last)
    slope = beta.slope_at(last) - alpha.slope_at(last)
    if gap == 0. or slope <= 0.:
        return last
    return last - gap / slope


def intersection_delay(alpha: ConcaveCurve, beta: ConvexCurve) -> float:
    """Delay bound under arbitrary multiplexing: `inf {t > 0 : beta(t) > alpha(t)}`.

    This is the time the server needs to clear its buffer. With a null arrival curve it is the
    first latency of `beta`.

    Args:
        alpha (ConcaveCurve): Arrival curve of the aggregate.
        beta (ConvexCurve): Service curve of the server.

    Returns:
        (float): The delay bound in seconds.
    """
    check_curve_stability(alpha, beta)
    return crossing_time(alpha, beta)
