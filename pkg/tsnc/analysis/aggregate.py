"""
This module contains the per-server step shared by the analyses: the arrival curve of each flow
at a server, the aggregate seen by the server under input shaping and the resulting bounds.
"""
import logging
from collections import defaultdict
from typing import Dict, Iterable, List, Mapping, Optional

from tsnc.minplus import (
    UNBOUNDED, ConcaveCurve, TokenBucket, add_concave, h_dev, intersection_delay, propagate,
    shape, v_dev
)
from tsnc.model import AnalysisOptions, Flow, Multiplexing, OutputPortNetwork, check_stability
from tsnc.analysis.results import ServerState
from tsnc.utils.errors import NetworkError, UnstableError

__all__ = ["source_arrival", "arrival_at", "server_state", "evaluate_servers",
           "analysed_servers", "check_network"]

logger = logging.getLogger(__name__)


def check_network(net: OutputPortNetwork) -> None:
    """Raises unless `net` has servers and every server is stable."""
    if not net.servers:
        raise NetworkError(f"Network '{net.name}' has no server to analyze.")
    unstable = check_stability(net)
    if unstable:
        raise UnstableError(f"The arrival rate reaches the service rate at {unstable} in "
                            f"network '{net.name}'.", servers=unstable)


def analysed_servers(net: OutputPortNetwork) -> List[str]:
    """Names of the servers crossed by at least one flow, in network order."""
    crossed = {name for flow in net.flows for name in flow.path}
    return [server.name for server in net.servers if server.name in crossed]


def source_arrival(flow: Flow, options: AnalysisOptions) -> ConcaveCurve:
    """Arrival curve of `flow` at its source; the packetizer adds one packet to every burst."""
    if not options.packetizer or flow.max_packet_length == 0.:
        return flow.arrival
    return ConcaveCurve(TokenBucket(rate=piece.rate, burst=piece.burst + flow.max_packet_length)
                        for piece in flow.arrival.pieces)


def arrival_at(
        flow: Flow,
        server_name: str,
        options: AnalysisOptions,
        delays: Mapping[str, float]
) -> ConcaveCurve:
    """Arrival curve of `flow` at `server_name`, propagated through the delays of the upstream
    servers of its path."""
    alpha = source_arrival(flow, options)
    for hop in flow.path[:flow.path.index(server_name)]:
        alpha = propagate(alpha, delays[hop])
    return alpha


def _predecessor(flow: Flow, server_name: str) -> Optional[str]:
    index = flow.path.index(server_name)
    return flow.path[index - 1] if index > 0 else None


def server_state(
        net: OutputPortNetwork,
        server_name: str,
        options: AnalysisOptions,
        delays: Mapping[str, float]
) -> ServerState:
    """Bounds at `server_name` given the delays of the servers upstream of it.

    The flows are grouped by the server they come from. With input shaping, a group coming from
    a server with a finite capacity C is shaped by the token bucket of rate C and burst the
    largest packet of the group; flows starting at the server are never shaped.

    Args:
        net (OutputPortNetwork): The network.
        server_name (str): The server.
        options (AnalysisOptions): The analysis options.
        delays (Mapping[str, float]): Delay bounds of (at least) the upstream servers.

    Returns:
        (ServerState): Arrival curves and bounds at the server.
    """
    server = net.server(server_name)
    arrivals: Dict[str, ConcaveCurve] = {}
    groups: Dict[Optional[str], List[Flow]] = defaultdict(list)
    for flow in net.flows_through(server_name):
        arrivals[flow.name] = arrival_at(flow, server_name, options, delays)
        groups[_predecessor(flow, server_name)].append(flow)

    shaped = []
    for predecessor, flows in groups.items():
        group = _sum(arrivals[flow.name] for flow in flows)
        if options.input_shaping and predecessor is not None:
            capacity = net.server(predecessor).capacity
            if capacity is not UNBOUNDED:
                packet = max(flow.max_packet_length for flow in flows)
                group = shape(group, TokenBucket(rate=capacity, burst=packet))
        shaped.append(group)
    aggregate = _sum(shaped)

    if options.multiplexing is Multiplexing.FIFO:
        delay = h_dev(aggregate, server.service)
    else:
        delay = intersection_delay(aggregate, server.service)
    backlog = v_dev(aggregate, server.service)
    logger.debug(f"{server_name}: delay {delay} s, backlog {backlog} b.")
    return ServerState(arrivals=arrivals, aggregate=aggregate, delay=delay, backlog=backlog)


def evaluate_servers(
        net: OutputPortNetwork,
        server_names: Iterable[str],
        options: AnalysisOptions,
        delays: Mapping[str, float]
) -> Dict[str, ServerState]:
    """States of several servers, all computed from the same upstream `delays`."""
    return {name: server_state(net, name, options, delays) for name in server_names}


def _sum(curves: Iterable[ConcaveCurve]) -> ConcaveCurve:
    total = None
    for curve in curves:
        total = curve if total is None else add_concave(total, curve)
    return ConcaveCurve.zero() if total is None else total
