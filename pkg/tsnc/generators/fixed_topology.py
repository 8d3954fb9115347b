"""
This module contains the generator of flows routed at random over a fixed topology of switches.
"""
import dataclasses
import logging
import os
from typing import Dict, List, Mapping, Optional, Sequence, Union

from tsnc.generators.base import GenParams, build_network, save_network
from tsnc.model import AnalysisOptions, OutputPortNetwork
from tsnc.utils.errors import DomainError

__all__ = ["STOP_PROBABILITY", "gen_fixed_topology"]

logger = logging.getLogger(__name__)

STOP_PROBABILITY = 0.5


def _check_connections(connections: Mapping[str, Sequence[str]]) -> Dict[str, List[str]]:
    if not connections:
        raise DomainError("The connections of a fixed topology must not be empty.")
    checked = {}
    for switch, neighbors in connections.items():
        if isinstance(neighbors, str) or not all(isinstance(name, str) for name in neighbors):
            raise DomainError(f"The neighbors of switch '{switch}' must be a list of names.")
        unknown = [name for name in neighbors if name not in connections]
        if unknown:
            raise DomainError(f"The neighbors {unknown} of switch '{switch}' are not switches "
                              f"of the topology.")
        checked[switch] = [name for name in neighbors if name != switch]
    return checked


def gen_fixed_topology(
        num_flows: int,
        connections: Mapping[str, Sequence[str]],
        params: Optional[GenParams] = None,
        seed: Optional[int] = None,
        options: Optional[AnalysisOptions] = None,
        save_path: Optional[Union[str, os.PathLike]] = None
) -> OutputPortNetwork:
    """Flows routed at random over a fixed topology of switches.

    Every switch is one server. Each flow starts at a switch drawn uniformly and walks to a
    uniformly drawn neighbor it has not visited yet; after the first hop it stops at every step
    with probability one half, and it stops when no unvisited neighbor is left. Range-valued
    parameters are drawn uniformly per server and per flow. All draws come from
    `numpy.random.default_rng(seed)` (PCG64): the routes first, then the server parameters, then
    the flow parameters.

    Args:
        num_flows (int): Number of flows (>= 1).
        connections (Mapping[str, Sequence[str]]): For every switch, the switches it can send to.
        params (GenParams, optional): Flow and server parameters. Defaults to `GenParams()`.
        seed (int, optional): Seed overriding `params.seed`. Defaults to `None`.
        options (AnalysisOptions, optional): Analysis options of the network.
        save_path (str or PathLike, optional): Also write the network to this JSON file.

    Returns:
        (OutputPortNetwork): The network with one server per switch and `num_flows` flows.
    """
    if isinstance(num_flows, bool) or not isinstance(num_flows, int) or num_flows < 1:
        raise DomainError(f"The number of flows must be an integer >= 1 and not '{num_flows}'.")
    graph = _check_connections(connections)
    params = params or GenParams()
    if seed is not None:
        params = dataclasses.replace(params, seed=seed)
    rng = params.rng()
    switches = list(graph)
    paths = []
    for _ in range(num_flows):
        path = [switches[rng.integers(len(switches))]]
        while True:
            candidates = [name for name in graph[path[-1]] if name not in path]
            if not candidates:
                break
            if len(path) > 1 and rng.random() < STOP_PROBABILITY:
                break
            path.append(candidates[rng.integers(len(candidates))])
        paths.append(path)
    logger.debug(f"Routed {num_flows} flows, longest path crosses {max(map(len, paths))} switches.")
    network = build_network(f"fixed-{num_flows}", switches, paths, params, options, rng=rng)
    if save_path is not None:
        save_network(network, save_path)
    return network
