"""
This module contains the fixed-point iteration of the total flow analysis for networks whose
induced graph has cyclic dependencies.
"""
import logging
import math
from typing import Dict, Optional

import networkx as nx
from tqdm import tqdm

from tsnc.analysis.aggregate import analysed_servers, evaluate_servers, source_arrival
from tsnc.analysis.results import ServerState
from tsnc.model import AnalysisOptions, OutputPortNetwork, induced_graph
from tsnc.utils.errors import DivergenceError
from tsnc.utils.tracker import MultiValueTracker

__all__ = ["DEFAULT_MAX_ITERATIONS", "DEFAULT_EXPLOSION_FACTOR", "DEFAULT_REL_TOL",
           "ceil_to", "fixed_point"]

logger = logging.getLogger(__name__)

DEFAULT_MAX_ITERATIONS = 10000
DEFAULT_EXPLOSION_FACTOR = 1e12
DEFAULT_REL_TOL = 1e-9


def ceil_to(value: float, precision: Optional[float]) -> float:
    """Rounds `value` up to a multiple of `precision` (no rounding if `precision` is `None`)."""
    if precision is None:
        return value
    return math.ceil(value / precision) * precision


def fixed_point(
        net: OutputPortNetwork,
        options: AnalysisOptions,
        *,
        max_iterations: int = DEFAULT_MAX_ITERATIONS,
        explosion_factor: float = DEFAULT_EXPLOSION_FACTOR,
        rel_tol: float = DEFAULT_REL_TOL,
        verbose: bool = False
) -> Dict[str, ServerState]:
    """Iterates full passes of the total flow analysis until the server delays are stable.

    Every pass starts from the delays of the previous one (zero at first) and recomputes the
    propagated arrival curves and the delay of every server. With `options.ceil_precision` the
    delays are rounded up to the quantum before being propagated and the iteration stops when
    they repeat exactly; otherwise it stops when they change by at most `rel_tol`.

    Args:
        net (OutputPortNetwork): The network, cyclic or not.
        options (AnalysisOptions): The analysis options.
        max_iterations (int): Number of passes before giving up. Defaults to 10000.
        explosion_factor (float): A propagated burst larger than `explosion_factor` times the
            source burst (at least one bit) of its flow stops the iteration. Defaults to 1e12.
        rel_tol (float): Relative tolerance of the stopping test without CEIL. Defaults to 1e-9.
        verbose (bool): Show a progress bar over the passes. Defaults to `False`.

    Returns:
        (Dict[str, ServerState]): The state of every server crossed by a flow.

    Raises:
        DivergenceError: If no finite bound is found, with a cycle of the induced graph.
    """
    precision = options.ceil_precision
    servers = analysed_servers(net)
    delays = {name: 0. for name in servers}
    limits = {flow.name: explosion_factor * max(source_arrival(flow, options).burst, 1.)
              for flow in net.flows}
    tracker = MultiValueTracker()
    tolerance = 0. if precision is not None else rel_tol
    for iteration in tqdm(range(1, max_iterations + 1), desc="fixed point", disable=not verbose):
        states = evaluate_servers(net, servers, options, delays)
        delays = {name: ceil_to(state.delay, precision) for name, state in states.items()}
        tracker.update(delays)
        for state in states.values():
            for flow_name, arrival in state.arrivals.items():
                if arrival.burst > limits[flow_name]:
                    raise DivergenceError(
                        f"No finite bound found: the burst of flow '{flow_name}' exceeds "
                        f"{limits[flow_name]} b after {iteration} passes.", cycle=_cycle(net))
        if tracker.is_stable(tolerance):
            logger.info(f"Fixed point of network '{net.name}' reached after {iteration} passes.")
            return {name: ServerState(arrivals=state.arrivals, aggregate=state.aggregate,
                                      delay=delays[name], backlog=state.backlog)
                    for name, state in states.items()}
        logger.debug(f"Pass {iteration}: delays changed at {tracker.changed_keys(tolerance)}.")
    raise DivergenceError(f"No finite bound found for network '{net.name}' within "
                          f"{max_iterations} passes.", cycle=_cycle(net))


def _cycle(net: OutputPortNetwork):
    try:
        return [source for source, _ in nx.find_cycle(induced_graph(net))]
    except nx.NetworkXNoCycle:
        return []
